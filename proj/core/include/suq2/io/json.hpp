#pragma once

#include "suq2/cqalg/peter_weyl.hpp"
#include "suq2/fourier/fourier.hpp"

#include <json.hpp>

namespace suq2::io {

using json = nlohmann::json;

// Rationals are strings "p/q"; a Laurent polynomial is a list of [t_exponent, rational]
// pairs with t = q^{1/2}.
json to_json(const mpq_class& x);
json to_json(const qarith::LPoly& p);
json to_json(const qarith::QScalar& x);
json to_json(const qarith::QRadical& x);
json to_json(const cqalg::Monomial& m);
json to_json(const cqalg::AlgebraElement& x);
json to_json(const cqalg::RadicalElement& x);
json to_json(const cqalg::SpinBlock& b);
json to_json(const qarith::QMat& m);
json to_json(const qarith::RMat& m);
json to_json(const fourier::ExactFourier& F);
json to_json(const fourier::NumericFourier& F);

mpq_class rational_from_json(const json& j);
qarith::LPoly lpoly_from_json(const json& j);
qarith::QScalar qscalar_from_json(const json& j);
qarith::QRadical qradical_from_json(const json& j);
cqalg::Monomial monomial_from_json(const json& j);
cqalg::AlgebraElement element_from_json(const json& j);
cqalg::RadicalElement radical_element_from_json(const json& j);
cqalg::SpinBlock spin_block_from_json(const json& j);
qarith::QMat qmat_from_json(const json& j);
qarith::RMat rmat_from_json(const json& j);
fourier::ExactFourier exact_fourier_from_json(const json& j);
fourier::NumericFourier numeric_fourier_from_json(const json& j);

}  // namespace suq2::io
