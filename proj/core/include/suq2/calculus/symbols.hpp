#pragma once

#include "suq2/cqalg/peter_weyl.hpp"
#include "suq2/qarith/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace suq2::calculus {

using cqalg::Spin;
using qarith::DMat;
using qarith::Mat;
using qarith::QMat;
using qarith::QRadical;
using qarith::QScalar;
using qarith::RMat;

enum class CalculusKind { ThreeD, FourD };
CalculusKind parse_calculus_kind(const std::string& s);
std::string to_string(CalculusKind k);
// "+-0" or "abcd"
std::string labels(CalculusKind k);

// Generator matrices X_+, X_-, q^{H/2} of the spin-l representation.
// Rows/columns are numbered by the weight n = -l..l of the representation space
// ("weight labels"). The matrix coefficients t^l use the reversed numbering, so
// reverse_weights() converts a weight-labelled symbol to the t^l matrix index.
template <class K>
struct GeneratorMatrices {
    Mat<K> Xp, Xm, K_, Kinv;
};
GeneratorMatrices<QRadical> generator_matrices(Spin l);
GeneratorMatrices<double> generator_matrices(Spin l, double q);

template <class K>
Mat<K> reverse_weights(const Mat<K>& m) {
    Mat<K> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(m.rows() - 1 - i, m.cols() - 1 - j);
    return r;
}

// Symbol families in weight labels, built by composing the generator matrices.
//   3D: x^+ = q^{1/2} X_- q^{H/2}, x^- = q^{1/2} X_+ q^{H/2}, x^0 = (q^{2H} - 1)/(q^2 - 1)
//   4D: x^a = q^H + q lambda^2 X_- X_+ - 1, x^b = q^{1/2} lambda X_- q^{-H/2},
//       x^c = q^{1/2} lambda q^{-H/2} X_+, x^d = q^{-H} - 1
template <class K>
using SymbolMap = std::map<char, Mat<K>>;
// key (i, j): e_i f = sum_j C_i^j(f) e_j
template <class K>
using CommutationMap = std::map<std::pair<char, char>, Mat<K>>;

SymbolMap<QRadical> partial_symbols_weight(CalculusKind kind, Spin l);
SymbolMap<double> partial_symbols_weight(CalculusKind kind, Spin l, double q);
// 3D: y^+- = q^{-H}, y^0 = q^{-2H} on the diagonal; 4D: (S l^-) l^+ products
CommutationMap<QRadical> commutation_symbols_weight(CalculusKind kind, Spin l);
CommutationMap<double> commutation_symbols_weight(CalculusKind kind, Spin l, double q);

// The same symbols in the t^l matrix index, so that A t_mj = sum_s t_ms sigma_sj.
SymbolMap<QRadical> partial_symbols(CalculusKind kind, Spin l);
CommutationMap<QRadical> commutation_symbols(CalculusKind kind, Spin l);
// Rational forms in the u^l basis (sigma_u = D^{-1} sigma D)
const SymbolMap<QScalar>& partial_symbols_u(CalculusKind kind, Spin l);
const CommutationMap<QScalar>& commutation_symbols_u(CalculusKind kind, Spin l);

// 4D commutation keys as (alpha beta, gamma delta) strings, e.g. "11^11"
std::string commutation_name(std::pair<char, char> key);

}  // namespace suq2::calculus
