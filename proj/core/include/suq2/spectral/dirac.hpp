#pragma once

#include "suq2/fourier/fourier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suq2::spectral {

using cqalg::Spin;
using fourier::ExactFourier;
using fourier::NumericFourier;
using qarith::QPoint;
using qarith::QRadical;
using qarith::QScalar;

enum class DiracFamily { Classical, QDeformed, Table };

// D t^l_ij = lambda_l t^l_ij. Only |lambda_l| enters the operations below;
// signs are kept as metadata.
struct DiracSpec {
    DiracFamily family = DiracFamily::Classical;
    std::map<int, QScalar> table;  // Table family, keyed by twice_l
    std::map<int, int> signs;      // default +1
    std::optional<double> beta;

    static DiracSpec classical() { return {DiracFamily::Classical, {}, {}, std::nullopt}; }
    static DiracSpec q_deformed() { return {DiracFamily::QDeformed, {}, {}, std::nullopt}; }
    static DiracSpec from_table(std::map<int, QScalar> t) { return {DiracFamily::Table, std::move(t), {}, std::nullopt}; }

    QScalar abs_lambda(Spin l) const;
    QScalar lambda(Spin l) const;
    double abs_lambda(Spin l, const QPoint& q) const { return qarith::evaluate(abs_lambda(l), q); }
    std::string family_name() const;
};

DiracFamily parse_dirac_family(const std::string& s);

// Multiplicity convention for the summability series.
enum class Multiplicity { QuantumDim, Plain };  // d_l n_l or n_l^2

struct SummabilityRow {
    int twice_l;
    double partial_sum;
};

struct SummabilityReport {
    std::optional<double> spectral_dimension;
    Multiplicity multiplicity;
    std::string rule;
    double evidence_beta;
    std::vector<SummabilityRow> evidence;
};

// Analytic exponent/ratio test on the closed forms; partial sums are evidence only.
SummabilityReport summability_classify(const DiracSpec& spec, const QPoint& q,
                                       Multiplicity mult = Multiplicity::QuantumDim, int evidence_twice_max = 40);

// Scale each block by |lambda_l|^alpha. Exact for alpha in (1/2)Z.
ExactFourier abs_dirac_power(const ExactFourier& F, const mpq_class& alpha, const DiracSpec& spec);
NumericFourier abs_dirac_power(const NumericFourier& F, double alpha, const DiracSpec& spec, const QPoint& q);

// |D| f
cqalg::RadicalElement abs_dirac_apply(const cqalg::RadicalElement& f, const DiracSpec& spec);

// d(a)(b) = |D|(ab) - a |D| b
cqalg::RadicalElement commutator_apply(const cqalg::RadicalElement& a, const cqalg::RadicalElement& b,
                                       const DiracSpec& spec);

// ||d(t^k_ij) t^s_pr||^2 computed directly with (f, f) = h(f f^*)
QScalar commutator_norm_sq_direct(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec);
// the same through the product coefficients:
// sum_m (|lambda_m| - |lambda_s|)^2 sum_{u,t} |C^{ksm}_{ijprut}|^2 q^m_t / d_m
QScalar commutator_norm_sq_expansion(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec);
// stated form: (|lambda_k| - |lambda_s|)^2 sum_m sum_t |C^{ksm}_{ijprtt}|^2 q^m_t / d_m
QScalar boundedness_lhs_sq(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec);

// LHS of the boundedness condition over sqrt(q^s_r / d_s)
double boundedness_ratio(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec, const QPoint& q);
double commutator_direct_ratio(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec, const QPoint& q);

}  // namespace suq2::spectral
