#pragma once

#include "suq2/fourier/fourier.hpp"
#include "suq2/spectral/dirac.hpp"

#include <functional>
#include <optional>
#include <string>

namespace suq2::multiplier {

using cqalg::AlgebraElement;
using cqalg::RadicalElement;
using cqalg::Spin;
using fourier::ExactFourier;
using fourier::NumericFourier;
using qarith::QMat;
using qarith::QPoint;
using qarith::QRadical;
using qarith::QScalar;
using qarith::RMat;

// sigma(l) in the normalized basis t^l: A t_mj = sum_s t_ms sigma_sj
using MultiplierSymbol = ExactFourier;
// the same operator seen on u^l = D^{-1} t^l D-conjugated: sigma_u = D^{-1} sigma D, D = diag(sqrt N)
using USymbol = std::map<int, QMat>;

using Operator = std::function<RadicalElement(const RadicalElement&)>;
using RationalOperator = std::function<AlgebraElement(const AlgebraElement&)>;

MultiplierSymbol to_t_gauge(const USymbol& s);
USymbol to_u_gauge(const MultiplierSymbol& s);

// Fourier side: (Af)^(l) = Q sigma Q^{-1} fhat(l). Missing spins are an error.
RadicalElement apply_symbol(const MultiplierSymbol& sigma, const RadicalElement& f);
RadicalElement apply_symbol(const MultiplierSymbol& sigma, const AlgebraElement& f);
AlgebraElement apply_symbol_u(const USymbol& sigma, const AlgebraElement& f);

struct ExtractResult {
    MultiplierSymbol symbol;
    bool row_independent = true;
    bool in_span = true;
    std::string message;
};

// sigma_sj = d q_m h(t_ms^* A t_mj), checked for every row m
ExtractResult extract_symbol(const Operator& A, Spin l_max);

struct UExtractResult {
    USymbol symbol;
    bool row_independent = true;
    bool in_span = true;
    std::string message;
};
UExtractResult extract_symbol_u(const RationalOperator& A, Spin l_max);

// Delta(A x) = (id (x) A) Delta(x) on every u^l_mn, l <= l_max
bool is_coinvariant(const RationalOperator& A, Spin l_max);

// Transpose blocks: the candidate adjoint symbol
MultiplierSymbol symbol_adjoint(const MultiplierSymbol& s);

// Pairing used in the adjoint identity (A f, g) = (f, A^* g)
enum class Pairing { Left, Right };  // h(g^* f), h(f g^*)
std::string to_string(Pairing p);
// exact check over t^l_ij, t^l'_kl with l, l' <= l_max
bool adjoint_identity_holds(const MultiplierSymbol& sigma, const MultiplierSymbol& sigma_adj, Spin l_max, Pairing p);

// Largest singular value, numerically
double op_norm(const qarith::DMat& m);
// sup_s s (sum_{||sigma(l)||_op > s} d_l n_l)^{1/p - 1/q} over l <= l_max
double lp_lq_bound(const NumericFourier& sigma, double p, double q_exp, Spin l_max, const QPoint& q);
// exact L^2 operator norm under h(g^* f): sup_l ||sigma(l)||_op
double l2_operator_norm(const NumericFourier& sigma);
// the same measured on the operator: generalized eigenproblem on each row space
double l2_operator_norm_measured(const MultiplierSymbol& sigma, const QPoint& q);

// Af = sum_l d_l Tr(fhat(l) t^l sigma(l))
RadicalElement quantize(const MultiplierSymbol& sigma, const AlgebraElement& f);

struct Seminorms {
    double p_alpha = 0;
    double q_gamma = 0;
};
// p_alpha = (sum d n |lambda|^{2 alpha} ||sigma||_HS^2)^{1/2}, q_gamma = sup |lambda|^gamma ||sigma||_op
Seminorms schwartz_seminorms(const NumericFourier& sigma, double alpha, double gamma, const spectral::DiracSpec& spec,
                             const QPoint& q);

struct SeminormBound {
    double lhs = 0;
    double constant = 0;
    double rhs = 0;
    bool holds = false;
};
// stated chain: p_alpha <= sqrt(sum d n / |lambda|^beta) q_{alpha - beta/2}
SeminormBound seminorm_bound_stated(const NumericFourier& sigma, double alpha, double beta, const spectral::DiracSpec& spec,
                             const QPoint& q);
// with ||sigma||_HS^2 <= d ||sigma||_op^2: p_alpha <= sqrt(sum d^2 n / |lambda|^beta) q_{alpha + beta/2}
SeminormBound seminorm_bound_hs(const NumericFourier& sigma, double alpha, double beta, const spectral::DiracSpec& spec,
                               const QPoint& q);

}  // namespace suq2::multiplier
