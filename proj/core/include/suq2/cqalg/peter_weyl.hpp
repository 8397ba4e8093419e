#pragma once

#include "suq2/cqalg/haar.hpp"
#include "suq2/cqalg/spin.hpp"
#include "suq2/qarith/matrix.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace suq2::cqalg {

using qarith::Mat;

// Matrix coefficients of the spin-l corepresentation.
//   u_mn : coefficient of x^{2l-n} y^n in X^{2l-m} Y^m, X = a x + b y, Y = c x + d y,
//          on the quantum plane yx = q xy (unnormalized, Laurent coefficients)
//   t_mn = sqrt(N_m / N_n) u_mn, unitary, with N_m = [2l choose m]_{q^2}
// Indices run 0..2l; index i has weight i - l.
struct SpinBlock {
    Spin l;
    std::vector<std::vector<AlgebraElement>> u;
    std::vector<QScalar> N;
};

const SpinBlock& spin_block(Spin l);

const AlgebraElement& u_coeff(Spin l, int m, int n);
RadicalElement t_coeff(Spin l, int m, int n);
// sqrt(N_m / N_n)
QRadical nu_ratio(Spin l, int m, int n);
QScalar norm_square(Spin l, int m);

// q_i = q^{-2 w_i}, the diagonal of Q^l
QScalar q_weight(Spin l, int i);
std::vector<QScalar> q_matrix(Spin l);
// d_l = [2l+1]_q
QScalar quantum_dim(Spin l);

// N_m recomputed from the Haar state: N_k / N_0 = (q_0 / d) / h(u_k0 u_k0^*)
std::vector<QScalar> norm_squares_from_haar(Spin l);

// C^{ksm}_{ijprut}: t^k_ij t^s_pr = sum_m sum_{u,t} C t^m_ut
struct ClebschKey {
    int i, j, p, r, twice_m, u, t;
    auto tie() const { return std::tie(i, j, p, r, twice_m, u, t); }
    friend bool operator<(const ClebschKey& a, const ClebschKey& b) { return a.tie() < b.tie(); }
};
using ClebschTable = std::map<ClebschKey, QRadical>;
ClebschTable clebsch_coefficients(Spin k, Spin s);
// coefficients for one product pair (i,j,p,r)
std::map<std::tuple<int, int, int>, QRadical> clebsch_row(Spin k, Spin s, int i, int j, int p, int r);

}  // namespace suq2::cqalg
