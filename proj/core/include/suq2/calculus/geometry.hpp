#pragma once

#include "suq2/calculus/forms.hpp"

#include <vector>

namespace suq2::calculus {

// Spinor sections s_1 e_1 + s_2 e_2 over the fundamental comodule.
struct Spinor {
    AlgebraElement s1, s2;
    friend bool operator==(const Spinor&, const Spinor&) = default;
};

// D(s_beta e_beta) = partial^{alpha beta} s_beta e_alpha with 11 = a, 12 = b, 21 = c, 22 = d.
Spinor geometric_dirac(const Spinor& s);

// Block [[x^a, x^b], [x^c, x^d]] / lambda acting on coefficient columns of spin l (u basis).
QMat dirac_block_u(Spin l);
// q^{l+1}[l], -q^{-l}[l+1]
std::pair<QScalar, QScalar> dirac_eigenvalues(Spin l);

struct DiracEigenReport {
    Spin l;
    double q = 0;
    bool minimal_polynomial_exact = false;
    double mu_plus = 0, mu_minus = 0;
    std::vector<double> eigenvalues;  // of the 2(2l+1) x 2(2l+1) block, real parts
    double max_deviation = 0;         // distance of each eigenvalue to the nearer expected value
    double max_imag = 0;
    // multiplicities on the 2(2l+1)^2-dimensional spin-l subspace
    int mult_plus = 0, mult_minus = 0;
};
DiracEigenReport dirac_eigen_report(Spin l, double q);

// Exactness of D on every (u^l_mn, 0) and (0, u^l_mn) against the block symbol.
RouteReport check_dirac_operator(int twice_max);

// e_z = q^{-2} e_a - e_d, theta = e_a + e_d; labels 'z', 't' (theta), 'b', 'c'
OneForm to_geometric_basis(const OneForm& w);
OneForm from_geometric_basis(const OneForm& w);

// g = e_c (x) e_b + q^2 e_b (x) e_c + q^2/(q + q^{-1}) (e_z (x) e_z - theta (x) theta)
struct MetricEntry {
    char i, j;
    QScalar g;
};
std::vector<MetricEntry> quantum_metric();

// Delta f = (q partial^a + q^{-1} partial^d) f / (q^2 lambda^2)
AlgebraElement q_laplacian(const AlgebraElement& f);
// (q/2) g_ij dhat^i dhat^j with dhat^{b,c} = partial/(q lambda), dhat^{z,theta} = [2] q^{-5/2} lambda^{-1} partial
AlgebraElement q_laplacian_metric(const AlgebraElement& f);
// [l][l+1]
QScalar laplacian_eigenvalue(Spin l);
// (q^{2l+1} + q^{-2l-1} - q - q^{-1}) / (q - q^{-1})^2 == [l][l+1]
bool laplacian_intermediate_identity(Spin l);

struct LaplacianReport {
    int checked = 0;
    int theta_mismatches = 0;
    int metric_mismatches = 0;
    int symbol_mismatches = 0;
    int identity_failures = 0;
};
LaplacianReport check_laplacian_spin(Spin l, bool metric_route = true);
LaplacianReport check_laplacian(int twice_max, bool metric_route = true);

// sigma_{X+} sigma_{X-} - sigma_{X-} sigma_{X+} == (q^H - q^{-H})/(q - q^{-1}), exact
bool casimir_relation_holds(Spin l);

struct ClassicalLimitRow {
    std::string symbol;
    Spin l;
    double max_abs_diff = 0;
};
// Generator symbols X_+, X_-, q^{H/2}, [H/2]_q and 3D x^-, x^+, x^0/2 against the classical
// d_+, d_-, 1, d_0 of the spin-l representation, weight-labelled.
std::vector<ClassicalLimitRow> classical_limit(double q, int twice_max);

}  // namespace suq2::calculus
