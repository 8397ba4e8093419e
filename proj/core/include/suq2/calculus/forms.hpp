#pragma once

#include "suq2/calculus/symbols.hpp"
#include "suq2/cqalg/element.hpp"

#include <map>

namespace suq2::calculus {

using cqalg::AlgebraElement;

// One-form sum_i f_i e_i with coefficients on the left; keys are the labels of kind.
using OneForm = std::map<char, AlgebraElement>;

void add_to(OneForm& w, char label, const AlgebraElement& x);
OneForm prune(OneForm w);
OneForm operator+(const OneForm& x, const OneForm& y);
bool same_form(const OneForm& x, const OneForm& y);

OneForm left_multiply(const AlgebraElement& f, const OneForm& w);
// w f, using the bimodule relations e_i g = sum_j C_i^j(g) e_j on generators
OneForm right_multiply(CalculusKind kind, const OneForm& w, const AlgebraElement& f);

// df = sum_i (partial^i f) e_i
OneForm exterior_d(CalculusKind kind, const AlgebraElement& f);
AlgebraElement partial(CalculusKind kind, char label, const AlgebraElement& f);

// Symbol route: partial^i u_mn = sum_s u_ms sigma_u^i_sn, and
// e_i u_mn = sum_j sum_s u_ms C_u{}_i^j_sn e_j.
AlgebraElement partial_by_symbol(CalculusKind kind, char label, Spin l, int m, int n);
OneForm basis_times_u(CalculusKind kind, char label, Spin l, int m, int n);

// Exact agreement of generator and symbol routes on all u^l_mn for twice_l <= twice_max.
struct RouteReport {
    int checked = 0;
    int mismatches = 0;
};
RouteReport check_partials_route(CalculusKind kind, int twice_max);
RouteReport check_commutation_route(CalculusKind kind, int twice_max);
// eps(partial^i u_mn) equals the (m,n) entry of the u-gauge symbol
RouteReport check_counit_consistency(CalculusKind kind, int twice_max);
// d(fg) = (df) g + f dg on the given pairs
RouteReport check_leibniz(CalculusKind kind, const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs);
// (w f) g = w (f g)
RouteReport check_right_associativity(CalculusKind kind, const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs);

}  // namespace suq2::calculus
