#pragma once

#include "suq2/cqalg/hopf.hpp"

namespace suq2::cqalg {

// Haar state on a normal monomial. Values come from solving the invariance
// system (h (x) id) Delta(x) = h(x) 1 degree by degree; the table grows on demand.
QScalar haar_monomial(const Monomial& m);
void haar_prepare(int max_degree);
int haar_solved_degree();

template <class K>
K haar(const Element<K>& x) {
    K s;
    for (const auto& [m, c] : x.terms()) {
        if (m.grade() != 0) continue;
        QScalar h = haar_monomial(m);
        if (!h.is_zero()) s += c * h;
    }
    return s;
}

// (f, g) = h(f g^*)
template <class K>
K l2_inner(const Element<K>& f, const Element<K>& g) {
    return haar(f * star(g));
}

// <f, g> = h(g^* f), the pairing of the first orthogonality line
template <class K>
K l2_inner_left(const Element<K>& f, const Element<K>& g) {
    return haar(star(g) * f);
}

}  // namespace suq2::cqalg
