#pragma once

#include "suq2/cqalg/element.hpp"

#include <map>
#include <tuple>

namespace suq2::cqalg {

// Star: a* = d, b* = -q^{-1} c, c* = -q b, d* = a; anti-linear anti-homomorphism.
// Coefficients are real, so conjugation acts trivially on them.
template <class K>
Element<K> star(const Element<K>& x) {
    Element<K> out;
    for (const auto& [m, c] : x.terms())
        for (const auto& [mm, p] : monomial_star(m)) out.add_term(mm, scale_by(c, p));
    return out;
}

// Antipode: S(a) = d, S(b) = -q b, S(c) = -q^{-1} c, S(d) = a; anti-homomorphism.
template <class K>
Element<K> antipode(const Element<K>& x) {
    Element<K> out;
    for (const auto& [m, c] : x.terms())
        for (const auto& [mm, p] : monomial_antipode(m)) out.add_term(mm, scale_by(c, p));
    return out;
}

template <class K>
K counit(const Element<K>& x) {
    K s;
    for (const auto& [m, c] : x.terms())
        if (monomial_counit(m)) s += c;
    return s;
}

template <class K>
Tensor<K> coproduct(const Element<K>& x) {
    Tensor<K> out;
    for (const auto& [m, c] : x.terms())
        for (const auto& [mm, p] : monomial_coproduct(m)) out.add_term(mm, scale_by(c, p));
    return out;
}

// Product in A (x) A.
template <class K>
Tensor<K> tensor_multiply(const Tensor<K>& x, const Tensor<K>& y) {
    Tensor<K> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            K c = cx * cy;
            const Expansion& e1 = monomial_product(kx.first, ky.first);
            const Expansion& e2 = monomial_product(kx.second, ky.second);
            for (const auto& [m1, p1] : e1)
                for (const auto& [m2, p2] : e2) out.add_term({m1, m2}, scale_by(c, p1 * p2));
        }
    return out;
}

// (f (x) g) applied termwise to monomial pairs, landing in A (x) A.
template <class K, class F, class G>
Tensor<K> tensor_map(const Tensor<K>& x, F f, G g) {
    Tensor<K> out;
    for (const auto& [k, c] : x.terms()) {
        Element<K> l = f(Element<K>::monomial(k.first));
        Element<K> r = g(Element<K>::monomial(k.second));
        for (const auto& [ml, cl] : l.terms())
            for (const auto& [mr, cr] : r.terms()) out.add_term({ml, mr}, c * cl * cr);
    }
    return out;
}

// m o (f (x) id)
template <class K, class F>
Element<K> multiply_after_left(const Tensor<K>& x, F f) {
    Element<K> out;
    for (const auto& [k, c] : x.terms()) {
        Element<K> l = f(Element<K>::monomial(k.first));
        out += (l * Element<K>::monomial(k.second)).scaled(c);
    }
    return out;
}

// (eps (x) id) and (id (x) eps)
template <class K>
Element<K> counit_left(const Tensor<K>& x) {
    Element<K> out;
    for (const auto& [k, c] : x.terms())
        if (monomial_counit(k.first)) out.add_term(k.second, c);
    return out;
}

template <class K>
Element<K> counit_right(const Tensor<K>& x) {
    Element<K> out;
    for (const auto& [k, c] : x.terms())
        if (monomial_counit(k.second)) out.add_term(k.first, c);
    return out;
}

// (Delta (x) id) and (id (x) Delta) as maps into A^{(x)3}, keyed by triples.
template <class K>
std::map<std::tuple<Monomial, Monomial, Monomial>, K> coassoc_left(const Tensor<K>& dx) {
    std::map<std::tuple<Monomial, Monomial, Monomial>, K> out;
    for (const auto& [k, c] : dx.terms())
        for (const auto& [mm, p] : monomial_coproduct(k.first)) {
            auto key = std::make_tuple(mm.first, mm.second, k.second);
            K v = scale_by(c, p);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

template <class K>
std::map<std::tuple<Monomial, Monomial, Monomial>, K> coassoc_right(const Tensor<K>& dx) {
    std::map<std::tuple<Monomial, Monomial, Monomial>, K> out;
    for (const auto& [k, c] : dx.terms())
        for (const auto& [mm, p] : monomial_coproduct(k.second)) {
            auto key = std::make_tuple(k.first, mm.first, mm.second);
            K v = scale_by(c, p);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

template <class K>
bool is_homogeneous_grade(const Element<K>& x, int g) {
    for (const auto& [m, c] : x.terms())
        if (m.grade() != g) return false;
    return true;
}

}  // namespace suq2::cqalg
