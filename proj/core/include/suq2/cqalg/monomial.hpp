#pragma once

#include "suq2/qarith/lpoly.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace suq2::cqalg {

// Normal monomial a^i b^j c^k (i >= 0) or d^i b^j c^k (i >= 1).
struct Monomial {
    bool dhead = false;
    int i = 0;
    int j = 0;
    int k = 0;

    static Monomial make(bool d, int i, int j, int k) { return Monomial{d && i > 0, i, j, k}; }
    static Monomial one() { return {}; }
    static Monomial gen(char g);

    int degree() const { return i + j + k; }
    int grade() const { return (dhead ? -i : i) + k - j; }
    bool is_one() const { return i == 0 && j == 0 && k == 0; }
    // letters in normal order, e.g. "aabc"
    std::string word() const;
    std::string str() const;
    uint64_t key() const;
    static Monomial from_key(uint64_t key);

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.dhead == y.dhead && x.i == y.i && x.j == y.j && x.k == y.k;
    }
    friend bool operator<(const Monomial& x, const Monomial& y) {
        return std::make_tuple(x.degree(), x.dhead, x.i, x.j, x.k) <
               std::make_tuple(y.degree(), y.dhead, y.i, y.j, y.k);
    }
};

using Expansion = std::vector<std::pair<Monomial, qarith::LPoly>>;

// Cached structure maps on monomials; all coefficients are Laurent polynomials.
const Expansion& monomial_product(const Monomial& x, const Monomial& y);
const Expansion& monomial_star(const Monomial& x);
const Expansion& monomial_antipode(const Monomial& x);
const std::vector<std::pair<std::pair<Monomial, Monomial>, qarith::LPoly>>& monomial_coproduct(const Monomial& x);
inline long monomial_counit(const Monomial& x) { return (x.j == 0 && x.k == 0) ? 1 : 0; }

}  // namespace suq2::cqalg
