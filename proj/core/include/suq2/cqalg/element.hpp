#pragma once

#include "suq2/cqalg/monomial.hpp"
#include "suq2/qarith/qradical.hpp"

#include <map>
#include <string>
#include <utility>

namespace suq2::cqalg {

using qarith::LPoly;
using qarith::QRadical;
using qarith::QScalar;

inline QScalar scale_by(const QScalar& c, const LPoly& p) { return c.scaled(p); }
inline QRadical scale_by(const QRadical& c, const LPoly& p) { return c.scaled(p); }

// Noncommutative polynomial in normal form: monomial -> coefficient.
template <class K>
class Element {
public:
    using Terms = std::map<Monomial, K>;

    Element() = default;
    Element(const K& c) { add_term(Monomial::one(), c); }

    static Element one() { return Element(K(1)); }
    static Element gen(char g) {
        Element e;
        e.add_term(Monomial::gen(g), K(1));
        return e;
    }
    static Element monomial(const Monomial& m, const K& c = K(1)) {
        Element e;
        e.add_term(m, c);
        return e;
    }
    static Element from_expansion(const Expansion& ex) {
        Element e;
        for (const auto& [m, p] : ex) e.add_term(m, K(QScalar(p)));
        return e;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Element operator-() const {
        Element e(*this);
        for (auto& [m, c] : e.terms_) c = -c;
        return e;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    template <class S>
    Element scaled(const S& s) const {
        Element e;
        for (const auto& [m, c] : terms_) e.add_term(m, c * s);
        return e;
    }

    friend Element operator*(const Element& x, const Element& y) {
        Element out;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                K c = cx * cy;
                for (const auto& [m, p] : monomial_product(mx, my)) out.add_term(m, scale_by(c, p));
            }
        return out;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (!m.is_one()) s += "*" + m.str();
        }
        return s;
    }

private:
    Terms terms_;
};

using AlgebraElement = Element<QScalar>;
using RadicalElement = Element<QRadical>;

inline RadicalElement lift(const AlgebraElement& x) {
    RadicalElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, QRadical(c));
    return r;
}

// Coefficients all rational; throws otherwise.
AlgebraElement lower(const RadicalElement& x);
bool is_rational(const RadicalElement& x);

// Tensor square A (x) A.
template <class K>
class Tensor {
public:
    using Key = std::pair<Monomial, Monomial>;
    void add_term(const Key& k, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    const std::map<Key, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

    static Tensor simple(const Element<K>& x, const Element<K>& y) {
        Tensor t;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) t.add_term({mx, my}, cx * cy);
        return t;
    }

private:
    std::map<Key, K> terms_;
};

}  // namespace suq2::cqalg
