#include "suq2/qarith/lpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace suq2::qarith {

namespace {

const mpq_class kZero(0);

void push_sorted_merge(std::vector<LPoly::Term>& out, const std::vector<LPoly::Term>& a,
                       const std::vector<LPoly::Term>& b, bool subtract) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second);
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(a[i].second - b[j].second)
                                   : mpq_class(a[i].second + b[j].second);
            if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
}

}  // namespace

LPoly::LPoly(long c) {
    if (c != 0) terms_.emplace_back(0, mpq_class(c));
}

LPoly::LPoly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LPoly LPoly::monomial(const mpq_class& c, int texp) {
    LPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(texp, c);
    return p;
}

LPoly LPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    LPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
        } else if (sgn(t.second) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

mpq_class LPoly::coeff(int texp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), texp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == texp) return it->second;
    return 0;
}

const mpq_class& LPoly::lead() const {
    if (terms_.empty()) return kZero;
    return terms_.back().second;
}

bool LPoly::all_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    push_sorted_merge(out, terms_, o.terms_, false);
    terms_ = std::move(out);
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    push_sorted_merge(out, terms_, o.terms_, true);
    terms_ = std::move(out);
    return *this;
}

LPoly& LPoly::operator*=(const LPoly& o) {
    *this = *this * o;
    return *this;
}

LPoly LPoly::operator-() const {
    LPoly p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1) {
        LPoly p(a);
        for (auto& t : p.terms_) {
            t.first += b.terms_[0].first;
            t.second *= b.terms_[0].second;
        }
        return p;
    }
    if (a.terms_.size() == 1) return b * a;
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<mpq_class> acc(static_cast<size_t>(hi - lo + 1));
    std::vector<char> used(acc.size(), 0);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            size_t k = static_cast<size_t>(x.first + y.first - lo);
            acc[k] += x.second * y.second;
            used[k] = 1;
        }
    LPoly p;
    for (size_t k = 0; k < acc.size(); ++k)
        if (used[k] && sgn(acc[k]) != 0) p.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
    return p;
}

LPoly LPoly::shifted(int texp) const {
    LPoly p(*this);
    for (auto& t : p.terms_) t.first += texp;
    return p;
}

LPoly LPoly::scaled(const mpq_class& c) const {
    if (sgn(c) == 0) return {};
    LPoly p(*this);
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

LPoly LPoly::pow(unsigned k) const {
    LPoly r(1), base(*this);
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

LPoly LPoly::bar() const {
    LPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
}

double LPoly::eval_t(double t) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(t, e);
    return s;
}

std::optional<mpq_class> LPoly::eval_q_exact(const mpq_class& q) const {
    if (!all_even()) return std::nullopt;
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) {
        int k = e / 2;
        mpq_class p = 1;
        mpq_class b = k >= 0 ? q : mpq_class(1 / q);
        for (int i = 0; i < std::abs(k); ++i) p *= b;
        s += c * p;
    }
    return s;
}

int LPoly::compare(const LPoly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first ? -1 : 1;
        int c = cmp(terms_[i].second, o.terms_[i].second);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (terms_.size() == o.terms_.size()) return 0;
    return terms_.size() < o.terms_.size() ? -1 : 1;
}

std::string format_q_power(int texp) {
    if (texp == 0) return "";
    if (texp == 2) return "q";
    std::ostringstream os;
    if (texp % 2 == 0)
        os << "q^" << (texp / 2 > 0 ? "" : "(") << texp / 2 << (texp / 2 > 0 ? "" : ")");
    else
        os << "q^(" << texp << "/2)";
    return os.str();
}

std::string LPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c = it->second;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string qp = format_q_power(it->first);
        if (qp.empty())
            os << c.get_str();
        else if (c == 1)
            os << qp;
        else
            os << c.get_str() << "*" << qp;
    }
    return os.str();
}

size_t LPoly::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<int>()(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>()(c.get_str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace dense {

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly from_lpoly(const LPoly& p, int shift) {
    Poly d;
    for (const auto& [e, c] : p.terms()) {
        int k = e - shift;
        if (k < 0) throw std::logic_error("dense::from_lpoly: negative degree");
        if (static_cast<int>(d.size()) <= k) d.resize(static_cast<size_t>(k) + 1);
        d[static_cast<size_t>(k)] = c;
    }
    return d;
}

LPoly to_lpoly(const Poly& p, int shift) {
    std::vector<LPoly::Term> t;
    for (size_t k = 0; k < p.size(); ++k)
        if (sgn(p[k]) != 0) t.emplace_back(static_cast<int>(k) + shift, p[k]);
    return LPoly::from_terms(std::move(t));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * static_cast<long>(k);
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly r(a);
    trim(r);
    if (r.size() < b.size()) return {Poly{}, r};
    Poly quot(r.size() - b.size() + 1);
    const mpq_class& lb = b.back();
    const long nb = static_cast<long>(b.size());
    for (long k = static_cast<long>(r.size()) - 1; k >= nb - 1; --k) {
        if (sgn(r[static_cast<size_t>(k)]) == 0) continue;
        mpq_class f = r[static_cast<size_t>(k)] / lb;
        size_t off = static_cast<size_t>(k - (nb - 1));
        quot[off] = f;
        for (size_t j = 0; j < b.size(); ++j) r[off + j] -= f * b[j];
    }
    trim(r);
    trim(quot);
    return {quot, r};
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.empty()) throw std::logic_error("dense::divexact: nonzero remainder");
    return quot;
}

Poly monic(const Poly& p) {
    Poly r(p);
    trim(r);
    if (r.empty()) return r;
    mpq_class l = r.back();
    for (auto& c : r) c /= l;
    return r;
}

mpq_class make_primitive(Poly& p) {
    trim(p);
    if (p.empty()) return 0;
    mpz_class den = 1;
    for (const auto& c : p) {
        if (sgn(c) == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& c : p) {
        if (sgn(c) == 0) continue;
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (sgn(p.back()) < 0) g = -g;
    mpq_class scale(g, den);
    scale.canonicalize();
    for (auto& c : p) c /= scale;
    return scale;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::vector<Poly> yun(const Poly& f0) {
    Poly f = monic(f0);
    std::vector<Poly> out;
    if (f.size() <= 1) return out;
    Poly fp = derivative(f);
    Poly a = gcd(f, fp);
    Poly b = divexact(f, a);
    Poly c = divexact(fp, a);
    Poly d = c;
    {
        Poly bp = derivative(b);
        d.resize(std::max(d.size(), bp.size()));
        for (size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
        trim(d);
    }
    while (b.size() > 1) {
        Poly ai = gcd(b, d);
        out.push_back(ai);
        b = divexact(b, ai);
        c = divexact(d, ai);
        Poly bp = derivative(b);
        d = c;
        d.resize(std::max(d.size(), bp.size()));
        for (size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
        trim(d);
    }
    return out;
}

}  // namespace dense

}  // namespace suq2::qarith
