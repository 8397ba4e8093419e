#include "suq2/qarith/qradical.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace suq2::qarith {

namespace {

// n = sign * s^2 * m with m square-free (up to an unfactored cofactor whose
// square part cannot be found by trial division below 10^5)
void split_square_int(const mpz_class& n, mpz_class& s, mpz_class& m) {
    mpz_class r = abs(n);
    s = 1;
    m = 1;
    for (unsigned long p = 2; p <= 100000ul; p += (p == 2 ? 1 : 2)) {
        mpz_class pp = p;
        if (pp * pp > r) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
            r /= pp;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) s *= pp;
        if (e % 2) m *= pp;
    }
    if (r > 1) {
        if (mpz_perfect_square_p(r.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
            s *= root;
        } else {
            m *= r;
        }
    }
    if (sgn(n) < 0) m = -m;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<QScalar, SqrtSplit>& cache() {
    static std::map<QScalar, SqrtSplit> c;
    return c;
}

SqrtSplit compute_sqrt(const QScalar& r) {
    if (r.is_zero()) return {QScalar(), LPoly(1)};
    LPoly p = r.num() * r.den();
    int e = p.min_exp();
    dense::Poly pd = dense::from_lpoly(p, e);
    mpq_class c = dense::make_primitive(pd);
    dense::Poly sq{mpq_class(1)};
    dense::Poly free{mpq_class(1)};
    if (pd.size() > 1) {
        auto factors = dense::yun(pd);
        for (size_t i = 0; i < factors.size(); ++i) {
            size_t mult = i + 1;
            for (size_t k = 0; k < mult / 2; ++k) sq = dense::mul(sq, factors[i]);
            if (mult % 2) free = dense::mul(free, factors[i]);
        }
        // pd = lc * sq^2 * free (sq, free monic)
        c *= pd.back();
        c *= dense::make_primitive(free);
    }
    int h = e >= 0 ? e / 2 : -((-e + 1) / 2);
    int rem = e - 2 * h;
    mpz_class num = c.get_num() * c.get_den();
    mpz_class s, m;
    split_square_int(num, s, m);
    QScalar coef(dense::to_lpoly(sq, h));
    coef *= QScalar(mpq_class(s, c.get_den()));
    coef /= QScalar(r.den());
    LPoly rad = dense::to_lpoly(free, rem).scaled(mpq_class(m));
    return {coef, rad};
}

}  // namespace

SqrtSplit canonical_sqrt(const QScalar& r) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache().find(r);
        if (it != cache().end()) return it->second;
    }
    SqrtSplit out = compute_sqrt(r);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().emplace(r, out);
    return out;
}

QRadical::QRadical(const QScalar& c) {
    if (!c.is_zero()) terms_.emplace(LPoly(1), c);
}

QRadical QRadical::sqrt(const QScalar& r) {
    SqrtSplit sp = canonical_sqrt(r);
    return term(sp.coef, sp.radicand);
}

QRadical QRadical::term(const QScalar& coef, const LPoly& rad) {
    QRadical x;
    x.add_term(rad, coef);
    return x;
}

void QRadical::add_term(const LPoly& rad, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(rad);
    if (it == terms_.end()) {
        terms_.emplace(rad, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool QRadical::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<QScalar> QRadical::rational() const {
    if (terms_.empty()) return QScalar();
    if (is_rational()) return terms_.begin()->second;
    return std::nullopt;
}

QScalar QRadical::rational_or_throw() const {
    auto r = rational();
    if (!r) throw std::logic_error("QRadical: value is not rational: " + str());
    return *r;
}

QRadical& QRadical::operator+=(const QRadical& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, c);
    return *this;
}

QRadical& QRadical::operator-=(const QRadical& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, -c);
    return *this;
}

QRadical& QRadical::operator*=(const QRadical& o) {
    if (is_zero() || o.is_zero()) return *this = QRadical();
    QRadical out;
    for (const auto& [r1, c1] : terms_)
        for (const auto& [r2, c2] : o.terms_) {
            if (r1.is_one()) {
                out.add_term(r2, c1 * c2);
            } else if (r2.is_one()) {
                out.add_term(r1, c1 * c2);
            } else if (r1 == r2) {
                out.add_term(LPoly(1), c1 * c2 * QScalar(r1));
            } else {
                SqrtSplit sp = canonical_sqrt(QScalar(r1 * r2));
                out.add_term(sp.radicand, c1 * c2 * sp.coef);
            }
        }
    return *this = std::move(out);
}

QRadical& QRadical::operator*=(const QScalar& o) {
    if (o.is_zero()) return *this = QRadical();
    for (auto& [r, c] : terms_) c *= o;
    return *this;
}

QRadical QRadical::operator-() const {
    QRadical x(*this);
    for (auto& [r, c] : x.terms_) c = -c;
    return x;
}

QRadical QRadical::operator/(const QScalar& o) const {
    QRadical x(*this);
    x *= o.inverse();
    return x;
}

QRadical QRadical::scaled(const LPoly& p) const {
    if (p.is_zero()) return QRadical();
    QRadical x(*this);
    for (auto& [r, c] : x.terms_) c = c.scaled(p);
    return x;
}

QScalar QRadical::squared() const { return ((*this) * (*this)).rational_or_throw(); }

double QRadical::eval(double q) const {
    double t = std::sqrt(q);
    double s = 0.0;
    for (const auto& [r, c] : terms_) {
        double rv = r.eval_t(t);
        if (rv < 0) throw std::domain_error("QRadical: negative radicand at evaluation point");
        s += c.eval_t(t) * std::sqrt(rv);
    }
    return s;
}

std::string QRadical::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [r, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (r.is_one()) {
            s += c.str();
        } else {
            s += (c.is_one() ? std::string() : "(" + c.str() + ")*") + "sqrt(" + r.str() + ")";
        }
    }
    return s;
}

}  // namespace suq2::qarith
