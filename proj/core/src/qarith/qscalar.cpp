#include "suq2/qarith/qscalar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace suq2::qarith {

QScalar::QScalar(LPoly num, LPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QScalar::normalize() {
    if (den_.is_zero()) throw std::domain_error("QScalar: division by zero");
    if (num_.is_zero()) {
        den_ = LPoly(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& [e, c] = den_.terms()[0];
        num_ = num_.shifted(-e).scaled(mpq_class(1 / c));
        den_ = LPoly(1);
        return;
    }
    int en = num_.min_exp();
    int ed = den_.min_exp();
    dense::Poly n = dense::from_lpoly(num_, en);
    dense::Poly d = dense::from_lpoly(den_, ed);
    dense::Poly g = dense::gcd(n, d);
    if (g.size() > 1) {
        n = dense::divexact(n, g);
        d = dense::divexact(d, g);
    }
    mpq_class lc = d.back();
    if (lc != 1) {
        for (auto& c : n) c /= lc;
        for (auto& c : d) c /= lc;
    }
    num_ = dense::to_lpoly(n, en - ed);
    den_ = dense::to_lpoly(d, 0);
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_laurent() && o.is_laurent()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
    if (is_zero() || o.is_zero()) return *this = QScalar();
    if (is_laurent() && o.is_laurent()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

QScalar QScalar::operator-() const {
    QScalar r(*this);
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::scaled(const LPoly& p) const {
    if (is_laurent()) return QScalar(num_ * p);
    return QScalar(num_ * p, den_);
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
    return QScalar(den_, num_);
}

QScalar QScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QScalar r(1), b(*this);
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

QScalar QScalar::bar() const { return QScalar(num_.bar(), den_.bar()); }

double QScalar::eval_t(double t) const { return num_.eval_t(t) / den_.eval_t(t); }

double QScalar::eval(double q) const { return eval_t(std::sqrt(q)); }

std::optional<mpq_class> QScalar::eval_q_exact(const mpq_class& q) const {
    auto n = num_.eval_q_exact(q);
    auto d = den_.eval_q_exact(q);
    if (!n || !d) return std::nullopt;
    if (sgn(*d) == 0) throw std::domain_error("QScalar: pole at evaluation point");
    return mpq_class(*n / *d);
}

int QScalar::compare(const QScalar& o) const {
    int c = num_.compare(o.num_);
    if (c != 0) return c;
    return den_.compare(o.den_);
}

std::string QScalar::str() const {
    if (is_laurent()) return num_.str();
    std::string n = num_.str();
    if (!num_.is_monomial()) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

QScalar q_int(int twice_n) {
    if (twice_n == 0) return QScalar();
    LPoly num = LPoly::t_pow(twice_n) - LPoly::t_pow(-twice_n);
    LPoly den = LPoly::t_pow(2) - LPoly::t_pow(-2);
    return QScalar(num, den);
}

QScalar q_factorial(int n) {
    QScalar r(1);
    for (int k = 2; k <= n; ++k) r *= q_int(2 * k);
    return r;
}

QScalar gauss_binomial_q2(int n, int k) {
    if (k < 0 || k > n) return QScalar();
    std::vector<LPoly> row{LPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<LPoly> next(static_cast<size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            LPoly v;
            if (j <= m - 1) v += row[static_cast<size_t>(j)].shifted(4 * j);
            if (j >= 1) v += row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = std::move(v);
        }
        row = std::move(next);
    }
    return QScalar(row[static_cast<size_t>(k)]);
}

QScalar lambda_q() { return QScalar(LPoly(1) - LPoly::q_pow(-1).pow(2)); }

}  // namespace suq2::qarith
