#pragma once

#include "suq2/qarith/lpoly.hpp"

#include <optional>
#include <string>

namespace suq2::qarith {

// Element of Q(t), t = q^{1/2}, kept as num/den with den a monic polynomial
// in t with nonzero constant term and gcd(num, den) = 1. Laurent polynomials
// have den = 1 and take the fast paths.
class QScalar {
public:
    QScalar() = default;
    QScalar(long c) : num_(c) {}
    QScalar(const mpq_class& c) : num_(c) {}
    QScalar(LPoly p) : num_(std::move(p)) {}
    QScalar(LPoly num, LPoly den);

    static QScalar q_pow(int k) { return QScalar(LPoly::q_pow(k)); }
    static QScalar t_pow(int e) { return QScalar(LPoly::t_pow(e)); }
    static QScalar rational(long n, long d) { return QScalar(mpq_class(n, d)); }

    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }

    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o);
    QScalar operator-() const;
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

    QScalar scaled(const LPoly& p) const;
    QScalar inverse() const;
    QScalar pow(int k) const;
    QScalar bar() const;

    double eval_t(double t) const;
    double eval(double q) const;
    std::optional<mpq_class> eval_q_exact(const mpq_class& q) const;

    int compare(const QScalar& o) const;
    friend bool operator==(const QScalar& a, const QScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
    friend bool operator<(const QScalar& a, const QScalar& b) { return a.compare(b) < 0; }

    std::string str() const;
    size_t hash() const { return num_.hash() * 31u + den_.hash(); }

private:
    void normalize();
    LPoly num_;
    LPoly den_{1};
};

// [n]_q for n = twice_n / 2
QScalar q_int(int twice_n);
// [n]_q! and the Gaussian binomial [n choose k] in the variable q^2
QScalar q_factorial(int n);
QScalar gauss_binomial_q2(int n, int k);
// lambda = 1 - q^{-2}
QScalar lambda_q();

}  // namespace suq2::qarith
