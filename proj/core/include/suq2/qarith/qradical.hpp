#pragma once

#include "suq2/qarith/qscalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace suq2::qarith {

// sqrt(r) = coef * sqrt(radicand), radicand = s * t^{0|1} * F(t) with s a
// square-free integer (sign kept here) and F primitive, square-free, lc > 0.
struct SqrtSplit {
    QScalar coef;
    LPoly radicand;
};
SqrtSplit canonical_sqrt(const QScalar& r);

// Finite sum  sum_i c_i sqrt(r_i)  with canonical, pairwise distinct radicands.
class QRadical {
public:
    QRadical() = default;
    QRadical(long c) : QRadical(QScalar(c)) {}
    QRadical(const QScalar& c);

    static QRadical sqrt(const QScalar& r);
    static QRadical term(const QScalar& coef, const LPoly& canonical_radicand);

    const std::map<LPoly, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<QScalar> rational() const;
    QScalar rational_or_throw() const;

    QRadical& operator+=(const QRadical& o);
    QRadical& operator-=(const QRadical& o);
    QRadical& operator*=(const QRadical& o);
    QRadical& operator*=(const QScalar& o);
    QRadical operator-() const;
    friend QRadical operator+(QRadical a, const QRadical& b) { return a += b; }
    friend QRadical operator-(QRadical a, const QRadical& b) { return a -= b; }
    friend QRadical operator*(QRadical a, const QRadical& b) { return a *= b; }
    friend QRadical operator*(QRadical a, const QScalar& b) { return a *= b; }
    friend QRadical operator*(const QScalar& b, QRadical a) { return a *= b; }
    QRadical operator/(const QScalar& o) const;

    QRadical scaled(const LPoly& p) const;
    // x^2, required to be free of radicals
    QScalar squared() const;

    double eval(double q) const;

    friend bool operator==(const QRadical& a, const QRadical& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QRadical& a, const QRadical& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(const LPoly& rad, const QScalar& c);
    std::map<LPoly, QScalar> terms_;
};

}  // namespace suq2::qarith
