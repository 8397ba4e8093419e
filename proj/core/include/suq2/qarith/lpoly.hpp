#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace suq2::qarith {

// Laurent polynomial in t = q^{1/2} with rational coefficients.
// Exponents count powers of t, so q^k is stored at exponent 2k.
class LPoly {
public:
    using Term = std::pair<int, mpq_class>;

    LPoly() = default;
    LPoly(long c);
    explicit LPoly(const mpq_class& c);

    static LPoly monomial(const mpq_class& c, int texp);
    static LPoly t_pow(int texp) { return monomial(1, texp); }
    static LPoly q_pow(int k) { return monomial(1, 2 * k); }
    static LPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const;
    int max_exp() const;
    mpq_class coeff(int texp) const;
    const mpq_class& lead() const;
    bool all_even() const;

    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    LPoly& operator*=(const LPoly& o);
    LPoly operator-() const;
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);

    LPoly shifted(int texp) const;
    LPoly scaled(const mpq_class& c) const;
    LPoly pow(unsigned k) const;
    // t -> 1/t, i.e. q -> q^{-1}
    LPoly bar() const;

    double eval_t(double t) const;
    // exact value at rational q when only integer powers of q occur
    std::optional<mpq_class> eval_q_exact(const mpq_class& q) const;

    int compare(const LPoly& o) const;
    friend bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }
    friend bool operator<(const LPoly& a, const LPoly& b) { return a.compare(b) < 0; }

    std::string str() const;
    size_t hash() const;

private:
    std::vector<Term> terms_;
};

std::string format_q_power(int texp);

// Dense polynomial helpers over Q (index = degree in t). Used for gcd and
// square-free work on denominators and radicands.
namespace dense {

using Poly = std::vector<mpq_class>;

void trim(Poly& p);
Poly from_lpoly(const LPoly& p, int shift);
LPoly to_lpoly(const Poly& p, int shift);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly divexact(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(Poly a, Poly b);
// f (monic, nonconstant) = prod_i factors[i]^(i+1), each factor monic square-free
std::vector<Poly> yun(const Poly& f);
// scale to integer coefficients with gcd 1 and positive leading coefficient;
// returns the rational c with p = c * result
mpq_class make_primitive(Poly& p);

}  // namespace dense

}  // namespace suq2::qarith
