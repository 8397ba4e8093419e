#include "doctest.h"
#include "suq2/qarith/matrix.hpp"
#include "suq2/qarith/qpoint.hpp"

#include <cmath>
#include <random>

using namespace suq2::qarith;

namespace {

QScalar q() { return QScalar::q_pow(1); }
QScalar qi() { return QScalar::q_pow(-1); }

// (q^n - q^-n) / (q - q^-1) as a double
double q_int_ref(double n, double x) { return x == 1.0 ? n : (std::pow(x, n) - std::pow(x, -n)) / (x - 1 / x); }

}  // namespace

TEST_SUITE("qarith") {

TEST_CASE("q-integers") {
    CHECK(q_int(2) == QScalar(1));
    CHECK(q_int(4) == q() + qi());
    CHECK(*q_int(6).eval_q_exact(2) == mpq_class(21, 4));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == QScalar(LPoly::t_pow(1), LPoly::q_pow(1) + LPoly(1)));
    for (int tw = 1; tw <= 12; ++tw)
        for (double x : {0.5, 0.8, 1.7}) CHECK(q_int(tw).eval(x) == doctest::Approx(q_int_ref(tw / 2.0, x)));
}

TEST_CASE("q-integer recurrence [n+1] = [2][n] - [n-1]") {
    for (int n = 1; n <= 10; ++n) CHECK(q_int(2 * n + 2) == q_int(4) * q_int(2 * n) - q_int(2 * n - 2));
}

TEST_CASE("gaussian binomial in q^2") {
    CHECK(gauss_binomial_q2(2, 1) == QScalar::q_pow(2) + QScalar(1));
    CHECK(gauss_binomial_q2(4, 0) == QScalar(1));
    // q-Pascal: [n,k] = [n-1,k-1] + q^{2k} [n-1,k]
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(gauss_binomial_q2(n, k) ==
                  gauss_binomial_q2(n - 1, k - 1) + QScalar::q_pow(2 * k) * gauss_binomial_q2(n - 1, k));
    CHECK(*gauss_binomial_q2(5, 2).eval_q_exact(1) == 10);
}

TEST_CASE("lambda and exact evaluation") {
    CHECK(lambda_q() == QScalar(1) - QScalar::q_pow(-2));
    CHECK(evaluate(q() + qi(), QPoint(mpq_class(1))) == doctest::Approx(2.0));
    CHECK(evaluate(q() + qi(), QPoint::parse("1/2")) == doctest::Approx(2.5));
    CHECK(*evaluate_exact(q() + qi(), QPoint::parse("1/2")) == mpq_class(5, 2));
    CHECK(evaluate(QRadical::sqrt(q_int(4)), QPoint::parse("1")) == doctest::Approx(std::sqrt(2.0)));
    CHECK(QPoint::parse("0.999").value() == doctest::Approx(0.999));
    CHECK(QPoint::parse("7/10").exact().has_value());
}

TEST_CASE("b_q asymptotic ratio [n]/b_q^{n-1}") {
    auto r = bq_asymptotic_ratio(40, QPoint::parse("2"));
    REQUIRE(r.size() == 40);
    CHECK(r[0] == doctest::Approx(0.5));
    CHECK(r[1] == doctest::Approx(0.625));
    for (double x : r) {
        CHECK(x >= 0.25);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("Laurent polynomial arithmetic") {
    LPoly x = LPoly::q_pow(1) + LPoly(3), y = LPoly::t_pow(-1) - LPoly(2);
    CHECK(x * y == y * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.bar().bar() == x);
    CHECK(LPoly::t_pow(3).bar() == LPoly::t_pow(-3));
    CHECK(x.shifted(2) == x * LPoly::t_pow(2));
    CHECK(LPoly().is_zero());
    CHECK(x.eval_t(2.0) == doctest::Approx(7.0));
}

TEST_CASE("fraction field normalizes") {
    QScalar a = q_int(6) / q_int(4);
    CHECK(a * q_int(4) == q_int(6));
    CHECK((a - a).is_zero());
    CHECK(a.inverse().inverse() == a);
    CHECK(q_int(4) / q_int(4) == QScalar(1));
    CHECK((q() - qi()) * q_int(4) == QScalar::q_pow(2) - QScalar::q_pow(-2));
    CHECK(a.pow(-2) * a.pow(2) == QScalar(1));
}

TEST_CASE("radicals") {
    QRadical s = QRadical::sqrt(q_int(6));
    CHECK(s.squared() == q_int(6));
    CHECK((s * s).rational_or_throw() == q_int(6));
    CHECK(QRadical::sqrt(q_int(4) * q_int(4)).is_rational());
    QRadical t = QRadical::sqrt(q_int(4)) + QRadical(2);
    CHECK(t.eval(0.5) == doctest::Approx(std::sqrt(2.5) + 2));
    CHECK((t - t).is_zero());
    CHECK(QRadical::sqrt(q_int(4) * q_int(6)) == QRadical::sqrt(q_int(4)) * QRadical::sqrt(q_int(6)));
}

TEST_CASE("exact matrices") {
    QMat m(2, 2);
    m(0, 0) = q();
    m(0, 1) = QScalar(1);
    m(1, 1) = qi();
    QMat id = QMat::identity(2);
    CHECK(m * id == m);
    CHECK(m.transpose().transpose() == m);
    CHECK((m - m).is_zero());
    CHECK(QMat::diagonal({q(), qi()}).is_diagonal());
    DMat dm = to_double(m, QPoint::parse("1/2"));
    CHECK(dm(0, 0) == doctest::Approx(0.5));
    CHECK(dm(1, 1) == doctest::Approx(2.0));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(-4, 4), c(-3, 3);
    auto rnd = [&] {
        LPoly p;
        for (int i = 0; i < 3; ++i) p += LPoly::monomial(c(rng), e(rng));
        return QScalar(p);
    };
    for (int trial = 0; trial < 50; ++trial) {
        QScalar x = rnd(), y = rnd();
        for (double t : {0.6, 1.3}) {
            double qv = t * t;
            CHECK((x * y).eval(qv) == doctest::Approx(x.eval(qv) * y.eval(qv)));
            CHECK((x + y).eval(qv) == doctest::Approx(x.eval(qv) + y.eval(qv)));
        }
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

}
