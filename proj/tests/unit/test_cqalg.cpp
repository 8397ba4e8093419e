#include "doctest.h"
#include "suq2/cqalg/haar.hpp"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/cqalg/peter_weyl.hpp"
#include "suq2/verify/suites.hpp"

using namespace suq2::cqalg;
using suq2::qarith::q_int;

namespace {

AlgebraElement gen(char g) { return AlgebraElement::gen(g); }
QScalar q(int k = 1) { return QScalar::q_pow(k); }
Tensor<QScalar> operator+(Tensor<QScalar> x, const Tensor<QScalar>& y) { return x += y; }

}  // namespace

TEST_SUITE("cqalg") {

TEST_CASE("defining relations") {
    auto a = gen('a'), b = gen('b'), c = gen('c'), d = gen('d');
    CHECK(b * a == (a * b).scaled(q()));
    CHECK(c * a == (a * c).scaled(q()));
    CHECK(b * c == c * b);
    CHECK(d * b == (b * d).scaled(q()));
    CHECK(d * c == (c * d).scaled(q()));
    CHECK(a * d - (b * c).scaled(q(-1)) == AlgebraElement::one());
    CHECK(d * a - (b * c).scaled(q()) == AlgebraElement::one());
    CHECK(AlgebraElement::one() * a == a);
}

TEST_CASE("coproduct, counit, antipode, star on generators") {
    auto a = gen('a'), b = gen('b'), c = gen('c'), d = gen('d');
    CHECK(coproduct(a) == Tensor<QScalar>::simple(a, a) + Tensor<QScalar>::simple(b, c));
    CHECK(coproduct(b) == Tensor<QScalar>::simple(a, b) + Tensor<QScalar>::simple(b, d));
    CHECK(coproduct(AlgebraElement::one()) == Tensor<QScalar>::simple(AlgebraElement::one(), AlgebraElement::one()));
    CHECK(coproduct(a * b) == tensor_multiply(coproduct(a), coproduct(b)));
    CHECK(counit(a) == QScalar(1));
    CHECK(counit(b).is_zero());
    CHECK(star(a) == d);
    CHECK(star(d) == a);
    CHECK(star(b) == c.scaled(-q(-1)));
    CHECK(star(c) == b.scaled(-q()));
    CHECK(antipode(a) == d);
    CHECK(antipode(b) == b.scaled(-q()));
    CHECK(antipode(c) == c.scaled(-q(-1)));
    CHECK(antipode(AlgebraElement::one()) == AlgebraElement::one());
}

TEST_CASE("S(pi_ij) = pi_ji^* on the fundamental corepresentation") {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(antipode(u_coeff(Spin(1), i, j)) == star(u_coeff(Spin(1), j, i)));
}

TEST_CASE("Haar state") {
    auto b = gen('b'), c = gen('c');
    CHECK(haar(AlgebraElement::one()) == QScalar(1));
    CHECK(haar(gen('a')).is_zero());
    CHECK(haar(b * c) == -q_int(4).inverse());
    CHECK(haar(b * c).eval(1.0) == doctest::Approx(-0.5));
    // h((c^* c)^n) = q^n / [n+1] in this convention, and c^* c = -q bc
    AlgebraElement bc_n = AlgebraElement::one();
    for (int n = 1; n <= 5; ++n) {
        bc_n = bc_n * b * c;
        QScalar expect = q_int(2 * n + 2).inverse() * QScalar(n % 2 ? -1 : 1);
        CHECK(haar(bc_n) == expect);
    }
}

TEST_CASE("Haar invariance (id (x) h) Delta = h 1") {
    auto x = gen('a') * gen('d') * gen('b') * gen('c') + gen('b') * gen('c');
    auto dx = coproduct(x);
    AlgebraElement left;
    for (const auto& [k, cf] : dx.terms()) left.add_term(k.first, cf * haar_monomial(k.second));
    CHECK(left == AlgebraElement(haar(x)));
}

TEST_CASE("Peter-Weyl matrix coefficients") {
    auto a = gen('a'), b = gen('b'), c = gen('c'), d = gen('d');
    CHECK(u_coeff(Spin(1), 0, 0) == a);
    CHECK(u_coeff(Spin(1), 0, 1) == b);
    CHECK(u_coeff(Spin(1), 1, 0) == c);
    CHECK(u_coeff(Spin(1), 1, 1) == d);
    CHECK(quantum_dim(Spin(1)) == q_int(4));
    CHECK(q_weight(Spin(1), 0) == q());
    CHECK(q_weight(Spin(1), 1) == q(-1));
    for (int tw = 0; tw <= 4; ++tw) {
        Spin l(tw);
        // counit entrywise gives the identity
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) CHECK(counit(u_coeff(l, i, j)) == QScalar(i == j ? 1 : 0));
        // Tr Q = Tr Q^{-1} = d_l
        QScalar tr, tri;
        for (int i = 0; i < l.dim(); ++i) {
            tr += q_weight(l, i);
            tri += q_weight(l, i).inverse();
        }
        CHECK(tr == quantum_dim(l));
        CHECK(tri == quantum_dim(l));
        CHECK(norm_squares_from_haar(l) == [&] {
            std::vector<QScalar> v;
            for (int i = 0; i < l.dim(); ++i) v.push_back(norm_square(l, i));
            return v;
        }());
    }
}

TEST_CASE("u^l is a corepresentation") {
    for (int tw = 0; tw <= 3; ++tw) {
        Spin l(tw);
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                Tensor<QScalar> expect;
                for (int k = 0; k < l.dim(); ++k)
                    expect += Tensor<QScalar>::simple(u_coeff(l, i, k), u_coeff(l, k, j));
                CHECK(coproduct(u_coeff(l, i, j)) == expect);
            }
    }
}

TEST_CASE("orthogonality of normalized coefficients") {
    RadicalElement t = t_coeff(Spin(1), 0, 0);
    CHECK(haar(t * star(t)) == QRadical(q() / q_int(4)));
    RadicalElement t01 = t_coeff(Spin(1), 0, 1);
    CHECK(haar(t01 * star(t01)) == QRadical(q(-1) / q_int(4)));
    CHECK(haar(t * star(t_coeff(Spin(2), 1, 1))).is_zero());
    CHECK(haar(RadicalElement::one()) == QRadical(1));
}

TEST_CASE("Clebsch-Gordan reconstruction of a products") {
    // t^k_ij t^s_pr = sum_m sum_ut C t^m_ut
    for (auto [tk, ts] : {std::pair{0, 0}, {1, 1}, {1, 2}, {2, 2}}) {
        Spin k(tk), s(ts);
        for (int i = 0; i < k.dim(); ++i)
            for (int j = 0; j < k.dim(); ++j)
                for (int p = 0; p < s.dim(); ++p)
                    for (int r = 0; r < s.dim(); ++r) {
                        RadicalElement sum;
                        for (const auto& [key, cf] : clebsch_row(k, s, i, j, p, r)) {
                            auto [tm, u, v] = key;
                            CHECK(tm <= tk + ts);
                            CHECK((tk + ts - tm) % 2 == 0);
                            sum += t_coeff(Spin(tm), u, v).scaled(cf);
                        }
                        CHECK(sum == t_coeff(k, i, j) * t_coeff(s, p, r));
                    }
    }
}

TEST_CASE("suites on small inputs") {
    CHECK(suq2::verify::orthogonality_suite(2).ok());
    CHECK(suq2::verify::hopf_suite(40, 3, 11).ok());
    CHECK(suq2::verify::fourier_suite(20, 2, 5).ok());
}

TEST_CASE("property: random elements satisfy Hopf identities") {
    suq2::verify::RandomSampler s(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto x = s.element(3), y = s.element(3);
        CHECK(star(star(x)) == x);
        CHECK(star(x * y) == star(y) * star(x));
        CHECK(antipode(x * y) == antipode(y) * antipode(x));
        CHECK(counit(x * y) == counit(x) * counit(y));
        CHECK(coproduct(x * y) == tensor_multiply(coproduct(x), coproduct(y)));
        CHECK(counit_left(coproduct(x)) == x);
        CHECK(counit_right(coproduct(x)) == x);
        CHECK(multiply_after_left(coproduct(x), [](const AlgebraElement& m) { return antipode(m); }) ==
              AlgebraElement(counit(x)));
        CHECK(coassoc_left(coproduct(x)) == coassoc_right(coproduct(x)));
        CHECK(antipode(star(antipode(star(x)))) == x);
        // positivity of the Haar state at q = 1/2
        CHECK(haar(x * star(x)).eval(0.5) >= -1e-12);
    }
}

}
