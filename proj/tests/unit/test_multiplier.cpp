#include "doctest.h"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/multiplier/multiplier.hpp"
#include "suq2/spectral/dirac.hpp"

#include <random>

using namespace suq2;
using namespace suq2::multiplier;
using cqalg::AlgebraElement;

namespace {

MultiplierSymbol identity_symbol(int twice_max) {
    MultiplierSymbol s;
    for (int tw = 0; tw <= twice_max; ++tw) s.set(Spin(tw), RMat::identity(tw + 1));
    return s;
}

MultiplierSymbol random_symbol(int twice_max, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c(-3, 3);
    MultiplierSymbol s;
    for (int tw = 0; tw <= twice_max; ++tw) {
        RMat m(tw + 1, tw + 1);
        for (int i = 0; i <= tw; ++i)
            for (int j = 0; j <= tw; ++j) m(i, j) = QRadical(static_cast<long>(c(rng)));
        s.set(Spin(tw), m);
    }
    return s;
}

}  // namespace

TEST_SUITE("multiplier") {

TEST_CASE("apply") {
    auto id = identity_symbol(3);
    auto f = AlgebraElement::gen('a') * AlgebraElement::gen('c') + AlgebraElement::gen('d');
    CHECK(apply_symbol(id, f) == cqalg::lift(f));
    MultiplierSymbol lam;
    for (int tw = 0; tw <= 2; ++tw) lam.set(Spin(tw), RMat::identity(tw + 1).scaled(QRadical(tw + 1)));
    CHECK(apply_symbol(lam, cqalg::t_coeff(Spin(2), 0, 0)) == cqalg::t_coeff(Spin(2), 0, 0).scaled(QRadical(3)));
    // A t_mj = sum_s t_ms sigma_sj
    auto sig = random_symbol(1, 4);
    for (int m = 0; m < 2; ++m)
        for (int j = 0; j < 2; ++j) {
            cqalg::RadicalElement expect;
            for (int s = 0; s < 2; ++s) expect += cqalg::t_coeff(Spin(1), m, s).scaled(sig.at(Spin(1))(s, j));
            CHECK(apply_symbol(sig, cqalg::t_coeff(Spin(1), m, j)) == expect);
        }
}

TEST_CASE("extract") {
    auto ex = extract_symbol([](const cqalg::RadicalElement& f) { return f; }, Spin(2));
    CHECK(ex.symbol == identity_symbol(2));
    auto sig = random_symbol(2, 8);
    auto back = extract_symbol([&](const cqalg::RadicalElement& f) { return apply_symbol(sig, f); }, Spin(2));
    CHECK(back.row_independent);
    CHECK(back.symbol == sig);
}

TEST_CASE("gauge change") {
    USymbol u;
    for (int tw = 0; tw <= 3; ++tw) {
        QMat m(tw + 1, tw + 1);
        for (int i = 0; i <= tw; ++i)
            for (int j = 0; j <= tw; ++j) m(i, j) = QScalar((3 * i + 2 * j + tw) % 5 - 2);
        u[tw] = m;
    }
    CHECK(to_u_gauge(to_t_gauge(u)) == u);
    auto f = AlgebraElement::gen('a') * AlgebraElement::gen('c') + AlgebraElement::gen('b');
    CHECK(cqalg::lift(apply_symbol_u(u, f)) == apply_symbol(to_t_gauge(u), f));
}

TEST_CASE("left multiplication is not a Fourier multiplier") {
    auto a = cqalg::lift(AlgebraElement::gen('a'));
    auto ex = extract_symbol([&](const cqalg::RadicalElement& f) { return a * f; }, Spin(1));
    CHECK_FALSE(ex.in_span);
}

TEST_CASE("coinvariance") {
    CHECK(is_coinvariant([](const AlgebraElement& f) { return f; }, Spin(2)));
    USymbol sig;
    for (int tw = 0; tw <= 2; ++tw) {
        QMat m(tw + 1, tw + 1);
        for (int i = 0; i <= tw; ++i)
            for (int j = 0; j <= tw; ++j) m(i, j) = QScalar(i - 2 * j + 1);
        sig[tw] = m;
    }
    CHECK(is_coinvariant([&](const AlgebraElement& f) { return apply_symbol_u(sig, f); }, Spin(2)));
}

TEST_CASE("adjoint symbol") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        auto sig = random_symbol(2, seed);
        CHECK(adjoint_identity_holds(sig, symbol_adjoint(sig), Spin(2), Pairing::Left));
    }
}

TEST_CASE("L^p-L^q bound") {
    QPoint q = QPoint::parse("1/2");
    auto id = fourier::to_numeric(identity_symbol(4), q);
    CHECK(lp_lq_bound(id, 2.0, 2.0, Spin(4), q) == doctest::Approx(1.0));
    CHECK(l2_operator_norm(id) == doctest::Approx(1.0));
    CHECK(l2_operator_norm_measured(identity_symbol(2), q) == doctest::Approx(1.0));
    // single spin with op norm c
    fourier::NumericFourier one;
    one.set(Spin(2), qarith::DMat::identity(3).scaled(2.5));
    double dn = cqalg::quantum_dim(Spin(2)).eval(0.5) * 3;
    CHECK(lp_lq_bound(one, 1.5, 3.0, Spin(2), q) == doctest::Approx(2.5 * std::pow(dn, 1 / 1.5 - 1 / 3.0)));
}

TEST_CASE("quantization") {
    // sigma = lambda_l (Q^l)^{-1} reproduces lambda_l f through the trace formula
    MultiplierSymbol lam, qinv;
    for (int tw = 0; tw <= 2; ++tw) {
        std::vector<QRadical> d;
        for (int i = 0; i <= tw; ++i) d.push_back(QRadical(cqalg::q_weight(Spin(tw), i).inverse()));
        qinv.set(Spin(tw), RMat::diagonal(d));
        lam.set(Spin(tw), RMat::identity(tw + 1).scaled(QRadical(2 * tw + 1)));
    }
    MultiplierSymbol lam_qinv;
    for (int tw = 0; tw <= 2; ++tw) lam_qinv.set(Spin(tw), qinv.at(Spin(tw)).scaled(QRadical(2 * tw + 1)));
    auto f = AlgebraElement::gen('a') * AlgebraElement::gen('b') + AlgebraElement::gen('c');
    CHECK(quantize(qinv, f) == cqalg::lift(f));
    CHECK(quantize(lam_qinv, f) == apply_symbol(lam, f));
    CHECK_FALSE(quantize(identity_symbol(2), f) == cqalg::lift(f));
}

TEST_CASE("seminorms") {
    fourier::NumericFourier s;
    s.set(Spin(0), qarith::DMat::identity(1));
    auto spec = spectral::DiracSpec::classical();
    auto sn = schwartz_seminorms(s, 1.0, 1.0, spec, QPoint::parse("1"));
    CHECK(sn.p_alpha == doctest::Approx(1.0));
    CHECK(sn.q_gamma == doctest::Approx(1.0));
    auto z = schwartz_seminorms(fourier::NumericFourier{}, 1.0, 1.0, spec, QPoint::parse("1"));
    CHECK(z.p_alpha == 0.0);
    CHECK(z.q_gamma == 0.0);
}

TEST_CASE("corrected seminorm comparison holds on random symbols") {
    QPoint q = QPoint::parse("1/2");
    auto spec = spectral::DiracSpec::q_deformed();
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto num = fourier::to_numeric(random_symbol(8, seed), q);
        CHECK(seminorm_bound_hs(num, 1.0, 2.0, spec, q).holds);
    }
}

}
