#include "doctest.h"
#include "suq2/cqalg/haar.hpp"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/fourier/fourier.hpp"
#include "suq2/fourier/inequality.hpp"
#include "suq2/verify/suites.hpp"

#include <cmath>

using namespace suq2;
using namespace suq2::fourier;
using cqalg::AlgebraElement;
using qarith::q_int;

namespace {

AlgebraElement gen(char g) { return AlgebraElement::gen(g); }
QPoint qp(const char* s) { return QPoint::parse(s); }

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("dual weights") {
    for (int tw = 0; tw <= 6; ++tw) CHECK(DualWeights::of(Spin(tw)).traces_match());
    auto w = DualWeights::of(Spin(1));
    CHECK(w.n == 2);
    CHECK(w.d == q_int(4));
}

TEST_CASE("transform of simple elements") {
    auto one = fourier_transform(AlgebraElement::one());
    CHECK(one.blocks().size() == 1);
    CHECK(one.at(Spin(0))(0, 0) == QRadical(1));
    auto fa = fourier_transform(gen('a'));
    RMat expect(2, 2);
    expect(0, 0) = QRadical(QScalar::q_pow(1) / q_int(4));
    CHECK(fa.at(Spin(1)) == expect);
    CHECK(fa.at(Spin(0)).is_zero());
    // b = t_01: fhat_ij = h(b t_ji^*) is nonzero at (i, j) = (1, 0) with q_1 / d
    auto fb = fourier_transform(gen('b'));
    RMat eb(2, 2);
    eb(1, 0) = QRadical(QScalar::q_pow(-1) / q_int(4));
    CHECK(fb.at(Spin(1)) == eb);
}

TEST_CASE("inversion") {
    ExactFourier c;
    c.set(Spin(0), RMat::identity(1).scaled(QRadical(5)));
    CHECK(inverse_fourier_rational(c) == AlgebraElement(QScalar(5)));
    for (auto f : {gen('a'), gen('a') * gen('b'), gen('b') * gen('c') + gen('d').scaled(QScalar(3)),
                   gen('a') * gen('a') * gen('c')})
        CHECK(inverse_fourier_rational(fourier_transform(f)) == f);
}

TEST_CASE("u coordinates round trip") {
    auto f = gen('a') * gen('b') + gen('c').scaled(QScalar(2)) + AlgebraElement::one();
    CHECK(from_u_coordinates(u_coordinates(f)) == f);
}

TEST_CASE("Hilbert-Schmidt norm with Q weight") {
    for (int tw = 0; tw <= 5; ++tw) {
        Spin l(tw);
        CHECK(hs_norm_sq(qarith::QMat::identity(l.dim()), l) == q_int(2 * l.dim()));
    }
    CHECK(hs_norm_sq(qarith::QMat(3, 3), Spin(2)).is_zero());
    // diag(q^{-1/2}, q^{1/2}) at l = 1/2: q^{-1} q^{-1} + q q
    qarith::QMat k = qarith::QMat::diagonal({QScalar::t_pow(-1), QScalar::t_pow(1)});
    CHECK(hs_norm_sq(k, Spin(1)) == QScalar::q_pow(2) + QScalar::q_pow(-2));
}

TEST_CASE("dual l^p norms") {
    ExactFourier one;
    one.set(Spin(0), RMat::identity(1));
    for (double p : {1.0, 1.5, 2.0, 3.0, kInfinity}) CHECK(dual_lp_norm(one, p, qp("1/2")) == doctest::Approx(1.0));
    auto fa = fourier_transform(gen('a'));
    double h = qarith::evaluate(cqalg::haar(gen('a') * cqalg::star(gen('a'))), qp("1/2"));
    CHECK(dual_lp_norm(fa, 2.0, qp("1/2")) == doctest::Approx(std::sqrt(h)));
    for (int tw = 0; tw <= 4; ++tw) {
        Spin l(tw);
        ExactFourier id;
        id.set(l, RMat::identity(l.dim()));
        double expect = std::sqrt(q_int(2 * l.dim()).eval(0.5) / l.dim());
        CHECK(dual_lp_norm(id, kInfinity, qp("1/2")) == doctest::Approx(expect));
    }
}

TEST_CASE("Plancherel") {
    verify::RandomSampler s(3);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = s.element(3);
        CHECK(plancherel_sum(fourier_transform(f)) == QRadical(cqalg::haar(f * cqalg::star(f))));
    }
}

TEST_CASE("Paley constant") {
    CHECK(paley_constant(std::map<int, double>{{0, 1.0}}, qp("1/2")) == doctest::Approx(1.0));
    std::map<int, mpq_class> phi;
    for (int tw = 0; tw <= 4; ++tw) phi[tw] = mpq_class(1, tw + 1);
    CHECK(paley_constant(phi, qp("1")) == 11);
    CHECK(paley_constant_bruteforce(phi, qp("1")) == 11);
    std::map<int, mpq_class> scaled;
    for (auto [k, v] : phi) scaled[k] = v * 3;
    CHECK(paley_constant(scaled, qp("1")) == 33);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(1, 20);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<int, mpq_class> r;
        for (int tw = 0; tw <= 6; ++tw) r[tw] = mpq_class(num(rng), num(rng));
        CHECK(paley_constant(r, qp("1/2")) == paley_constant_bruteforce(r, qp("1/2")));
    }
}

TEST_CASE("classical L^p norms by quadrature") {
    QPoint one = qp("1");
    CHECK(lp_norm_classical(AlgebraElement::one(), 3.0, one) == doctest::Approx(1.0));
    CHECK(lp_norm_classical(gen('a'), 2.0, one) == doctest::Approx(std::sqrt(0.5)));
    double prev = 0;
    for (double p : {1.5, 2.0, 4.0, 8.0, 16.0}) {
        double v = lp_norm_classical(gen('a'), p, one);
        CHECK(v > prev);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("inequality harness") {
    InequalityHarness h(qp("1"));
    verify::RandomSampler s(42);
    InequalityParams prm;
    for (int trial = 0; trial < 5; ++trial) {
        auto f = s.nonzero_element(2);
        prm.p = 2.0;
        CHECK(h.evaluate(InequalityKind::HausdorffYoung, f, prm).ratio == doctest::Approx(1.0));
        prm.p = 4.0 / 3.0;
        CHECK(h.evaluate(InequalityKind::HausdorffYoung, f, prm).ratio <= 1.0 + 1e-5);
    }
    CHECK(parse_inequality_kind("hy-paley") == InequalityKind::HYPaley);
    CHECK_THROWS(parse_inequality_kind("nope"));
    prm.p = 3.0;
    CHECK_THROWS(h.evaluate(InequalityKind::HausdorffYoung, gen('a'), prm));
}

TEST_CASE("Hardy-Littlewood ratio is stable in l_max") {
    InequalityHarness h(qp("1"));
    InequalityParams prm;
    prm.p = 1.5;
    prm.beta = 3.0;
    for (int tw = 0; tw <= 6; ++tw) prm.weights[tw] = tw + 1.0;
    double sup = 0;
    for (int degree = 2; degree <= 6; degree += 2) {
        verify::RandomSampler s(degree);
        for (int trial = 0; trial < 3; ++trial) sup = std::max(sup, h.evaluate(InequalityKind::HardyLittlewood, s.nonzero_element(degree), prm).ratio);
        CHECK(std::isfinite(sup));
    }
    CHECK(sup < 10.0);
}

}
