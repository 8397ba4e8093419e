#include "doctest.h"
#include "suq2/cqalg/haar.hpp"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/spectral/dirac.hpp"

using namespace suq2;
using namespace suq2::spectral;
using cqalg::t_coeff;
using qarith::q_int;

TEST_SUITE("spectral") {

TEST_CASE("Dirac families") {
    auto c = DiracSpec::classical();
    CHECK(c.abs_lambda(Spin(2)) == QScalar(3));
    CHECK(DiracSpec::q_deformed().abs_lambda(Spin(2)) == q_int(6));
    auto t = DiracSpec::from_table({{0, QScalar(1)}, {1, QScalar(7)}});
    CHECK(t.abs_lambda(Spin(1)) == QScalar(7));
    CHECK(parse_dirac_family("q") == DiracFamily::QDeformed);
    CHECK_THROWS(parse_dirac_family("x"));
}

TEST_CASE("summability classes") {
    auto one = QPoint::parse("1"), half = QPoint::parse("1/2");
    auto a = summability_classify(DiracSpec::classical(), one);
    REQUIRE(a.spectral_dimension);
    CHECK(*a.spectral_dimension == doctest::Approx(3.0));
    auto b = summability_classify(DiracSpec::q_deformed(), half);
    REQUIRE(b.spectral_dimension);
    CHECK(*b.spectral_dimension == doctest::Approx(1.0));
    CHECK_FALSE(summability_classify(DiracSpec::classical(), half).spectral_dimension);
    auto p = summability_classify(DiracSpec::q_deformed(), half, Multiplicity::Plain);
    REQUIRE(p.spectral_dimension);
    CHECK(*p.spectral_dimension == doctest::Approx(0.0));
}

TEST_CASE("powers of |D|") {
    fourier::ExactFourier F;
    F.set(Spin(2), qarith::RMat::identity(3));
    F.set(Spin(0), qarith::RMat::identity(1));
    auto spec = DiracSpec::classical();
    CHECK(abs_dirac_power(F, 0, spec) == F);
    auto G = abs_dirac_power(F, 1, spec);
    CHECK(G.at(Spin(2)) == qarith::RMat::identity(3).scaled(QRadical(3)));
    auto H = abs_dirac_power(F, mpq_class(1, 2), spec);
    CHECK(H.at(Spin(2)) == qarith::RMat::identity(3).scaled(QRadical::sqrt(QScalar(3))));
    CHECK(abs_dirac_apply(t_coeff(Spin(2), 1, 1), spec) == t_coeff(Spin(2), 1, 1).scaled(QRadical(3)));
}

TEST_CASE("commutator") {
    auto spec = DiracSpec::q_deformed();
    auto b = t_coeff(Spin(1), 0, 1);
    CHECK(commutator_apply(cqalg::RadicalElement::one(), b, spec).is_zero());
    CHECK(commutator_norm_sq_direct(Spin(1), Spin(1), 0, 0, 1, 1, spec) ==
          commutator_norm_sq_expansion(Spin(1), Spin(1), 0, 0, 1, 1, spec));
    // k = 1/2, s = 0: (|lambda_1/2| - |lambda_0|)^2 ||t_ij||^2
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            QScalar norm = cqalg::haar(t_coeff(Spin(1), i, j) * cqalg::star(t_coeff(Spin(1), i, j))).rational_or_throw();
            QScalar gap = spec.abs_lambda(Spin(1)) - spec.abs_lambda(Spin(0));
            CHECK(commutator_norm_sq_direct(Spin(1), Spin(0), i, j, 0, 0, spec) == gap * gap * norm);
        }
    CHECK(boundedness_lhs_sq(Spin(2), Spin(2), 0, 1, 2, 1, spec).is_zero());
    CHECK(std::isfinite(boundedness_ratio(Spin(2), Spin(1), 0, 1, 1, 0, spec, QPoint::parse("1/2"))));
}

TEST_CASE("property: direct commutator norms match the product expansion") {
    for (auto spec : {DiracSpec::classical(), DiracSpec::q_deformed()})
        for (int tk = 0; tk <= 2; ++tk)
            for (int ts = 0; ts <= 2; ++ts)
                for (int i = 0; i <= tk; ++i)
                    for (int r = 0; r <= ts; ++r)
                        CHECK(commutator_norm_sq_direct(Spin(tk), Spin(ts), i, tk - i, r, ts - r, spec) ==
                              commutator_norm_sq_expansion(Spin(tk), Spin(ts), i, tk - i, r, ts - r, spec));
}

}
