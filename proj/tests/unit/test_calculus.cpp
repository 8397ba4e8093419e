#include "doctest.h"
#include "suq2/calculus/forms.hpp"
#include "suq2/calculus/geometry.hpp"
#include "suq2/calculus/growth.hpp"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/verify/suites.hpp"

#include <cmath>

using namespace suq2;
using namespace suq2::calculus;
using cqalg::AlgebraElement;
using qarith::lambda_q;
using qarith::q_int;

namespace {

AlgebraElement gen(char g) { return AlgebraElement::gen(g); }
QScalar q(int k = 1) { return QScalar::q_pow(k); }
QRadical rq(int k) { return QRadical(q(k)); }

OneForm form(std::initializer_list<std::pair<char, AlgebraElement>> items) {
    OneForm w;
    for (const auto& [k, v] : items) add_to(w, k, v);
    return prune(w);
}

RMat diag(std::vector<QRadical> d) { return RMat::diagonal(d); }

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("generator matrices") {
    auto g = generator_matrices(Spin(2));
    CHECK(g.K_ == diag({rq(-1), QRadical(1), rq(1)}).map([](const QRadical& x) { return x; }));
    CHECK(g.K_ * g.Kinv == RMat::identity(3));
    for (int tw = 0; tw <= 4; ++tw) {
        auto m = generator_matrices(Spin(tw));
        CHECK(m.Xp.transpose() == m.Xm);
        CHECK(casimir_relation_holds(Spin(tw)));
    }
    auto num = generator_matrices(Spin(3), 0.5);
    auto ex = generator_matrices(Spin(3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(num.Xp(i, j) == doctest::Approx(ex.Xp(i, j).eval(0.5)));
}

TEST_CASE("3D symbols at spin 1/2") {
    auto p = partial_symbols_weight(CalculusKind::ThreeD, Spin(1));
    CHECK(p.at('0') == diag({QRadical(-q(-2)), QRadical(1)}));
    auto c = commutation_symbols_weight(CalculusKind::ThreeD, Spin(1));
    CHECK(c.at({'+', '+'}) == diag({rq(1), rq(-1)}));
    CHECK(c.at({'-', '-'}) == diag({rq(1), rq(-1)}));
}

TEST_CASE("4D symbols") {
    for (int tw = 0; tw <= 6; ++tw) {
        Spin l(tw);
        auto p = partial_symbols_weight(CalculusKind::FourD, l);
        for (int i = 0; i < l.dim(); ++i) {
            int n2 = 2 * i - tw;  // twice the weight
            QScalar expect = QScalar::t_pow(2 * tw) + QScalar::t_pow(-2 * tw - 4) - QScalar::t_pow(-2 * n2 - 4) - QScalar(1);
            CHECK(p.at('a')(i, i) == QRadical(expect));
        }
        CHECK(p.at('a').is_diagonal());
        auto c = commutation_symbols_weight(CalculusKind::FourD, l);
        CHECK(c.at({'b', 'b'}) == RMat::identity(l.dim()));
        CHECK(c.at({'c', 'c'}) == RMat::identity(l.dim()));
        // sigma_{j1}^{i2} never appears
        CHECK(c.count({'a', 'b'}) == 0);
        CHECK(c.count({'a', 'd'}) == 0);
    }
    CHECK(commutation_name({'d', 'b'}) == "22^12");
}

TEST_CASE("symbols vanish at spin 0") {
    for (auto kind : {CalculusKind::ThreeD, CalculusKind::FourD})
        for (const auto& [k, m] : partial_symbols(kind, Spin(0))) CHECK(m.is_zero());
}

TEST_CASE("3D exterior derivative") {
    auto K = CalculusKind::ThreeD;
    CHECK(same_form(exterior_d(K, gen('a')), form({{'0', gen('a')}, {'+', gen('b').scaled(q())}})));
    CHECK(same_form(exterior_d(K, gen('d')), form({{'-', gen('c')}, {'0', gen('d').scaled(-q(-2))}})));
    CHECK(exterior_d(K, AlgebraElement::one()).empty());
    CHECK(same_form(right_multiply(K, form({{'+', AlgebraElement::one()}}), gen('a')), form({{'+', gen('a').scaled(q())}})));
    CHECK(same_form(right_multiply(K, form({{'0', AlgebraElement::one()}}), gen('b')),
                    form({{'0', gen('b').scaled(q(-2))}})));
}

TEST_CASE("4D exterior derivative") {
    auto K = CalculusKind::FourD;
    QScalar one(1), lam = lambda_q();
    CHECK(lam == one - q(-2));
    OneForm da = form({{'a', gen('a').scaled(q() - one)}, {'d', gen('a').scaled(q(-1) - one)}, {'b', gen('b').scaled(lam)}});
    CHECK(same_form(exterior_d(K, gen('a')), da));
    CHECK(same_form(right_multiply(K, form({{'a', AlgebraElement::one()}}), gen('a')), form({{'a', gen('a').scaled(q())}})));
    CHECK(same_form(right_multiply(K, form({{'a', AlgebraElement::one()}}), gen('b')),
                    form({{'a', gen('b').scaled(q(-1))}})));
}

TEST_CASE("generator and symbol routes agree") {
    for (auto kind : {CalculusKind::ThreeD, CalculusKind::FourD}) {
        CHECK(check_partials_route(kind, 2).mismatches == 0);
        CHECK(check_commutation_route(kind, 2).mismatches == 0);
        CHECK(check_counit_consistency(kind, 2).mismatches == 0);
    }
}

TEST_CASE("property: Leibniz rule and bimodule associativity") {
    verify::RandomSampler s(17);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (int i = 0; i < 25; ++i) pairs.emplace_back(s.element(2, 3), s.element(2, 3));
    for (auto kind : {CalculusKind::ThreeD, CalculusKind::FourD}) {
        auto lb = check_leibniz(kind, pairs);
        CHECK(lb.checked > 0);
        CHECK(lb.mismatches == 0);
        CHECK(check_right_associativity(kind, pairs).mismatches == 0);
    }
}

TEST_CASE("Dirac block") {
    auto [mp, mm] = dirac_eigenvalues(Spin(1));
    CHECK(mp == QScalar::t_pow(3) * q_int(1));
    CHECK(mm == -(QScalar::t_pow(-1) * q_int(3)));
    CHECK(dirac_block_u(Spin(0)).is_zero());
    for (int tw = 1; tw <= 3; ++tw)
        for (double x : {0.5, 0.8}) {
            auto r = dirac_eigen_report(Spin(tw), x);
            CHECK(r.minimal_polynomial_exact);
            CHECK(r.max_deviation < 1e-9);
            Spin l(tw);
            CHECK(r.mult_plus == l.dim() * (tw + 2));
            CHECK(r.mult_minus == l.dim() * tw);
        }
    CHECK(check_dirac_operator(2).mismatches == 0);
}

TEST_CASE("geometric basis") {
    OneForm w = form({{'a', gen('a')}, {'d', gen('b')}, {'c', gen('c')}});
    CHECK(same_form(from_geometric_basis(to_geometric_basis(w)), w));
    CHECK(quantum_metric().size() == 4);
}

TEST_CASE("q-Laplacian") {
    CHECK(q_laplacian(AlgebraElement::one()).is_zero());
    CHECK(q_laplacian(gen('a')) == gen('a').scaled(q_int(1) * q_int(3)));
    CHECK(q_laplacian_metric(gen('b')) == gen('b').scaled(q_int(1) * q_int(3)));
    for (int tw = 0; tw <= 6; ++tw) {
        CHECK(laplacian_eigenvalue(Spin(tw)) == q_int(tw) * q_int(tw + 2));
        CHECK(laplacian_intermediate_identity(Spin(tw)));
    }
    auto r = check_laplacian(3);
    CHECK(r.checked > 0);
    CHECK(r.theta_mismatches + r.metric_mismatches + r.symbol_mismatches + r.identity_failures == 0);
}

TEST_CASE("classical limit") {
    for (const auto& row : classical_limit(0.9999, 4)) CHECK(row.max_abs_diff < 2e-3);
}

TEST_CASE("growth fits") {
    CHECK(least_squares_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
    // identity: sum_m q^{2m} = [2l+1]
    for (int tw = 0; tw <= 6; ++tw)
        CHECK(weighted_hs_sq(qarith::DMat::identity(tw + 1), 0.5, tw) == doctest::Approx(q_int(2 * tw + 2).eval(0.5)));
    auto fits = growth_report(0.5, 16);
    auto find = [&](const std::string& n) {
        for (const auto& f : fits)
            if (f.family.name == n) return f;
        FAIL("missing family " << n);
        return fits.front();
    };
    CHECK(find("q^{H/2}").slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK(find("sigma_11^11").slope == doctest::Approx(3.0).epsilon(0.05));
    CHECK(find("sigma_12^12").slope == doctest::Approx(1.0));
    CHECK(find("sigma^d").slope == doctest::Approx(1.0).epsilon(0.1));
}

}
