#include "suq2/calculus/geometry.hpp"

#include "suq2/cqalg/peter_weyl.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace suq2::calculus {

namespace {

constexpr CalculusKind kFour = CalculusKind::FourD;

AlgebraElement coeff(const OneForm& w, char label) {
    auto it = w.find(label);
    return it == w.end() ? AlgebraElement() : it->second;
}

AlgebraElement combine_u(Spin l, int m, const QMat& s, int n) {
    AlgebraElement r;
    for (int k = 0; k < l.dim(); ++k)
        if (!s(k, n).is_zero()) r += cqalg::u_coeff(l, m, k).scaled(s(k, n));
    return r;
}

}  // namespace

Spinor geometric_dirac(const Spinor& s) {
    OneForm d1 = exterior_d(kFour, s.s1);
    OneForm d2 = exterior_d(kFour, s.s2);
    return {coeff(d1, 'a') + coeff(d2, 'b'), coeff(d1, 'c') + coeff(d2, 'd')};
}

QMat dirac_block_u(Spin l) {
    const auto& s = partial_symbols_u(kFour, l);
    int n = l.dim();
    QMat m(2 * n, 2 * n);
    QScalar inv = qarith::lambda_q().inverse();
    auto put = [&](const QMat& b, int r0, int c0) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!b(i, j).is_zero()) m(r0 + i, c0 + j) = b(i, j) * inv;
    };
    put(s.at('a'), 0, 0);
    put(s.at('b'), 0, n);
    put(s.at('c'), n, 0);
    put(s.at('d'), n, n);
    return m;
}

std::pair<QScalar, QScalar> dirac_eigenvalues(Spin l) {
    QScalar plus = QScalar::t_pow(l.twice + 2) * qarith::q_int(l.twice);
    QScalar minus = -(QScalar::t_pow(-l.twice) * qarith::q_int(l.twice + 2));
    return {plus, minus};
}

DiracEigenReport dirac_eigen_report(Spin l, double q) {
    DiracEigenReport rep;
    rep.l = l;
    rep.q = q;
    QMat m = dirac_block_u(l);
    auto [mp, mm] = dirac_eigenvalues(l);
    int n = m.rows();
    QMat a = m - QMat::identity(n).scaled(mp);
    QMat b = m - QMat::identity(n).scaled(mm);
    rep.minimal_polynomial_exact = (a * b).is_zero();
    rep.mu_plus = mp.eval(q);
    rep.mu_minus = mm.eval(q);
    Eigen::MatrixXd e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = m(i, j).eval(q);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
    for (int i = 0; i < n; ++i) {
        auto v = solver.eigenvalues()(i);
        rep.eigenvalues.push_back(v.real());
        rep.max_imag = std::max(rep.max_imag, std::abs(v.imag()));
        double dp = std::abs(v.real() - rep.mu_plus), dm = std::abs(v.real() - rep.mu_minus);
        rep.max_deviation = std::max(rep.max_deviation, std::min(dp, dm));
        (dp <= dm ? rep.mult_plus : rep.mult_minus) += l.dim();
    }
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    return rep;
}

RouteReport check_dirac_operator(int twice_max) {
    RouteReport rep;
    for (int tw = 0; tw <= twice_max; ++tw) {
        Spin l(tw);
        const auto& s = partial_symbols_u(kFour, l);
        for (int m = 0; m < l.dim(); ++m)
            for (int n = 0; n < l.dim(); ++n) {
                const AlgebraElement& u = cqalg::u_coeff(l, m, n);
                rep.checked += 2;
                Spinor first = geometric_dirac({u, AlgebraElement()});
                if (!(first == Spinor{combine_u(l, m, s.at('a'), n), combine_u(l, m, s.at('c'), n)})) ++rep.mismatches;
                Spinor second = geometric_dirac({AlgebraElement(), u});
                if (!(second == Spinor{combine_u(l, m, s.at('b'), n), combine_u(l, m, s.at('d'), n)})) ++rep.mismatches;
            }
    }
    return rep;
}

OneForm to_geometric_basis(const OneForm& w) {
    QScalar denom = (QScalar(1) + QScalar::q_pow(-2)).inverse();
    AlgebraElement fa = coeff(w, 'a'), fd = coeff(w, 'd');
    OneForm r;
    add_to(r, 'z', (fa - fd).scaled(denom));
    add_to(r, 't', (fa + fd.scaled(QScalar::q_pow(-2))).scaled(denom));
    add_to(r, 'b', coeff(w, 'b'));
    add_to(r, 'c', coeff(w, 'c'));
    return prune(std::move(r));
}

OneForm from_geometric_basis(const OneForm& w) {
    AlgebraElement fz = coeff(w, 'z'), ft = coeff(w, 't');
    OneForm r;
    add_to(r, 'a', fz.scaled(QScalar::q_pow(-2)) + ft);
    add_to(r, 'd', ft - fz);
    add_to(r, 'b', coeff(w, 'b'));
    add_to(r, 'c', coeff(w, 'c'));
    return prune(std::move(r));
}

std::vector<MetricEntry> quantum_metric() {
    QScalar zz = QScalar::q_pow(2) / qarith::q_int(4);
    return {{'c', 'b', QScalar(1)}, {'b', 'c', QScalar::q_pow(2)}, {'z', 'z', zz}, {'t', 't', -zz}};
}

AlgebraElement q_laplacian(const AlgebraElement& f) {
    OneForm w = exterior_d(kFour, f);
    QScalar lam = qarith::lambda_q();
    QScalar s = (QScalar::q_pow(2) * lam * lam).inverse();
    return (coeff(w, 'a').scaled(QScalar::q_pow(1)) + coeff(w, 'd').scaled(QScalar::q_pow(-1))).scaled(s);
}

AlgebraElement q_laplacian_metric(const AlgebraElement& f) {
    QScalar lam = qarith::lambda_q();
    auto scale = [&](char lbl) {
        if (lbl == 'b' || lbl == 'c') return (QScalar::q_pow(1) * lam).inverse();
        return qarith::q_int(4) * QScalar::t_pow(-5) / lam;
    };
    auto dhat = [&](const AlgebraElement& x) {
        OneForm w = to_geometric_basis(exterior_d(kFour, x));
        std::map<char, AlgebraElement> out;
        for (char lbl : std::string("zbct")) out[lbl] = coeff(w, lbl).scaled(scale(lbl));
        return out;
    };
    auto first = dhat(f);
    std::map<char, std::map<char, AlgebraElement>> second;
    AlgebraElement r;
    for (const auto& e : quantum_metric()) {
        if (!second.count(e.j)) second[e.j] = dhat(first[e.j]);
        r += second[e.j][e.i].scaled(e.g);
    }
    return r.scaled(QScalar::q_pow(1) / QScalar(2));
}

QScalar laplacian_eigenvalue(Spin l) { return qarith::q_int(l.twice) * qarith::q_int(l.twice + 2); }

bool laplacian_intermediate_identity(Spin l) {
    QScalar num = QScalar::t_pow(2 * l.twice + 2) + QScalar::t_pow(-2 * l.twice - 2) - QScalar::q_pow(1) -
                  QScalar::q_pow(-1);
    QScalar den = (QScalar::q_pow(1) - QScalar::q_pow(-1)).pow(2);
    return num / den == laplacian_eigenvalue(l);
}

LaplacianReport check_laplacian_spin(Spin l, bool metric_route) {
    LaplacianReport rep;
    QScalar lam = qarith::lambda_q();
    QScalar ev = laplacian_eigenvalue(l);
    if (!laplacian_intermediate_identity(l)) ++rep.identity_failures;
    const auto& s = partial_symbols_u(kFour, l);
    QMat sym = (s.at('a').scaled(QScalar::q_pow(1)) + s.at('d').scaled(QScalar::q_pow(-1)))
                   .scaled((QScalar::q_pow(2) * lam * lam).inverse());
    if (sym != QMat::identity(l.dim()).scaled(ev)) ++rep.symbol_mismatches;
    for (int m = 0; m < l.dim(); ++m)
        for (int n = 0; n < l.dim(); ++n) {
            ++rep.checked;
            const AlgebraElement& u = cqalg::u_coeff(l, m, n);
            AlgebraElement expect = u.scaled(ev);
            if (q_laplacian(u) != expect) ++rep.theta_mismatches;
            if (metric_route && q_laplacian_metric(u) != expect) ++rep.metric_mismatches;
        }
    return rep;
}

LaplacianReport check_laplacian(int twice_max, bool metric_route) {
    LaplacianReport rep;
    for (int tw = 0; tw <= twice_max; ++tw) {
        LaplacianReport r = check_laplacian_spin(Spin(tw), metric_route);
        rep.checked += r.checked;
        rep.theta_mismatches += r.theta_mismatches;
        rep.metric_mismatches += r.metric_mismatches;
        rep.symbol_mismatches += r.symbol_mismatches;
        rep.identity_failures += r.identity_failures;
    }
    return rep;
}

bool casimir_relation_holds(Spin l) {
    auto g = generator_matrices(l);
    RMat lhs = g.Xp * g.Xm - g.Xm * g.Xp;
    RMat rhs(l.dim(), l.dim());
    for (int a = 0; a < l.dim(); ++a) rhs(a, a) = QRadical(qarith::q_int(2 * l.weight2(a)));
    return lhs == rhs;
}

std::vector<ClassicalLimitRow> classical_limit(double q, int twice_max) {
    std::vector<ClassicalLimitRow> rows;
    for (int tw = 0; tw <= twice_max; ++tw) {
        Spin l(tw);
        int dim = l.dim();
        double lv = l.value();
        DMat dp(dim, dim), dm(dim, dim), d0(dim, dim), qh(dim, dim);
        for (int a = 0; a < dim; ++a) {
            double n = l.weight2(a) / 2.0;
            d0(a, a) = n;
            qh(a, a) = (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
            if (a + 1 < dim) dp(a + 1, a) = std::sqrt((lv - n) * (lv + n + 1));
            if (a >= 1) dm(a - 1, a) = std::sqrt((lv + n) * (lv - n + 1));
        }
        auto g = generator_matrices(l, q);
        auto three = partial_symbols_weight(CalculusKind::ThreeD, l, q);
        auto diff = [&](const std::string& name, const DMat& x, const DMat& y) {
            double mx = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) mx = std::max(mx, std::abs(x(i, j) - y(i, j)));
            rows.push_back({name, l, mx});
        };
        diff("X+", g.Xp, dp);
        diff("X-", g.Xm, dm);
        diff("q^{H/2}", g.K_, DMat::identity(dim));
        diff("[H/2]_q", qh, d0);
        diff("x-", three.at('-'), dp);
        diff("x+", three.at('+'), dm);
        diff("x0/2", three.at('0').scaled(0.5), d0);
    }
    return rows;
}

}  // namespace suq2::calculus
