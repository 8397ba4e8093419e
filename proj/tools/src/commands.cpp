#include "commands.hpp"

#include "suq2/calculus/forms.hpp"
#include "suq2/calculus/geometry.hpp"
#include "suq2/calculus/growth.hpp"
#include "suq2/fourier/inequality.hpp"
#include "suq2/io/json.hpp"
#include "suq2/multiplier/multiplier.hpp"
#include "suq2/spectral/dirac.hpp"
#include "suq2/verify/suites.hpp"

#include <sstream>
#include <stdexcept>

namespace suq2::cli {

using cqalg::AlgebraElement;
using cqalg::Spin;
using qarith::QPoint;
using qarith::QScalar;

namespace {

QPoint q_or(const Options& o, const std::string& fallback) { return QPoint::parse(o.q.empty() ? fallback : o.q); }
Spin lmax_or(const Options& o, const std::string& fallback) { return Spin::parse(o.lmax.empty() ? fallback : o.lmax); }
int or_default(int v, int fallback) { return v < 0 ? fallback : v; }

std::vector<QPoint> q_list(const Options& o, const std::string& fallback) {
    std::vector<QPoint> out;
    std::stringstream ss(o.q.empty() ? fallback : o.q);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(QPoint::parse(item));
    return out;
}

Table suite_table(const std::vector<verify::SuiteResult>& results) {
    Table t("suite summary", {"suite", "checked", "failures", "first_failure", "status"});
    for (const auto& r : results)
        t.add({r.name, std::to_string(r.checked), std::to_string(r.failures), r.first_failure, pass_fail(r.ok())});
    return t;
}

Outcome from_suites(const std::vector<verify::SuiteResult>& results) {
    Outcome out;
    out.tables.push_back(suite_table(results));
    for (const auto& r : results) out.ok = out.ok && r.ok();
    return out;
}

spectral::DiracSpec dirac_or(const Options& o, const std::string& fallback) {
    auto fam = spectral::parse_dirac_family(o.dirac.empty() ? fallback : o.dirac);
    return fam == spectral::DiracFamily::Classical ? spectral::DiracSpec::classical() : spectral::DiracSpec::q_deformed();
}

}  // namespace

Outcome run_orthogonality(const Options& o) {
    Spin l = lmax_or(o, "3/2");
    return from_suites({verify::orthogonality_suite(l.twice)});
}

Outcome run_hopf(const Options& o) {
    return from_suites({verify::hopf_suite(or_default(o.trials, 500), or_default(o.degree, 4), o.seed)});
}

Outcome run_fourier(const Options& o) {
    int trials = or_default(o.trials, 200), degree = or_default(o.degree, 3);
    Outcome out = from_suites({verify::fourier_suite(trials, degree, o.seed)});
    verify::RandomSampler s(o.seed);
    nlohmann::json samples = nlohmann::json::array();
    for (int t = 0; t < std::min(trials, 10); ++t) {
        AlgebraElement f = s.element(degree);
        samples.push_back({{"f", io::to_json(f)}, {"fhat", io::to_json(fourier::fourier_transform(f))}});
    }
    out.data = {{"samples", samples}};
    return out;
}

Outcome run_inequality(const Options& o) {
    if (o.kind.empty()) throw std::invalid_argument("inequality needs --kind");
    auto kind = fourier::parse_inequality_kind(o.kind);
    QPoint q = q_or(o, "1");
    Spin lmax = lmax_or(o, "3/2");
    int trials = or_default(o.trials, 20), degree = or_default(o.degree, lmax.twice);
    auto spec = dirac_or(o, "classical");
    fourier::InequalityParams prm;
    prm.p = o.p;
    prm.b = o.b;
    prm.beta = o.beta;
    bool uses_lambda = kind == fourier::InequalityKind::HardyLittlewood || kind == fourier::InequalityKind::Cor58;
    for (int tw = 0; tw <= degree; ++tw) {
        Spin l(tw);
        prm.weights[tw] = uses_lambda ? spec.abs_lambda(l, q) : 1.0 / l.dim();
    }
    fourier::InequalityHarness h(q);
    verify::RandomSampler s(o.seed);
    Outcome out;
    Table t("inequality sweep", {"kind", "q", "p", "b", "beta", "l_max", "seed", "lhs", "rhs", "ratio"});
    double worst = 0;
    for (int i = 0; i < trials; ++i) {
        AlgebraElement f = s.nonzero_element(degree);
        auto r = h.evaluate(kind, f, prm);
        worst = std::max(worst, r.ratio);
        t.add({fourier::to_string(kind), q.str(), fmt(o.p), fmt(o.b), fmt(o.beta), lmax.str(), std::to_string(o.seed),
               fmt(r.lhs), fmt(r.rhs), fmt(r.ratio)});
    }
    Table sum("inequality summary", {"kind", "trials", "max_ratio"});
    sum.add({fourier::to_string(kind), std::to_string(trials), fmt(worst)});
    out.tables = {t, sum};
    return out;
}

namespace {

multiplier::MultiplierSymbol random_symbol(Spin lmax, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    multiplier::MultiplierSymbol s;
    for (int tw = 0; tw <= lmax.twice; ++tw) {
        Spin l(tw);
        qarith::RMat m(l.dim(), l.dim());
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) m(i, j) = qarith::QRadical(static_cast<long>(coef(rng)));
        s.set(l, m);
    }
    return s;
}

multiplier::MultiplierSymbol identity_symbol(Spin lmax) {
    multiplier::MultiplierSymbol s;
    for (int tw = 0; tw <= lmax.twice; ++tw) s.set(Spin(tw), qarith::RMat::identity(tw + 1));
    return s;
}

}  // namespace

Outcome run_multiplier(const Options& o) {
    if (o.bound == o.extract) throw std::invalid_argument("multiplier needs exactly one of --bound, --extract");
    QPoint q = q_or(o, "1/2");
    Outcome out;
    if (o.bound) {
        Spin lmax = lmax_or(o, "4");
        auto sym = o.symbol == "random" ? random_symbol(lmax, o.seed) : identity_symbol(lmax);
        if (o.symbol != "random" && o.symbol != "identity") throw std::invalid_argument("--symbol is identity or random");
        auto num = fourier::to_numeric(sym, q);
        Table t("multiplier bound", {"symbol", "q", "l_max", "p", "q_exp", "lp_lq_bound", "l2_norm", "l2_norm_measured"});
        t.add({o.symbol, q.str(), lmax.str(), fmt(o.p), fmt(o.q_exp),
               fmt(multiplier::lp_lq_bound(num, o.p, o.q_exp, lmax, q)), fmt(multiplier::l2_operator_norm(num)),
               fmt(multiplier::l2_operator_norm_measured(sym, q))});
        out.tables.push_back(t);
        out.data = {{"symbol", io::to_json(sym)}};
        return out;
    }
    Spin lmax = lmax_or(o, "2");
    auto sym = random_symbol(lmax, o.seed);
    auto ex = multiplier::extract_symbol([&](const cqalg::RadicalElement& f) { return multiplier::apply_symbol(sym, f); },
                                         lmax);
    Spin adj_l(std::min(lmax.twice, 2));
    multiplier::MultiplierSymbol small;
    for (int tw = 0; tw <= adj_l.twice; ++tw) small.set(Spin(tw), sym.at(Spin(tw)));
    auto adj = multiplier::symbol_adjoint(small);
    bool left = multiplier::adjoint_identity_holds(small, adj, adj_l, multiplier::Pairing::Left);
    bool right = multiplier::adjoint_identity_holds(small, adj, adj_l, multiplier::Pairing::Right);
    Table t("multiplier extract", {"check", "l_max", "result", "status"});
    bool round = ex.symbol == sym && ex.row_independent && ex.in_span;
    t.add({"extract(apply(sigma)) == sigma", lmax.str(), round ? "exact" : ex.message, pass_fail(round)});
    t.add({"adjoint symbol, pairing h(g^* f)", adj_l.str(), left ? "exact" : "differs", pass_fail(left)});
    t.add({"adjoint symbol, pairing h(f g^*)", adj_l.str(), right ? "exact" : "differs", "info"});
    out.tables.push_back(t);
    out.ok = round && left;
    out.data = {{"symbol", io::to_json(sym)}, {"extracted", io::to_json(ex.symbol)}};
    return out;
}

Outcome run_spectrum(const Options& o) {
    if (!o.classify) throw std::invalid_argument("spectrum needs --classify");
    auto spec = dirac_or(o, "q");
    QPoint q = q_or(o, "1/2");
    std::vector<spectral::Multiplicity> mults;
    if (o.multiplicity == "quantum" || o.multiplicity == "both") mults.push_back(spectral::Multiplicity::QuantumDim);
    if (o.multiplicity == "plain" || o.multiplicity == "both") mults.push_back(spectral::Multiplicity::Plain);
    if (mults.empty()) throw std::invalid_argument("--multiplicity is quantum, plain or both");
    Outcome out;
    Table t("summability", {"family", "q", "multiplicity", "spectral_dimension", "rule"});
    Table ev("summability evidence", {"family", "q", "multiplicity", "beta", "twice_l", "partial_sum"});
    for (auto m : mults) {
        auto r = spectral::summability_classify(spec, q, m);
        std::string mname = m == spectral::Multiplicity::QuantumDim ? "d_l n_l" : "n_l^2";
        t.add({spec.family_name(), q.str(), mname, r.spectral_dimension ? fmt(*r.spectral_dimension) : "none", r.rule});
        for (const auto& row : r.evidence)
            ev.add({spec.family_name(), q.str(), mname, fmt(r.evidence_beta), std::to_string(row.twice_l),
                    fmt(row.partial_sum)});
    }
    out.tables = {t, ev};
    out.extra_csv.push_back({"evidence", ev});
    return out;
}

Outcome run_commutator(const Options& o) {
    if (!o.scan) throw std::invalid_argument("commutator needs --scan");
    auto spec = dirac_or(o, "q");
    QPoint q = q_or(o, "1/2");
    Spin lmax = lmax_or(o, "3/2");
    std::vector<std::string> cols{"k", "s", "i", "j", "p", "r", "lambda_family", "q", "ratio"};
    Table scan("commutator boundedness ratio scan", cols);
    Table direct("direct commutator ratio scan", cols);
    long exact_checked = 0, exact_fail = 0;
    double worst = 0, worst_direct = 0;
    for (int tk = 0; tk <= lmax.twice; ++tk)
        for (int ts = 0; ts <= lmax.twice; ++ts) {
            Spin k(tk), s(ts);
            for (int i = 0; i < k.dim(); ++i)
                for (int j = 0; j < k.dim(); ++j)
                    for (int p = 0; p < s.dim(); ++p)
                        for (int r = 0; r < s.dim(); ++r) {
                            std::vector<std::string> head{k.str(), s.str(), std::to_string(i), std::to_string(j),
                                                          std::to_string(p), std::to_string(r), spec.family_name(),
                                                          q.str()};
                            double ratio = spectral::boundedness_ratio(k, s, i, j, p, r, spec, q);
                            double dr = spectral::commutator_direct_ratio(k, s, i, j, p, r, spec, q);
                            worst = std::max(worst, ratio);
                            worst_direct = std::max(worst_direct, dr);
                            auto a = head, b = head;
                            a.push_back(fmt(ratio));
                            b.push_back(fmt(dr));
                            scan.add(a);
                            direct.add(b);
                            if (tk <= 2 && ts <= 2) {
                                ++exact_checked;
                                if (spectral::commutator_norm_sq_direct(k, s, i, j, p, r, spec) !=
                                    spectral::commutator_norm_sq_expansion(k, s, i, j, p, r, spec))
                                    ++exact_fail;
                            }
                        }
        }
    Table sum("commutator summary", {"quantity", "value", "status"});
    sum.add({"direct == expansion (k, s <= 1)", std::to_string(exact_checked - exact_fail) + "/" +
                                                     std::to_string(exact_checked),
             pass_fail(exact_fail == 0 && exact_checked > 0)});
    sum.add({"sup ratio, stated boundedness form", fmt(worst), "info"});
    sum.add({"sup ratio, direct norm", fmt(worst_direct), "info"});
    Outcome out;
    out.tables = {sum, scan};
    out.primary = 1;
    out.extra_csv.push_back({"direct", direct});
    out.ok = exact_fail == 0;
    return out;
}

namespace {

using calculus::CalculusKind;
using calculus::OneForm;

OneForm form(std::initializer_list<std::pair<char, AlgebraElement>> items) {
    OneForm w;
    for (const auto& [k, v] : items) calculus::add_to(w, k, v);
    return calculus::prune(w);
}

// generator displays of the two calculi
std::map<char, OneForm> generator_displays(CalculusKind kind) {
    auto g = [](char c) { return AlgebraElement::gen(c); };
    QScalar q = QScalar::q_pow(1), qi = QScalar::q_pow(-1), lam = qarith::lambda_q();
    std::map<char, OneForm> d;
    if (kind == CalculusKind::ThreeD) {
        d['a'] = form({{'0', g('a')}, {'+', g('b').scaled(q)}});
        d['b'] = form({{'-', g('a')}, {'0', g('b').scaled(-QScalar::q_pow(-2))}});
        d['c'] = form({{'0', g('c')}, {'+', g('d').scaled(q)}});
        d['d'] = form({{'-', g('c')}, {'0', g('d').scaled(-QScalar::q_pow(-2))}});
        return d;
    }
    QScalar one(1);
    d['a'] = form({{'a', g('a').scaled(q - one)}, {'d', g('a').scaled(qi - one)}, {'b', g('b').scaled(lam)}});
    d['c'] = form({{'a', g('c').scaled(q - one)}, {'d', g('c').scaled(qi - one)}, {'b', g('d').scaled(lam)}});
    QScalar ea = qi - one + q * lam * lam;
    d['b'] = form({{'a', g('b').scaled(ea)}, {'d', g('b').scaled(q - one)}, {'c', g('a').scaled(lam)}});
    d['d'] = form({{'a', g('d').scaled(ea)}, {'d', g('d').scaled(q - one)}, {'c', g('c').scaled(lam)}});
    return d;
}

}  // namespace

Outcome run_calculus(const Options& o) {
    auto kind = calculus::parse_calculus_kind(o.kind.empty() ? "3d" : o.kind);
    Outcome out;
    if (o.check == "leibniz") {
        Spin lmax = lmax_or(o, "3/2");
        int trials = or_default(o.trials, 100), degree = or_default(o.degree, 3);
        Table t("calculus " + calculus::to_string(kind) + " checks", {"check", "checked", "failures", "status"});
        auto row = [&](const std::string& name, long checked, long failures) {
            t.add({name, std::to_string(checked), std::to_string(failures), pass_fail(failures == 0 && checked > 0)});
            out.ok = out.ok && failures == 0 && checked > 0;
        };
        long gen_fail = 0;
        for (const auto& [g, w] : generator_displays(kind))
            if (!calculus::same_form(calculus::exterior_d(kind, AlgebraElement::gen(g)), w)) ++gen_fail;
        row("d on generators matches the displayed formulas", 4, gen_fail);
        verify::RandomSampler s(o.seed);
        std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
        for (int i = 0; i < trials; ++i) {
            AlgebraElement f = AlgebraElement::monomial(s.monomial(degree));
            AlgebraElement g = AlgebraElement::monomial(s.monomial(degree));
            pairs.emplace_back(f, g);
        }
        auto lb = calculus::check_leibniz(kind, pairs);
        row("Leibniz d(fg) = (df)g + f dg", lb.checked, lb.mismatches);
        auto as = calculus::check_right_associativity(kind, pairs);
        row("bimodule (w f) g = w (f g)", as.checked, as.mismatches);
        auto pr = calculus::check_partials_route(kind, lmax.twice);
        row("partials: generator route == symbol route", pr.checked, pr.mismatches);
        auto cr = calculus::check_commutation_route(kind, lmax.twice);
        row("e_i f: generator route == commutation symbols", cr.checked, cr.mismatches);
        auto ec = calculus::check_counit_consistency(kind, lmax.twice);
        row("eps(partial u) == symbol entry", ec.checked, ec.mismatches);
        out.tables.push_back(t);
        nlohmann::json sym = nlohmann::json::array();
        for (int tw = 0; tw <= lmax.twice; ++tw) {
            Spin l(tw);
            nlohmann::json partials = nlohmann::json::object(), comm = nlohmann::json::object();
            for (const auto& [k, m] : calculus::partial_symbols(kind, l)) partials[std::string(1, k)] = io::to_json(m);
            for (const auto& [k, m] : calculus::commutation_symbols(kind, l))
                comm[kind == CalculusKind::FourD ? calculus::commutation_name(k) : std::string(1, k.first)] =
                    io::to_json(m);
            sym.push_back({{"spin", l.str()}, {"partial_symbols", partials}, {"commutation_symbols", comm}});
        }
        out.data = {{"kind", calculus::to_string(kind)}, {"symbols", sym}};
        return out;
    }
    if (o.check == "growth") {
        QPoint q = q_or(o, "1/2");
        Spin lmax = lmax_or(o, "12");
        auto fits = calculus::growth_report(q.value(), lmax.twice);
        Table rows("growth table", {"symbol", "l", "hs_norm_sq_float", "q_int_pow_fit", "hs_norm_sq_consistent",
                                    "q_int_pow_fit_consistent"});
        Table sum("growth exponents against [2l+1]_q", {"symbol", "source", "expected", "slope", "slope_consistent",
                                                        "ratio_spread", "status"});
        for (const auto& f : fits) {
            for (const auto& p : f.points)
                rows.add({f.family.name, Spin(p.twice).str(), fmt(p.hs_sq), fmt(f.slope), fmt(p.hs_sq_consistent),
                          fmt(f.slope_consistent)});
            std::string expect = (f.family.rule == calculus::GrowthRule::AtMost ? "<= " : "") + fmt(f.family.exponent);
            sum.add({f.family.name, f.family.source, f.family.in_criterion ? expect : "-", fmt(f.slope),
                     fmt(f.slope_consistent), fmt(f.ratio_spread),
                     f.family.in_criterion ? pass_fail(f.pass) : "info"});
        }
        out.tables = {sum, rows};
        out.primary = 1;
        return out;
    }
    if (o.check == "admissible") {
        QPoint q = q_or(o, "1/2");
        Spin lmax = lmax_or(o, "6");
        auto spec = dirac_or(o, "q");
        auto rep = calculus::admissibility_check(kind, spec, lmax.twice, q);
        Table t("admissibility against |lambda_l|, " + spec.family_name(),
                {"symbol", "gamma", "gamma_lower_half", "gamma_upper_half", "status"});
        for (const auto& r : rep.rows)
            t.add({r.symbol, fmt(r.gamma), fmt(r.gamma_lower), fmt(r.gamma_upper), pass_fail(r.admissible)});
        Table sum("admissibility summary", {"kind", "family", "q", "gamma_max", "status"});
        sum.add({calculus::to_string(kind), spec.family_name(), q.str(), fmt(rep.gamma_max), pass_fail(rep.admissible)});
        out.tables = {t, sum};
        return out;
    }
    throw std::invalid_argument("--check is leibniz, growth or admissible");
}

Outcome run_dirac_geometric(const Options& o) {
    if (!o.eigenvalues) throw std::invalid_argument("dirac-geometric needs --eigenvalues");
    Spin lmax = lmax_or(o, "3/2");
    Outcome out;
    Table t("geometric Dirac, spectrum of D/lambda per spin block",
            {"l", "q", "mu_plus", "mu_minus", "mult_plus", "mult_minus", "dimension", "max_deviation",
             "minimal_polynomial_exact", "status"});
    for (const auto& q : q_list(o, "1/2,4/5"))
        for (int tw = 1; tw <= lmax.twice; ++tw) {
            auto r = calculus::dirac_eigen_report(Spin(tw), q.value());
            int dim = 2 * Spin(tw).dim() * Spin(tw).dim();
            bool ok = r.minimal_polynomial_exact && r.max_deviation < 1e-9 && r.max_imag < 1e-9 &&
                      r.mult_plus + r.mult_minus == dim;
            out.ok = out.ok && ok;
            t.add({Spin(tw).str(), q.str(), fmt(r.mu_plus), fmt(r.mu_minus), std::to_string(r.mult_plus),
                   std::to_string(r.mult_minus), std::to_string(dim), fmt(r.max_deviation),
                   r.minimal_polynomial_exact ? "yes" : "no", pass_fail(ok)});
        }
    auto op = calculus::check_dirac_operator(lmax.twice);
    Table c("operator route", {"check", "checked", "failures", "status"});
    c.add({"D on spinors == block symbol", std::to_string(op.checked), std::to_string(op.mismatches),
           pass_fail(op.mismatches == 0)});
    out.ok = out.ok && op.mismatches == 0;
    out.tables = {t, c};
    return out;
}

Outcome run_laplacian(const Options& o) {
    if (!o.eigenvalues) throw std::invalid_argument("laplacian needs --eigenvalues");
    Spin lmax = lmax_or(o, "3");
    QPoint q = q_or(o, "1/2");
    Outcome out;
    Table t("q-Laplacian on t^l", {"l", "eigenvalue", "value_at_q", "theta_route", "metric_route", "symbol",
                                   "intermediate_identity", "status"});
    for (int tw = 0; tw <= lmax.twice; ++tw) {
        auto r = calculus::check_laplacian_spin(Spin(tw));
        bool ok = r.theta_mismatches == 0 && r.metric_mismatches == 0 && r.symbol_mismatches == 0 &&
                  r.identity_failures == 0;
        out.ok = out.ok && ok;
        QScalar ev = calculus::laplacian_eigenvalue(Spin(tw));
        auto count = [&](int bad) { return std::to_string(r.checked - bad) + "/" + std::to_string(r.checked); };
        t.add({Spin(tw).str(), ev.str(), fmt(qarith::evaluate(ev, q)), count(r.theta_mismatches),
               count(r.metric_mismatches), r.symbol_mismatches ? "differs" : "exact",
               r.identity_failures ? "fails" : "exact", pass_fail(ok)});
    }
    out.tables.push_back(t);
    return out;
}

}  // namespace suq2::cli
