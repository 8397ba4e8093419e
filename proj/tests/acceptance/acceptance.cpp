#include "suq2/calculus/forms.hpp"
#include "suq2/calculus/geometry.hpp"
#include "suq2/calculus/growth.hpp"
#include "suq2/fourier/inequality.hpp"
#include "suq2/multiplier/multiplier.hpp"
#include "suq2/spectral/dirac.hpp"
#include "suq2/verify/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace suq2;
using calculus::CalculusKind;
using calculus::OneForm;
using cqalg::AlgebraElement;
using cqalg::Spin;
using qarith::QPoint;
using qarith::QRadical;
using qarith::QScalar;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
    std::vector<std::string> info;
};

int failures = 0;

void run(int id, const std::string& name, double budget_s, const std::function<Verdict()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = budget_s <= 0 || secs < budget_s;
    bool ok = v.pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs", ok ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str(), secs);
    if (budget_s > 0) std::printf(" of %.0fs budget", budget_s);
    std::printf(")\n");
    for (const auto& line : v.info) std::printf("       info: %s\n", line.c_str());
    std::fflush(stdout);
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Verdict from_suite(const verify::SuiteResult& r) {
    Verdict v;
    v.pass = r.ok();
    v.detail = std::to_string(r.checked) + " checks, " + std::to_string(r.failures) + " failures";
    if (!r.first_failure.empty()) v.detail += ", first: " + r.first_failure;
    return v;
}

OneForm form(std::initializer_list<std::pair<char, AlgebraElement>> items) {
    OneForm w;
    for (const auto& [k, x] : items) calculus::add_to(w, k, x);
    return calculus::prune(w);
}

std::map<char, OneForm> displays(CalculusKind kind) {
    auto g = [](char c) { return AlgebraElement::gen(c); };
    QScalar one(1), q = QScalar::q_pow(1), qi = QScalar::q_pow(-1), lam = one - QScalar::q_pow(-2);
    if (kind == CalculusKind::ThreeD)
        return {{'a', form({{'0', g('a')}, {'+', g('b').scaled(q)}})},
                {'b', form({{'-', g('a')}, {'0', g('b').scaled(-QScalar::q_pow(-2))}})},
                {'c', form({{'0', g('c')}, {'+', g('d').scaled(q)}})},
                {'d', form({{'-', g('c')}, {'0', g('d').scaled(-QScalar::q_pow(-2))}})}};
    QScalar ea = qi - one + q * lam * lam;
    return {{'a', form({{'a', g('a').scaled(q - one)}, {'d', g('a').scaled(qi - one)}, {'b', g('b').scaled(lam)}})},
            {'b', form({{'a', g('b').scaled(ea)}, {'d', g('b').scaled(q - one)}, {'c', g('a').scaled(lam)}})},
            {'c', form({{'a', g('c').scaled(q - one)}, {'d', g('c').scaled(qi - one)}, {'b', g('d').scaled(lam)}})},
            {'d', form({{'a', g('d').scaled(ea)}, {'d', g('d').scaled(q - one)}, {'c', g('c').scaled(lam)}})}};
}

multiplier::MultiplierSymbol random_symbol(int twice_max, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    multiplier::MultiplierSymbol s;
    for (int tw = 0; tw <= twice_max; ++tw) {
        qarith::RMat m(tw + 1, tw + 1);
        for (int i = 0; i <= tw; ++i)
            for (int j = 0; j <= tw; ++j) m(i, j) = QRadical(static_cast<long>(c(rng)));
        s.set(Spin(tw), m);
    }
    return s;
}

Verdict orthogonality() { return from_suite(verify::orthogonality_suite(3)); }

Verdict hopf() { return from_suite(verify::hopf_suite(500, 4, 20240601)); }

Verdict fourier_round_trip() { return from_suite(verify::fourier_suite(200, 3, 20240602)); }

Verdict laplacian() {
    auto r = calculus::check_laplacian(6, true);
    Verdict v;
    v.pass = r.checked > 0 && r.theta_mismatches == 0 && r.metric_mismatches == 0 && r.identity_failures == 0 &&
             r.symbol_mismatches == 0;
    v.detail = "l <= 3, " + std::to_string(r.checked) + " coefficients; theta route " +
               std::to_string(r.theta_mismatches) + ", metric route " + std::to_string(r.metric_mismatches) +
               ", intermediate identity " + std::to_string(r.identity_failures) + " failures";
    return v;
}

Verdict geometric_dirac() {
    const double tol = 1e-9;
    Verdict v;
    v.pass = true;
    double worst = 0;
    for (double q : {0.5, 0.8})
        for (int tw = 1; tw <= 3; ++tw) {
            auto r = calculus::dirac_eigen_report(Spin(tw), q);
            int dim = 2 * (tw + 1) * (tw + 1);
            worst = std::max({worst, r.max_deviation, r.max_imag});
            v.pass = v.pass && r.minimal_polynomial_exact && r.max_deviation < tol && r.max_imag < tol &&
                     r.mult_plus + r.mult_minus == dim;
            v.info.push_back("l=" + Spin(tw).str() + " q=" + num(q) + ": multiplicities " +
                             std::to_string(r.mult_plus) + " (q^{l+1}[l]) + " + std::to_string(r.mult_minus) +
                             " (-q^{-l}[l+1]) = " + std::to_string(dim));
        }
    v.detail = "exact minimal polynomial, max numeric deviation " + num(worst) + " (tol 1e-9)";
    return v;
}

Verdict calculus_generators() {
    Verdict v;
    v.pass = true;
    verify::RandomSampler s(20240606);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (int i = 0; i < 100; ++i) pairs.emplace_back(s.nonzero_element(3, 3), s.nonzero_element(3, 3));
    std::ostringstream d;
    for (auto kind : {CalculusKind::ThreeD, CalculusKind::FourD}) {
        int bad = 0;
        for (const auto& [g, w] : displays(kind))
            if (!calculus::same_form(calculus::exterior_d(kind, AlgebraElement::gen(g)), w)) ++bad;
        auto lb = calculus::check_leibniz(kind, pairs);
        auto as = calculus::check_right_associativity(kind, pairs);
        v.pass = v.pass && bad == 0 && lb.checked == 100 && lb.mismatches == 0 && as.checked > 0 && as.mismatches == 0;
        d << calculus::to_string(kind) << ": displays " << 4 - bad << "/4, Leibniz " << lb.checked - lb.mismatches
          << "/" << lb.checked << ", associativity " << as.checked - as.mismatches << "/" << as.checked << "; ";
    }
    v.detail = d.str();
    v.detail.resize(v.detail.size() - 2);
    return v;
}

Verdict growth() {
    const double tol = 0.3;
    auto fits = calculus::growth_report(0.5, 24, tol);
    Verdict v;
    v.pass = true;
    std::vector<std::string> bad;
    for (const auto& f : fits) {
        std::string expect = (f.family.rule == calculus::GrowthRule::AtMost ? "<=" : "") + num(f.family.exponent);
        std::string line = f.family.name + " slope " + num(f.slope) + " (expected " +
                           (f.family.in_criterion ? expect : "-") + "), t-index weighting " + num(f.slope_consistent);
        if (f.family.in_criterion && !f.pass) {
            v.pass = false;
            bad.push_back(f.family.name);
            line += " <- out of tolerance";
        }
        v.info.push_back(line);
    }
    v.detail = "q=1/2, l <= 12, tol 0.3; out of tolerance: ";
    for (size_t i = 0; i < bad.size(); ++i) v.detail += (i ? ", " : "") + bad[i];
    if (bad.empty()) v.detail += "none";
    return v;
}

Verdict classical_limit() {
    const double tol = 1e-2;
    Verdict v;
    v.pass = true;
    double worst = 0;
    for (const auto& row : calculus::classical_limit(0.999, 4)) {
        bool generator = row.symbol == "X+" || row.symbol == "X-" || row.symbol == "q^{H/2}" || row.symbol == "[H/2]_q";
        if (generator) {
            worst = std::max(worst, row.max_abs_diff);
            v.pass = v.pass && row.max_abs_diff < tol;
        } else if (row.l.twice == 4) {
            v.info.push_back("3D " + row.symbol + " at l=2 differs by " + num(row.max_abs_diff));
        }
    }
    v.detail = "q=0.999, l <= 2, generator symbols max diff " + num(worst) + " (tol 1e-2)";
    return v;
}

Verdict hausdorff_young() {
    const double tol = 1e-5;
    fourier::InequalityHarness h(QPoint::parse("1"), {64, 64});
    verify::RandomSampler s(20240609);
    Verdict v;
    double worst = 0;
    for (double p : {4.0 / 3.0, 1.5, 2.0}) {
        fourier::InequalityParams prm;
        prm.p = p;
        double w = 0, w_nonconst = 0;
        for (int i = 0; i < 20; ++i) {
            auto f = s.nonzero_element(3);
            double r = h.evaluate(fourier::InequalityKind::HausdorffYoung, f, prm).ratio;
            w = std::max(w, r);
            if (f.degree() > 0) w_nonconst = std::max(w_nonconst, r);
        }
        v.info.push_back("p=" + num(p) + " max ratio " + num(w) + ", over non-constant f " + num(w_nonconst));
        worst = std::max(worst, w);
    }
    v.pass = worst <= 1 + tol;
    v.detail = "q=1, 64^3 quadrature, 60 polynomials, max ratio " + num(worst) + " (tol 1 + 1e-5)";
    return v;
}

Verdict paley() {
    QPoint one = QPoint::parse("1");
    std::mt19937_64 rng(20240610);
    std::uniform_int_distribution<int> n(1, 30);
    int agree = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::map<int, mpq_class> phi;
        for (int tw = 0; tw <= 6; ++tw) phi[tw] = mpq_class(n(rng), n(rng));
        for (auto& [k, x] : phi) x.canonicalize();
        QPoint q = trial % 2 ? QPoint::parse("1/2") : one;
        if (fourier::paley_constant(phi, q) == fourier::paley_constant_bruteforce(phi, q)) ++agree;
    }
    std::map<int, mpq_class> worked;
    for (int tw = 0; tw <= 4; ++tw) worked[tw] = mpq_class(1, tw + 1);
    mpq_class m = fourier::paley_constant(worked, one);
    Verdict v;
    v.pass = agree == 20 && m == 11;
    v.detail = std::to_string(agree) + "/20 random phi agree with the threshold scan; phi=1/(2l+1), l<=2: M=" + m.get_str();
    return v;
}

Verdict multiplier_layer() {
    std::mt19937_64 rng(20240611);
    auto sym = random_symbol(4, rng);
    auto ex = multiplier::extract_symbol([&](const cqalg::RadicalElement& f) { return multiplier::apply_symbol(sym, f); },
                                         Spin(4));
    bool round = ex.symbol == sym && ex.row_independent && ex.in_span;
    multiplier::MultiplierSymbol small;
    for (int tw = 0; tw <= 2; ++tw) small.set(Spin(tw), sym.at(Spin(tw)));
    auto adj = multiplier::symbol_adjoint(small);
    bool left = multiplier::adjoint_identity_holds(small, adj, Spin(2), multiplier::Pairing::Left);
    bool right = multiplier::adjoint_identity_holds(small, adj, Spin(2), multiplier::Pairing::Right);
    multiplier::MultiplierSymbol id;
    for (int tw = 0; tw <= 8; ++tw) id.set(Spin(tw), qarith::RMat::identity(tw + 1));
    QPoint q = QPoint::parse("1/2");
    double bound = multiplier::lp_lq_bound(fourier::to_numeric(id, q), 2.0, 2.0, Spin(8), q);
    Verdict v;
    v.pass = round && left && std::abs(bound - 1) < 1e-12;
    v.detail = std::string("extract(apply) ") + (round ? "exact" : "differs") + " (l <= 2); adjoint under h(g^* f) " +
               (left ? "exact" : "differs") + " (l <= 1); identity bound " + num(bound);
    v.info.push_back(std::string("adjoint under h(f g^*): ") + (right ? "exact" : "differs"));
    return v;
}

Verdict summability() {
    auto a = spectral::summability_classify(spectral::DiracSpec::classical(), QPoint::parse("1"));
    auto b = spectral::summability_classify(spectral::DiracSpec::q_deformed(), QPoint::parse("1/2"));
    auto c = spectral::summability_classify(spectral::DiracSpec::classical(), QPoint::parse("1/2"));
    auto show = [](const spectral::SummabilityReport& r) {
        return r.spectral_dimension ? num(*r.spectral_dimension) : std::string("none");
    };
    Verdict v;
    v.pass = a.spectral_dimension && *a.spectral_dimension == 3 && b.spectral_dimension &&
             *b.spectral_dimension == 1 && !c.spectral_dimension;
    v.detail = "classical q=1: " + show(a) + ", q-deformed q=1/2: " + show(b) + ", classical q=1/2: " + show(c);
    return v;
}

Verdict commutator() {
    auto spec = spectral::DiracSpec::q_deformed();
    QPoint q = QPoint::parse("1/2");
    long checked = 0, bad = 0, rows = 0;
    double worst = 0;
    std::ofstream csv("commutator_scan.csv");
    csv << "k,s,i,j,p,r,lambda_family,q,ratio\n";
    for (int tk = 0; tk <= 3; ++tk)
        for (int ts = 0; ts <= 3; ++ts) {
            Spin k(tk), s(ts);
            for (int i = 0; i <= tk; ++i)
                for (int j = 0; j <= tk; ++j)
                    for (int p = 0; p <= ts; ++p)
                        for (int r = 0; r <= ts; ++r) {
                            if (tk <= 2 && ts <= 2) {
                                ++checked;
                                if (spectral::commutator_norm_sq_direct(k, s, i, j, p, r, spec) !=
                                    spectral::commutator_norm_sq_expansion(k, s, i, j, p, r, spec))
                                    ++bad;
                            }
                            double ratio = spectral::boundedness_ratio(k, s, i, j, p, r, spec, q);
                            worst = std::max(worst, ratio);
                            csv << k.str() << ',' << s.str() << ',' << i << ',' << j << ',' << p << ',' << r
                                << ",q,1/2," << num(ratio) << '\n';
                            ++rows;
                        }
        }
    csv.close();
    Verdict v;
    v.pass = checked > 0 && bad == 0 && rows == 900 && csv.good();
    v.detail = "direct == expansion " + std::to_string(checked - bad) + "/" + std::to_string(checked) +
               " (k, s <= 1); scan k, s <= 3/2 wrote " + std::to_string(rows) + " rows to commutator_scan.csv";
    v.info.push_back("sup ratio of the stated boundedness form over the scan: " + num(worst));
    return v;
}

Verdict seminorms() {
    std::mt19937_64 rng(20240614);
    QPoint q = QPoint::parse("1/2");
    auto spec = spectral::DiracSpec::q_deformed();
    int held = 0, held_corrected = 0;
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto num_sym = fourier::to_numeric(random_symbol(8, rng), q);
        auto r = multiplier::seminorm_bound_stated(num_sym, 1.0, 2.0, spec, q);
        if (r.holds) ++held;
        worst = std::max(worst, r.rhs > 0 ? r.lhs / r.rhs : 0.0);
        if (multiplier::seminorm_bound_hs(num_sym, 1.0, 2.0, spec, q).holds) ++held_corrected;
    }
    Verdict v;
    v.pass = held == 50;
    v.detail = "q-deformed, q=1/2, alpha=1, beta=2, l <= 4: stated inequality holds for " + std::to_string(held) +
               "/50, worst lhs/rhs " + num(worst);
    v.info.push_back("with the HS-to-operator factor d_l included: holds for " + std::to_string(held_corrected) + "/50");
    return v;
}

}  // namespace

int main() {
    run(1, "orthogonality relations, l, l' <= 3/2", 60, orthogonality);
    run(2, "Hopf axioms and confluence, 500 triples", 60, hopf);
    run(3, "Fourier round trip and Plancherel, 200 polynomials", 30, fourier_round_trip);
    run(4, "q-Laplacian eigenvalues", 0, laplacian);
    run(5, "geometric Dirac spectrum", 0, geometric_dirac);
    run(6, "3D/4D calculus generators, Leibniz, bimodule", 60, calculus_generators);
    run(7, "growth exponents of symbols", 120, growth);
    run(8, "classical limit", 0, classical_limit);
    run(9, "Hausdorff-Young at q=1", 300, hausdorff_young);
    run(10, "Paley constant", 0, paley);
    run(11, "multiplier extraction, adjoint, L^p-L^q bound", 0, multiplier_layer);
    run(12, "summability classification", 0, summability);
    run(13, "commutator norms and ratio scan", 300, commutator);
    run(14, "seminorm equivalence", 0, seminorms);
    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
