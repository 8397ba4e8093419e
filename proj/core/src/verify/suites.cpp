#include "suq2/verify/suites.hpp"

#include "suq2/cqalg/haar.hpp"
#include "suq2/fourier/fourier.hpp"

namespace suq2::verify {

using qarith::QPoint;
using qarith::QRadical;
using qarith::QScalar;
using RElem = cqalg::RadicalElement;

void SuiteResult::record(bool good, const std::string& what) {
    ++checked;
    if (good) return;
    if (failures == 0) first_failure = what;
    ++failures;
}

Monomial RandomSampler::monomial(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int n = deg(rng_);
    if (n == 0) return Monomial::one();
    std::uniform_int_distribution<int> split(0, n);
    int i = split(rng_);
    std::uniform_int_distribution<int> rest(0, n - i);
    int j = rest(rng_);
    bool d = i > 0 && (rng_() & 1u);
    return Monomial::make(d, i, j, n - i - j);
}

AlgebraElement RandomSampler::element(int max_degree, int max_terms) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> coef(-3, 3);
    AlgebraElement f;
    int n = count(rng_);
    for (int t = 0; t < n; ++t) f.add_term(monomial(max_degree), QScalar(static_cast<long>(coef(rng_))));
    return f;
}

AlgebraElement RandomSampler::nonzero_element(int max_degree, int max_terms) {
    for (;;) {
        AlgebraElement f = element(max_degree, max_terms);
        if (!f.is_zero()) return f;
    }
}

SuiteResult orthogonality_suite(int twice_max) {
    SuiteResult r{"orthogonality"};
    QPoint q7(mpq_class(7, 10));
    auto same_at = [&](const QRadical& x, const QRadical& y) {
        auto xs = x.rational(), ys = y.rational();
        if (xs && ys) return evaluate_exact(*xs, q7) == evaluate_exact(*ys, q7);
        return std::abs(evaluate(x, q7) - evaluate(y, q7)) < 1e-12;
    };
    for (int tk = 0; tk <= twice_max; ++tk)
        for (int ti = 0; ti <= twice_max; ++ti) {
            cqalg::Spin lk(tk), li(ti);
            QScalar d = cqalg::quantum_dim(li);
            for (int k = 0; k < lk.dim(); ++k)
                for (int a = 0; a < lk.dim(); ++a) {
                    RElem tka = cqalg::t_coeff(lk, k, a);
                    for (int i = 0; i < li.dim(); ++i)
                        for (int j = 0; j < li.dim(); ++j) {
                            RElem tij = cqalg::t_coeff(li, i, j);
                            bool hit = tk == ti && k == i && a == j;
                            QRadical first = cqalg::haar(tka * cqalg::star(tij));
                            QRadical second = cqalg::haar(cqalg::star(tij) * tka);
                            QRadical e1 = hit ? QRadical(cqalg::q_weight(li, j) / d) : QRadical();
                            QRadical e2 = hit ? QRadical((d * cqalg::q_weight(li, i)).inverse()) : QRadical();
                            std::string tag = "l=" + lk.str() + "," + li.str() + " " + std::to_string(k) +
                                              std::to_string(a) + std::to_string(i) + std::to_string(j);
                            r.record(first == e1 && same_at(first, e1), "h(t t*) " + tag);
                            r.record(second == e2 && same_at(second, e2), "h(t* t) " + tag);
                        }
                }
        }
    return r;
}

namespace {

using Tensor = cqalg::Tensor<QScalar>;

Tensor star_tensor(const Tensor& t) {
    Tensor out;
    for (const auto& [k, c] : t.terms()) {
        AlgebraElement l = cqalg::star(AlgebraElement::monomial(k.first));
        AlgebraElement r = cqalg::star(AlgebraElement::monomial(k.second));
        for (const auto& [ml, cl] : l.terms())
            for (const auto& [mr, cr] : r.terms()) out.add_term({ml, mr}, c * cl * cr);
    }
    return out;
}

AlgebraElement m_id_antipode(const Tensor& t) {
    AlgebraElement out;
    for (const auto& [k, c] : t.terms())
        out += (AlgebraElement::monomial(k.first) * cqalg::antipode(AlgebraElement::monomial(k.second))).scaled(c);
    return out;
}

AlgebraElement word_product(const std::string& w, bool left_fold) {
    AlgebraElement r = AlgebraElement::one();
    if (left_fold)
        for (char g : w) r = r * AlgebraElement::gen(g);
    else
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = AlgebraElement::gen(*it) * r;
    return r;
}

}  // namespace

SuiteResult hopf_suite(int trials, int max_degree, uint64_t seed) {
    SuiteResult r{"hopf"};
    RandomSampler s(seed);
    AlgebraElement a = AlgebraElement::gen('a'), b = AlgebraElement::gen('b'), c = AlgebraElement::gen('c'),
                   d = AlgebraElement::gen('d'), one = AlgebraElement::one();
    QScalar q = QScalar::q_pow(1), qi = QScalar::q_pow(-1);
    r.record((b * a - (a * b).scaled(q)).is_zero(), "ba = q ab");
    r.record((c * a - (a * c).scaled(q)).is_zero(), "ca = q ac");
    r.record((b * c - c * b).is_zero(), "bc = cb");
    r.record((d * b - (b * d).scaled(q)).is_zero(), "db = q bd");
    r.record((d * c - (c * d).scaled(q)).is_zero(), "dc = q cd");
    r.record(a * d - (b * c).scaled(qi) == one, "ad - q^-1 bc = 1");
    r.record(d * a - (b * c).scaled(q) == one, "da - q bc = 1");
    std::uniform_int_distribution<int> gen(0, 3);
    for (int t = 0; t < trials; ++t) {
        AlgebraElement x = s.element(max_degree), y = s.element(max_degree), z = s.element(max_degree);
        std::string tag = "trial " + std::to_string(t);
        r.record((x * y) * z == x * (y * z), "associativity " + tag);
        std::string w;
        for (int k = 0; k < 2 * max_degree; ++k) w += "abcd"[gen(s.engine())];
        AlgebraElement split = word_product(w.substr(0, w.size() / 2), false) * word_product(w.substr(w.size() / 2), true);
        r.record(word_product(w, true) == word_product(w, false) && split == word_product(w, true), "confluence " + tag);
        Tensor dx = cqalg::coproduct(x);
        r.record(cqalg::coproduct(x * y) == cqalg::tensor_multiply(dx, cqalg::coproduct(y)), "Delta multiplicative " + tag);
        r.record(cqalg::coassoc_left(dx) == cqalg::coassoc_right(dx), "coassociativity " + tag);
        r.record(cqalg::counit_left(dx) == x && cqalg::counit_right(dx) == x, "counit " + tag);
        AlgebraElement ex = AlgebraElement(cqalg::counit(x));
        r.record(cqalg::multiply_after_left(dx, [](const AlgebraElement& e) { return cqalg::antipode(e); }) == ex &&
                     m_id_antipode(dx) == ex,
                 "antipode " + tag);
        r.record(cqalg::counit(x * y) == cqalg::counit(x) * cqalg::counit(y), "counit multiplicative " + tag);
        r.record(cqalg::antipode(x * y) == cqalg::antipode(y) * cqalg::antipode(x), "antipode anti-multiplicative " + tag);
        r.record(cqalg::star(x * y) == cqalg::star(y) * cqalg::star(x), "star anti-multiplicative " + tag);
        r.record(cqalg::star(cqalg::star(x)) == x, "star involutive " + tag);
        r.record(cqalg::coproduct(cqalg::star(x)) == star_tensor(dx), "Delta star " + tag);
        r.record(cqalg::antipode(cqalg::star(cqalg::antipode(cqalg::star(x)))) == x, "S * S * = id " + tag);
    }
    return r;
}

SuiteResult fourier_suite(int trials, int max_degree, uint64_t seed) {
    SuiteResult r{"fourier"};
    RandomSampler s(seed);
    for (int t = 0; t < trials; ++t) {
        AlgebraElement f = s.element(max_degree);
        auto F = fourier::fourier_transform(f);
        std::string tag = "trial " + std::to_string(t);
        r.record(fourier::inverse_fourier_rational(F) == f, "round trip " + tag);
        r.record(fourier::plancherel_sum(F) == QRadical(cqalg::haar(f * cqalg::star(f))), "Plancherel " + tag);
    }
    return r;
}

}  // namespace suq2::verify
