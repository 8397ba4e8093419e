#include "suq2/calculus/forms.hpp"

#include "suq2/cqalg/hopf.hpp"
#include "suq2/cqalg/peter_weyl.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace suq2::calculus {

using cqalg::Monomial;

void add_to(OneForm& w, char label, const AlgebraElement& x) {
    if (x.is_zero()) return;
    w[label] += x;
}

OneForm prune(OneForm w) {
    for (auto it = w.begin(); it != w.end();)
        it = it->second.is_zero() ? w.erase(it) : std::next(it);
    return w;
}

OneForm operator+(const OneForm& x, const OneForm& y) {
    OneForm r = x;
    for (const auto& [k, v] : y) add_to(r, k, v);
    return prune(std::move(r));
}

bool same_form(const OneForm& x, const OneForm& y) { return prune(x) == prune(y); }

OneForm left_multiply(const AlgebraElement& f, const OneForm& w) {
    OneForm r;
    for (const auto& [k, v] : w) add_to(r, k, f * v);
    return prune(std::move(r));
}

namespace {

AlgebraElement gen(char g) { return AlgebraElement::gen(g); }
QScalar qp(int k) { return QScalar::q_pow(k); }

int gen_grade(char g) { return (g == 'a' || g == 'c') ? 1 : -1; }

OneForm e_times_gen(CalculusKind kind, char lbl, char g) {
    OneForm r;
    if (kind == CalculusKind::ThreeD) {
        int c = lbl == '0' ? 2 : 1;
        add_to(r, lbl, gen(g).scaled(qp(c * gen_grade(g))));
        return r;
    }
    QScalar lam = qarith::lambda_q();
    bool ac = g == 'a' || g == 'c';
    switch (lbl) {
        case 'a': add_to(r, 'a', gen(g).scaled(qp(ac ? 1 : -1))); break;
        case 'b':
            add_to(r, 'b', gen(g));
            if (g == 'b') add_to(r, 'a', gen('a').scaled(qp(1) * lam));
            if (g == 'd') add_to(r, 'a', gen('c').scaled(qp(1) * lam));
            break;
        case 'c':
            add_to(r, 'c', gen(g));
            if (g == 'a') add_to(r, 'a', gen('b').scaled(qp(1) * lam));
            if (g == 'c') add_to(r, 'a', gen('d').scaled(qp(1) * lam));
            break;
        case 'd':
            if (ac) {
                add_to(r, 'd', gen(g).scaled(qp(-1)));
                add_to(r, 'b', gen(g == 'a' ? 'b' : 'd').scaled(lam));
            } else {
                add_to(r, 'd', gen(g).scaled(qp(1)));
                add_to(r, 'c', gen(g == 'b' ? 'a' : 'c').scaled(lam));
                add_to(r, 'a', gen(g).scaled(qp(1) * lam * lam));
            }
            break;
        default: throw std::invalid_argument("bad one-form label");
    }
    return r;
}

OneForm d_gen(CalculusKind kind, char g) {
    OneForm r;
    if (kind == CalculusKind::ThreeD) {
        switch (g) {
            case 'a': add_to(r, '0', gen('a')); add_to(r, '+', gen('b').scaled(qp(1))); break;
            case 'b': add_to(r, '-', gen('a')); add_to(r, '0', gen('b').scaled(-qp(-2))); break;
            case 'c': add_to(r, '0', gen('c')); add_to(r, '+', gen('d').scaled(qp(1))); break;
            default: add_to(r, '-', gen('c')); add_to(r, '0', gen('d').scaled(-qp(-2))); break;
        }
        return r;
    }
    QScalar lam = qarith::lambda_q();
    if (g == 'a' || g == 'c') {
        add_to(r, 'a', gen(g).scaled(qp(1) - QScalar(1)));
        add_to(r, 'd', gen(g).scaled(qp(-1) - QScalar(1)));
        add_to(r, 'b', gen(g == 'a' ? 'b' : 'd').scaled(lam));
    } else {
        add_to(r, 'a', gen(g).scaled(qp(-1) - QScalar(1) + qp(1) * lam * lam));
        add_to(r, 'd', gen(g).scaled(qp(1) - QScalar(1)));
        add_to(r, 'c', gen(g == 'b' ? 'a' : 'c').scaled(lam));
    }
    return r;
}

OneForm right_multiply_gen(CalculusKind kind, const OneForm& w, char g) {
    OneForm r;
    for (const auto& [lbl, x] : w)
        for (const auto& [lbl2, y] : e_times_gen(kind, lbl, g)) add_to(r, lbl2, x * y);
    return prune(std::move(r));
}

struct DCache {
    std::mutex mu;
    std::unordered_map<uint64_t, OneForm> map;
};

DCache& d_cache(CalculusKind kind) {
    static DCache c3, c4;
    return kind == CalculusKind::ThreeD ? c3 : c4;
}

OneForm d_monomial(CalculusKind kind, const Monomial& m) {
    DCache& cache = d_cache(kind);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(m.key());
        if (it != cache.map.end()) return it->second;
    }
    OneForm w;
    AlgebraElement cur = AlgebraElement::one();
    for (char g : m.word()) {
        w = right_multiply_gen(kind, w, g) + left_multiply(cur, d_gen(kind, g));
        cur = cur * gen(g);
    }
    w = prune(std::move(w));
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.map.emplace(m.key(), w);
    return w;
}

OneForm right_multiply_monomial(CalculusKind kind, OneForm w, const Monomial& m) {
    for (char g : m.word()) w = right_multiply_gen(kind, w, g);
    return w;
}

}  // namespace

OneForm right_multiply(CalculusKind kind, const OneForm& w, const AlgebraElement& f) {
    OneForm r;
    for (const auto& [m, c] : f.terms())
        for (const auto& [k, v] : right_multiply_monomial(kind, w, m)) add_to(r, k, v.scaled(c));
    return prune(std::move(r));
}

OneForm exterior_d(CalculusKind kind, const AlgebraElement& f) {
    OneForm r;
    for (const auto& [m, c] : f.terms())
        for (const auto& [k, v] : d_monomial(kind, m)) add_to(r, k, v.scaled(c));
    return prune(std::move(r));
}

AlgebraElement partial(CalculusKind kind, char label, const AlgebraElement& f) {
    OneForm w = exterior_d(kind, f);
    auto it = w.find(label);
    return it == w.end() ? AlgebraElement() : it->second;
}

AlgebraElement partial_by_symbol(CalculusKind kind, char label, Spin l, int m, int n) {
    const QMat& s = partial_symbols_u(kind, l).at(label);
    AlgebraElement r;
    for (int k = 0; k < l.dim(); ++k)
        if (!s(k, n).is_zero()) r += cqalg::u_coeff(l, m, k).scaled(s(k, n));
    return r;
}

OneForm basis_times_u(CalculusKind kind, char label, Spin l, int m, int n) {
    OneForm w;
    for (const auto& [key, s] : commutation_symbols_u(kind, l)) {
        if (key.first != label) continue;
        AlgebraElement r;
        for (int k = 0; k < l.dim(); ++k)
            if (!s(k, n).is_zero()) r += cqalg::u_coeff(l, m, k).scaled(s(k, n));
        add_to(w, key.second, r);
    }
    return prune(std::move(w));
}

RouteReport check_partials_route(CalculusKind kind, int twice_max) {
    RouteReport rep;
    for (int tw = 0; tw <= twice_max; ++tw) {
        Spin l(tw);
        for (int m = 0; m < l.dim(); ++m)
            for (int n = 0; n < l.dim(); ++n) {
                OneForm w = exterior_d(kind, cqalg::u_coeff(l, m, n));
                for (char lbl : labels(kind)) {
                    ++rep.checked;
                    AlgebraElement g = w.count(lbl) ? w.at(lbl) : AlgebraElement();
                    if (g != partial_by_symbol(kind, lbl, l, m, n)) ++rep.mismatches;
                }
            }
    }
    return rep;
}

RouteReport check_commutation_route(CalculusKind kind, int twice_max) {
    RouteReport rep;
    for (int tw = 0; tw <= twice_max; ++tw) {
        Spin l(tw);
        for (int m = 0; m < l.dim(); ++m)
            for (int n = 0; n < l.dim(); ++n)
                for (char lbl : labels(kind)) {
                    ++rep.checked;
                    OneForm e;
                    e[lbl] = AlgebraElement::one();
                    if (!same_form(right_multiply(kind, e, cqalg::u_coeff(l, m, n)), basis_times_u(kind, lbl, l, m, n)))
                        ++rep.mismatches;
                }
    }
    return rep;
}

RouteReport check_counit_consistency(CalculusKind kind, int twice_max) {
    RouteReport rep;
    for (int tw = 0; tw <= twice_max; ++tw) {
        Spin l(tw);
        auto sym = partial_symbols_u(kind, l);
        for (int m = 0; m < l.dim(); ++m)
            for (int n = 0; n < l.dim(); ++n)
                for (char lbl : labels(kind)) {
                    ++rep.checked;
                    if (cqalg::counit(partial(kind, lbl, cqalg::u_coeff(l, m, n))) != sym.at(lbl)(m, n)) ++rep.mismatches;
                }
    }
    return rep;
}

RouteReport check_leibniz(CalculusKind kind, const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs) {
    RouteReport rep;
    for (const auto& [f, g] : pairs) {
        ++rep.checked;
        OneForm lhs = exterior_d(kind, f * g);
        OneForm rhs = right_multiply(kind, exterior_d(kind, f), g) + left_multiply(f, exterior_d(kind, g));
        if (!same_form(lhs, rhs)) ++rep.mismatches;
    }
    return rep;
}

RouteReport check_right_associativity(CalculusKind kind,
                                      const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs) {
    RouteReport rep;
    for (const auto& [f, g] : pairs)
        for (char lbl : labels(kind)) {
            ++rep.checked;
            OneForm e;
            e[lbl] = AlgebraElement::one();
            if (!same_form(right_multiply(kind, right_multiply(kind, e, f), g), right_multiply(kind, e, f * g)))
                ++rep.mismatches;
        }
    return rep;
}

}  // namespace suq2::calculus
