#include "suq2/calculus/symbols.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace suq2::calculus {

CalculusKind parse_calculus_kind(const std::string& s) {
    if (s == "3d" || s == "3D" || s == "three") return CalculusKind::ThreeD;
    if (s == "4d" || s == "4D" || s == "four") return CalculusKind::FourD;
    throw std::invalid_argument("unknown calculus kind: " + s);
}

std::string to_string(CalculusKind k) { return k == CalculusKind::ThreeD ? "3d" : "4d"; }

std::string labels(CalculusKind k) { return k == CalculusKind::ThreeD ? "+-0" : "abcd"; }

std::string commutation_name(std::pair<char, char> key) {
    auto idx = [](char c) -> std::string {
        switch (c) {
            case 'a': return "11";
            case 'b': return "12";
            case 'c': return "21";
            case 'd': return "22";
            default: return std::string(1, c);
        }
    };
    return idx(key.first) + "^" + idx(key.second);
}

namespace {

struct ExactKit {
    using K = QRadical;
    K scalar(const QScalar& x) const { return QRadical(x); }
    K sqrt(const QScalar& x) const { return QRadical::sqrt(x); }
};

struct NumKit {
    using K = double;
    double q;
    double scalar(const QScalar& x) const { return x.eval(q); }
    double sqrt(const QScalar& x) const { return std::sqrt(x.eval(q)); }
};

template <class Kit>
GeneratorMatrices<typename Kit::K> build_generators(Spin l, const Kit& kit) {
    using K = typename Kit::K;
    int n = l.dim();
    GeneratorMatrices<K> g{Mat<K>(n, n), Mat<K>(n, n), Mat<K>(n, n), Mat<K>(n, n)};
    for (int a = 0; a < n; ++a) {
        int w2 = l.weight2(a);
        g.K_(a, a) = kit.scalar(QScalar::t_pow(w2));
        g.Kinv(a, a) = kit.scalar(QScalar::t_pow(-w2));
        if (a + 1 < n) g.Xp(a + 1, a) = kit.sqrt(qarith::q_int(l.twice - w2) * qarith::q_int(l.twice + w2 + 2));
        if (a >= 1) g.Xm(a - 1, a) = kit.sqrt(qarith::q_int(l.twice + w2) * qarith::q_int(l.twice - w2 + 2));
    }
    return g;
}

template <class K>
Mat<K> power(const Mat<K>& m, int k) {
    Mat<K> r = Mat<K>::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

template <class Kit>
SymbolMap<typename Kit::K> build_partials(CalculusKind kind, Spin l, const Kit& kit) {
    using K = typename Kit::K;
    auto g = build_generators(l, kit);
    Mat<K> I = Mat<K>::identity(l.dim());
    QScalar lam = qarith::lambda_q();
    SymbolMap<K> out;
    if (kind == CalculusKind::ThreeD) {
        K th = kit.scalar(QScalar::t_pow(1));
        out['+'] = (g.Xm * g.K_).scaled(th);
        out['-'] = (g.Xp * g.K_).scaled(th);
        out['0'] = (power(g.K_, 4) - I).scaled(kit.scalar((QScalar::q_pow(2) - QScalar(1)).inverse()));
    } else {
        out['a'] = power(g.K_, 2) + (g.Xm * g.Xp).scaled(kit.scalar(QScalar::q_pow(1) * lam * lam)) - I;
        out['b'] = (g.Xm * g.Kinv).scaled(kit.scalar(QScalar::t_pow(1) * lam));
        out['c'] = (g.Kinv * g.Xp).scaled(kit.scalar(QScalar::t_pow(1) * lam));
        out['d'] = power(g.Kinv, 2) - I;
    }
    return out;
}

template <class Kit>
CommutationMap<typename Kit::K> build_commutation(CalculusKind kind, Spin l, const Kit& kit) {
    using K = typename Kit::K;
    auto g = build_generators(l, kit);
    CommutationMap<K> out;
    if (kind == CalculusKind::ThreeD) {
        Mat<K> y = power(g.Kinv, 2);
        out[{'+', '+'}] = y;
        out[{'-', '-'}] = y;
        out[{'0', '0'}] = power(g.Kinv, 4);
        return out;
    }
    int n = l.dim();
    Mat<K> zero(n, n);
    K c0 = kit.scalar(QScalar::t_pow(-1) * (QScalar::q_pow(1) - QScalar::q_pow(-1)));
    // S(l^-) and l^+ as 2x2 arrays of operators, indices 1..2
    auto Sl = [&](int i, int j) -> Mat<K> {
        if (i == 1 && j == 1) return g.K_;
        if (i == 1 && j == 2) return g.Xm.scaled(c0);
        if (i == 2 && j == 1) return zero;
        return g.Kinv;
    };
    auto lp = [&](int i, int j) -> Mat<K> {
        if (i == 1 && j == 1) return g.K_;
        if (i == 1 && j == 2) return zero;
        if (i == 2 && j == 1) return g.Xp.scaled(c0);
        return g.Kinv;
    };
    const std::string lbl = "abcd";
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int al = x / 2 + 1, be = x % 2 + 1, ga = y / 2 + 1, de = y % 2 + 1;
            Mat<K> m = Sl(ga, al) * lp(be, de);
            if (!m.is_zero()) out[{lbl[x], lbl[y]}] = m;
        }
    return out;
}

template <class K>
SymbolMap<K> reverse_all(const SymbolMap<K>& m) {
    SymbolMap<K> r;
    for (const auto& [k, v] : m) r[k] = reverse_weights(v);
    return r;
}

QMat to_u(const RMat& s, Spin l) {
    QMat r(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j)
            if (!s(i, j).is_zero()) r(i, j) = (s(i, j) * cqalg::nu_ratio(l, j, i)).rational_or_throw();
    return r;
}

}  // namespace

GeneratorMatrices<QRadical> generator_matrices(Spin l) { return build_generators(l, ExactKit{}); }
GeneratorMatrices<double> generator_matrices(Spin l, double q) { return build_generators(l, NumKit{q}); }

SymbolMap<QRadical> partial_symbols_weight(CalculusKind kind, Spin l) { return build_partials(kind, l, ExactKit{}); }
SymbolMap<double> partial_symbols_weight(CalculusKind kind, Spin l, double q) {
    return build_partials(kind, l, NumKit{q});
}
CommutationMap<QRadical> commutation_symbols_weight(CalculusKind kind, Spin l) {
    return build_commutation(kind, l, ExactKit{});
}
CommutationMap<double> commutation_symbols_weight(CalculusKind kind, Spin l, double q) {
    return build_commutation(kind, l, NumKit{q});
}

SymbolMap<QRadical> partial_symbols(CalculusKind kind, Spin l) { return reverse_all(partial_symbols_weight(kind, l)); }

CommutationMap<QRadical> commutation_symbols(CalculusKind kind, Spin l) {
    auto m = commutation_symbols_weight(kind, l);
    if (kind == CalculusKind::ThreeD) return m;
    for (auto& [k, v] : m) v = reverse_weights(v);
    return m;
}

namespace {

template <class V, class F>
const V& cached(CalculusKind kind, Spin l, F build) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, V> store;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), l.twice);
    auto it = store.find(key);
    if (it == store.end()) it = store.emplace(key, build()).first;
    return it->second;
}

}  // namespace

const SymbolMap<QScalar>& partial_symbols_u(CalculusKind kind, Spin l) {
    return cached<SymbolMap<QScalar>>(kind, l, [&] {
        SymbolMap<QScalar> out;
        for (const auto& [k, v] : partial_symbols(kind, l)) out[k] = to_u(v, l);
        return out;
    });
}

const CommutationMap<QScalar>& commutation_symbols_u(CalculusKind kind, Spin l) {
    return cached<CommutationMap<QScalar>>(kind, l, [&] {
        CommutationMap<QScalar> out;
        for (const auto& [k, v] : commutation_symbols(kind, l)) out[k] = to_u(v, l);
        return out;
    });
}

}  // namespace suq2::calculus
