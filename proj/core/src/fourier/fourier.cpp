#include "suq2/fourier/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace suq2::fourier {

using cqalg::Monomial;
using cqalg::q_weight;
using cqalg::quantum_dim;

DualWeights DualWeights::of(Spin l) { return {l, l.dim(), quantum_dim(l), cqalg::q_matrix(l)}; }

bool DualWeights::traces_match() const {
    QScalar tr, tri;
    for (const auto& x : Q) {
        tr += x;
        tri += x.inverse();
    }
    return tr == d && tri == d;
}

namespace {

struct PairKey {
    uint64_t mono;
    int twice, row, col;
    friend bool operator==(const PairKey& a, const PairKey& b) {
        return a.mono == b.mono && a.twice == b.twice && a.row == b.row && a.col == b.col;
    }
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        size_t h = std::hash<uint64_t>()(k.mono);
        return h ^ (static_cast<size_t>(k.twice) * 0x9E3779B1u + static_cast<size_t>(k.row) * 131u + static_cast<size_t>(k.col));
    }
};

std::shared_mutex cache_mutex;
std::unordered_map<PairKey, QScalar, PairKeyHash> pair_cache;
std::map<std::tuple<int, int, int>, AlgebraElement> star_u_cache;

const AlgebraElement& star_u(Spin l, int r, int c) {
    auto key = std::make_tuple(l.twice, r, c);
    {
        std::shared_lock lock(cache_mutex);
        auto it = star_u_cache.find(key);
        if (it != star_u_cache.end()) return it->second;
    }
    AlgebraElement s = cqalg::star(cqalg::u_coeff(l, r, c));
    std::unique_lock lock(cache_mutex);
    return star_u_cache.emplace(key, std::move(s)).first->second;
}

// h(m u^l_{rc}^*)
QScalar pair_value(const Monomial& m, Spin l, int r, int c) {
    if (m.grade() != l.twice - 2 * c) return QScalar();
    PairKey key{m.key(), l.twice, r, c};
    {
        std::shared_lock lock(cache_mutex);
        auto it = pair_cache.find(key);
        if (it != pair_cache.end()) return it->second;
    }
    QScalar v = cqalg::haar(AlgebraElement::monomial(m) * star_u(l, r, c));
    std::unique_lock lock(cache_mutex);
    pair_cache.emplace(key, v);
    return v;
}

template <class K>
ExactFourier transform_impl(const cqalg::Element<K>& f) {
    ExactFourier out;
    int deg = f.degree();
    for (int tw = 0; tw <= deg; ++tw) {
        Spin l(tw);
        RMat M(l.dim(), l.dim());
        bool any = false;
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                // fhat_ij = h(f t_ji^*) = (nu_j / nu_i) h(f u_ji^*)
                K s;
                for (const auto& [m, c] : f.terms()) {
                    QScalar v = pair_value(m, l, j, i);
                    if (!v.is_zero()) s += c * v;
                }
                if (s.is_zero()) continue;
                M(i, j) = cqalg::nu_ratio(l, j, i) * QRadical(s);
                any = true;
            }
        if (any) out.set(l, std::move(M));
    }
    return out;
}

}  // namespace

ExactFourier fourier_transform(const AlgebraElement& f) { return transform_impl(f); }
ExactFourier fourier_transform(const RadicalElement& f) { return transform_impl(f); }

NumericFourier to_numeric(const ExactFourier& F, const QPoint& q) {
    NumericFourier out;
    for (const auto& [tw, M] : F.blocks()) out.set(Spin(tw), qarith::to_double(M, q));
    return out;
}

RadicalElement inverse_fourier(const ExactFourier& F) {
    RadicalElement out;
    for (const auto& [tw, M] : F.blocks()) {
        Spin l(tw);
        QScalar d = quantum_dim(l);
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                const QRadical& c = M(j, i);
                if (c.is_zero()) continue;
                // t_ij = (nu_i / nu_j) u_ij
                QRadical w = c * cqalg::nu_ratio(l, i, j) * (d / q_weight(l, j));
                for (const auto& [m, p] : cqalg::u_coeff(l, i, j).terms()) out.add_term(m, w * p);
            }
    }
    return out;
}

AlgebraElement inverse_fourier_rational(const ExactFourier& F) { return cqalg::lower(inverse_fourier(F)); }

UCoordinates u_coordinates(const AlgebraElement& f) {
    UCoordinates out;
    int deg = f.degree();
    for (int tw = 0; tw <= deg; ++tw) {
        Spin l(tw);
        qarith::QMat M(l.dim(), l.dim());
        bool any = false;
        QScalar d = quantum_dim(l);
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                QScalar s;
                for (const auto& [m, c] : f.terms()) {
                    QScalar v = pair_value(m, l, i, j);
                    if (!v.is_zero()) s += c * v;
                }
                if (s.is_zero()) continue;
                M(i, j) = s * d * cqalg::norm_square(l, i) / (cqalg::norm_square(l, j) * q_weight(l, j));
                any = true;
            }
        if (any) out.emplace(tw, std::move(M));
    }
    return out;
}

AlgebraElement from_u_coordinates(const UCoordinates& c) {
    AlgebraElement out;
    for (const auto& [tw, M] : c) {
        Spin l(tw);
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j)
                if (!M(i, j).is_zero()) out += cqalg::u_coeff(l, i, j).scaled(M(i, j));
    }
    return out;
}

QRadical hs_norm_sq(const RMat& M, Spin l) {
    if (M.rows() != l.dim() || M.cols() != l.dim()) throw std::invalid_argument("hs_norm_sq: dimension mismatch");
    QRadical s;
    for (int i = 0; i < l.dim(); ++i) {
        QRadical row;
        for (int n = 0; n < l.dim(); ++n)
            if (!M(i, n).is_zero()) row += M(i, n) * M(i, n);
        if (!row.is_zero()) s += row * q_weight(l, i).inverse();
    }
    return s;
}

QScalar hs_norm_sq(const qarith::QMat& M, Spin l) {
    if (M.rows() != l.dim() || M.cols() != l.dim()) throw std::invalid_argument("hs_norm_sq: dimension mismatch");
    QScalar s;
    for (int i = 0; i < l.dim(); ++i) {
        QScalar row;
        for (int n = 0; n < l.dim(); ++n)
            if (!M(i, n).is_zero()) row += M(i, n) * M(i, n);
        if (!row.is_zero()) s += row * q_weight(l, i).inverse();
    }
    return s;
}

double hs_norm_sq(const DMat& M, Spin l, double q) {
    if (M.rows() != l.dim() || M.cols() != l.dim()) throw std::invalid_argument("hs_norm_sq: dimension mismatch");
    double s = 0;
    for (int i = 0; i < l.dim(); ++i) {
        double row = 0;
        for (int n = 0; n < l.dim(); ++n) row += M(i, n) * M(i, n);
        s += std::pow(q, l.weight2(i)) * row;
    }
    return s;
}

double dual_lp_norm(const NumericFourier& F, double p, const QPoint& q) {
    if (!(p >= 1.0)) throw std::invalid_argument("dual_lp_norm: p must be >= 1");
    double acc = 0;
    for (const auto& [tw, M] : F.blocks()) {
        Spin l(tw);
        double n = l.dim();
        double r = std::sqrt(std::max(0.0, hs_norm_sq(M, l, q.value()))) / std::sqrt(n);
        if (std::isinf(p))
            acc = std::max(acc, r);
        else if (r > 0)
            acc += qarith::evaluate(quantum_dim(l), q) * n * std::pow(r, p);
    }
    return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double dual_lp_norm(const ExactFourier& F, double p, const QPoint& q) { return dual_lp_norm(to_numeric(F, q), p, q); }

QRadical plancherel_sum(const ExactFourier& F) {
    QRadical s;
    for (const auto& [tw, M] : F.blocks()) s += hs_norm_sq(M, Spin(tw)) * quantum_dim(Spin(tw));
    return s;
}

namespace {

template <class T>
T dn_weight(Spin l, const QPoint& q);

template <>
double dn_weight<double>(Spin l, const QPoint& q) {
    return qarith::evaluate(quantum_dim(l), q) * l.dim();
}

template <>
mpq_class dn_weight<mpq_class>(Spin l, const QPoint& q) {
    auto d = qarith::evaluate_exact(quantum_dim(l), q);
    if (!d) throw std::invalid_argument("exact Paley constant needs a rational q");
    return *d * l.dim();
}

template <class T>
T paley_sorted(const std::map<int, T>& phi, const QPoint& q) {
    if (phi.empty()) throw std::invalid_argument("paley_constant: empty support");
    std::vector<std::pair<T, T>> v;
    for (const auto& [tw, x] : phi) {
        if (!(x > 0)) throw std::invalid_argument("paley_constant: phi must be positive");
        v.emplace_back(x, dn_weight<T>(Spin(tw), q));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    T best = 0, cum = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        cum += v[i].second;
        if (i + 1 < v.size() && v[i + 1].first == v[i].first) continue;
        T cand = v[i].first * cum;
        if (cand > best) best = cand;
    }
    return best;
}

template <class T>
T paley_brute(const std::map<int, T>& phi, const QPoint& q) {
    if (phi.empty()) throw std::invalid_argument("paley_constant: empty support");
    T best = 0;
    for (const auto& [tw_t, t] : phi) {
        T s = 0;
        for (const auto& [tw, x] : phi)
            if (x >= t) s += dn_weight<T>(Spin(tw), q);
        T cand = t * s;
        if (cand > best) best = cand;
    }
    return best;
}

}  // namespace

double paley_constant(const std::map<int, double>& phi, const QPoint& q) { return paley_sorted(phi, q); }
double paley_constant_bruteforce(const std::map<int, double>& phi, const QPoint& q) { return paley_brute(phi, q); }
mpq_class paley_constant(const std::map<int, mpq_class>& phi, const QPoint& q) { return paley_sorted(phi, q); }
mpq_class paley_constant_bruteforce(const std::map<int, mpq_class>& phi, const QPoint& q) { return paley_brute(phi, q); }

}  // namespace suq2::fourier
