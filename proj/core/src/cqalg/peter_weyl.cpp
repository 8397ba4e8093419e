#include "suq2/cqalg/peter_weyl.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace suq2::cqalg {

namespace {

struct PlaneKey {
    Monomial m;
    int r, s;
    friend bool operator<(const PlaneKey& x, const PlaneKey& y) {
        return std::tie(x.r, x.s, x.m) < std::tie(y.r, y.s, y.m);
    }
};
using Plane = std::map<PlaneKey, LPoly>;

// A (x) P with A and P commuting; x^{r1} y^{s1} x^{r2} y^{s2} = q^{s1 r2} x^{r1+r2} y^{s1+s2}
Plane plane_mul(const Plane& x, const Plane& y) {
    Plane out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            LPoly c = (cx * cy).shifted(2 * kx.s * ky.r);
            for (const auto& [m, p] : monomial_product(kx.m, ky.m)) {
                PlaneKey key{m, kx.r + ky.r, kx.s + ky.s};
                auto it = out.find(key);
                LPoly v = c * p;
                if (it == out.end())
                    out.emplace(key, std::move(v));
                else {
                    it->second += v;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    return out;
}

std::unique_ptr<SpinBlock> build_block(Spin l) {
    auto blk = std::make_unique<SpinBlock>();
    blk->l = l;
    const int n = l.dim();
    Plane X{{PlaneKey{Monomial::gen('a'), 1, 0}, LPoly(1)}, {PlaneKey{Monomial::gen('b'), 0, 1}, LPoly(1)}};
    Plane Y{{PlaneKey{Monomial::gen('c'), 1, 0}, LPoly(1)}, {PlaneKey{Monomial::gen('d'), 0, 1}, LPoly(1)}};
    blk->u.assign(static_cast<size_t>(n), std::vector<AlgebraElement>(static_cast<size_t>(n)));
    for (int row = 0; row < n; ++row) {
        Plane P{{PlaneKey{Monomial::one(), 0, 0}, LPoly(1)}};
        for (int e = 0; e < l.twice - row; ++e) P = plane_mul(P, X);
        for (int e = 0; e < row; ++e) P = plane_mul(P, Y);
        for (const auto& [key, c] : P) blk->u[static_cast<size_t>(row)][static_cast<size_t>(key.s)].add_term(key.m, QScalar(c));
    }
    for (int m = 0; m < n; ++m) blk->N.push_back(qarith::gauss_binomial_q2(l.twice, m));
    return blk;
}

std::mutex block_mutex;
std::map<int, std::unique_ptr<SpinBlock>> blocks;

void check_index(Spin l, int m) {
    if (m < 0 || m >= l.dim()) throw std::out_of_range("matrix index out of range for spin " + l.str());
}

}  // namespace

const SpinBlock& spin_block(Spin l) {
    std::lock_guard<std::mutex> lock(block_mutex);
    auto it = blocks.find(l.twice);
    if (it == blocks.end()) it = blocks.emplace(l.twice, build_block(l)).first;
    return *it->second;
}

const AlgebraElement& u_coeff(Spin l, int m, int n) {
    check_index(l, m);
    check_index(l, n);
    return spin_block(l).u[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

QScalar norm_square(Spin l, int m) {
    check_index(l, m);
    return spin_block(l).N[static_cast<size_t>(m)];
}

QRadical nu_ratio(Spin l, int m, int n) {
    if (m == n) return QRadical(1);
    return QRadical::sqrt(norm_square(l, m) / norm_square(l, n));
}

RadicalElement t_coeff(Spin l, int m, int n) {
    QRadical r = nu_ratio(l, m, n);
    RadicalElement out;
    for (const auto& [mono, c] : u_coeff(l, m, n).terms()) out.add_term(mono, r * c);
    return out;
}

QScalar q_weight(Spin l, int i) { return QScalar::t_pow(-2 * l.weight2(i)); }

std::vector<QScalar> q_matrix(Spin l) {
    std::vector<QScalar> out;
    for (int i = 0; i < l.dim(); ++i) out.push_back(q_weight(l, i));
    return out;
}

QScalar quantum_dim(Spin l) { return qarith::q_int(2 * l.dim()); }

std::vector<QScalar> norm_squares_from_haar(Spin l) {
    QScalar base = q_weight(l, 0) / quantum_dim(l);
    std::vector<QScalar> out;
    for (int k = 0; k < l.dim(); ++k) {
        const AlgebraElement& u = u_coeff(l, k, 0);
        out.push_back(base / haar(u * star(u)));
    }
    return out;
}

std::map<std::tuple<int, int, int>, QRadical> clebsch_row(Spin k, Spin s, int i, int j, int p, int r) {
    // Work in the u-basis and restore the sqrt(N) factors at the end.
    AlgebraElement prod = u_coeff(k, i, j) * u_coeff(s, p, r);
    QRadical front = nu_ratio(k, i, j) * nu_ratio(s, p, r);
    std::map<std::tuple<int, int, int>, QRadical> out;
    for (int tm = std::abs(k.twice - s.twice); tm <= k.twice + s.twice; tm += 2) {
        Spin m(tm);
        QScalar dm = quantum_dim(m);
        for (int u = 0; u < m.dim(); ++u)
            for (int t = 0; t < m.dim(); ++t) {
                QScalar hv = haar(prod * star(u_coeff(m, u, t)));
                if (hv.is_zero()) continue;
                // t^m_ut = nu_u/nu_t u_ut, and h(u_ut u_ut^*) = (N_t/N_u) q_t/d
                QRadical c = front * nu_ratio(m, u, t) * (hv * dm / q_weight(m, t));
                out.emplace(std::make_tuple(tm, u, t), c);
            }
    }
    return out;
}

ClebschTable clebsch_coefficients(Spin k, Spin s) {
    ClebschTable out;
    for (int i = 0; i < k.dim(); ++i)
        for (int j = 0; j < k.dim(); ++j)
            for (int p = 0; p < s.dim(); ++p)
                for (int r = 0; r < s.dim(); ++r)
                    for (const auto& [key, c] : clebsch_row(k, s, i, j, p, r))
                        out.emplace(ClebschKey{i, j, p, r, std::get<0>(key), std::get<1>(key), std::get<2>(key)}, c);
    return out;
}

}  // namespace suq2::cqalg
