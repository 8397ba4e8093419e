#include "suq2/multiplier/multiplier.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace suq2::multiplier {

using cqalg::norm_square;
using cqalg::nu_ratio;
using cqalg::q_weight;
using cqalg::quantum_dim;
using cqalg::t_coeff;
using cqalg::u_coeff;

MultiplierSymbol to_t_gauge(const USymbol& s) {
    MultiplierSymbol out;
    for (const auto& [tw, M] : s) {
        Spin l(tw);
        RMat R(l.dim(), l.dim());
        for (int a = 0; a < l.dim(); ++a)
            for (int b = 0; b < l.dim(); ++b)
                if (!M(a, b).is_zero()) R(a, b) = nu_ratio(l, a, b) * M(a, b);
        out.set(l, std::move(R));
    }
    return out;
}

USymbol to_u_gauge(const MultiplierSymbol& s) {
    USymbol out;
    for (const auto& [tw, M] : s.blocks()) {
        Spin l(tw);
        QMat R(l.dim(), l.dim());
        for (int a = 0; a < l.dim(); ++a)
            for (int b = 0; b < l.dim(); ++b)
                if (!M(a, b).is_zero()) R(a, b) = (nu_ratio(l, b, a) * M(a, b)).rational_or_throw();
        out.emplace(tw, std::move(R));
    }
    return out;
}

namespace {

const RMat& block_or_throw(const MultiplierSymbol& sigma, Spin l) {
    if (!sigma.has(l)) throw std::out_of_range("symbol has no block for spin " + l.str());
    return sigma.at(l);
}

}  // namespace

RadicalElement apply_symbol(const MultiplierSymbol& sigma, const RadicalElement& f) {
    ExactFourier F = fourier::fourier_transform(f), G;
    for (const auto& [tw, M] : F.blocks()) {
        Spin l(tw);
        const RMat& S = block_or_throw(sigma, l);
        RMat T(l.dim(), l.dim());
        for (int i = 0; i < l.dim(); ++i)
            for (int k = 0; k < l.dim(); ++k)
                if (!S(i, k).is_zero()) T(i, k) = S(i, k) * (q_weight(l, i) / q_weight(l, k));
        G.set(l, T * M);
    }
    return fourier::inverse_fourier(G);
}

RadicalElement apply_symbol(const MultiplierSymbol& sigma, const AlgebraElement& f) {
    return apply_symbol(sigma, cqalg::lift(f));
}

AlgebraElement apply_symbol_u(const USymbol& sigma, const AlgebraElement& f) {
    fourier::UCoordinates c = fourier::u_coordinates(f);
    for (auto& [tw, M] : c) {
        auto it = sigma.find(tw);
        if (it == sigma.end()) throw std::out_of_range("symbol has no block for spin " + Spin(tw).str());
        M = M * it->second.transpose();
    }
    return fourier::from_u_coordinates(c);
}

ExtractResult extract_symbol(const Operator& A, Spin l_max) {
    ExtractResult res;
    for (int tw = 0; tw <= l_max.twice; ++tw) {
        Spin l(tw);
        const int n = l.dim();
        QScalar d = quantum_dim(l);
        std::vector<RadicalElement> tstar;
        RMat sigma(n, n);
        for (int m = 0; m < n; ++m) {
            for (int s = 0; s < n; ++s) tstar.push_back(cqalg::star(t_coeff(l, m, s)));
            for (int j = 0; j < n; ++j) {
                RadicalElement g = A(t_coeff(l, m, j));
                RadicalElement rebuilt;
                for (int s = 0; s < n; ++s) {
                    QRadical c = cqalg::haar(tstar[static_cast<size_t>(m * n + s)] * g) * (d * q_weight(l, m));
                    if (m == 0)
                        sigma(s, j) = c;
                    else if (c != sigma(s, j) && res.row_independent) {
                        res.row_independent = false;
                        res.message = "candidate symbol depends on the row at spin " + l.str();
                    }
                    if (!c.is_zero()) rebuilt += t_coeff(l, m, s).scaled(c);
                }
                if (rebuilt != g && res.in_span) {
                    res.in_span = false;
                    res.message = "A t^l_mj leaves the row span at spin " + l.str();
                }
            }
        }
        res.symbol.set(l, std::move(sigma));
    }
    return res;
}

UExtractResult extract_symbol_u(const RationalOperator& A, Spin l_max) {
    UExtractResult res;
    for (int tw = 0; tw <= l_max.twice; ++tw) {
        Spin l(tw);
        const int n = l.dim();
        QScalar d = quantum_dim(l);
        QMat sigma(n, n);
        for (int m = 0; m < n; ++m) {
            std::vector<AlgebraElement> ustar;
            for (int s = 0; s < n; ++s) ustar.push_back(cqalg::star(u_coeff(l, m, s)));
            for (int j = 0; j < n; ++j) {
                AlgebraElement g = A(u_coeff(l, m, j));
                AlgebraElement rebuilt;
                for (int s = 0; s < n; ++s) {
                    // h(u_ms^* u_ms) = (N_s / N_m) / (d q_m)
                    QScalar c = cqalg::haar(ustar[static_cast<size_t>(s)] * g) * d * q_weight(l, m) *
                                norm_square(l, m) / norm_square(l, s);
                    if (m == 0)
                        sigma(s, j) = c;
                    else if (c != sigma(s, j) && res.row_independent) {
                        res.row_independent = false;
                        res.message = "candidate symbol depends on the row at spin " + l.str();
                    }
                    if (!c.is_zero()) rebuilt += u_coeff(l, m, s).scaled(c);
                }
                if (rebuilt != g && res.in_span) {
                    res.in_span = false;
                    res.message = "A u^l_mj leaves the row span at spin " + l.str();
                }
            }
        }
        res.symbol.emplace(tw, std::move(sigma));
    }
    return res;
}

bool is_coinvariant(const RationalOperator& A, Spin l_max) {
    auto id = [](const AlgebraElement& x) { return x; };
    for (int tw = 0; tw <= l_max.twice; ++tw) {
        Spin l(tw);
        for (int m = 0; m < l.dim(); ++m)
            for (int n = 0; n < l.dim(); ++n) {
                const AlgebraElement& u = u_coeff(l, m, n);
                if (cqalg::coproduct(A(u)) != cqalg::tensor_map(cqalg::coproduct(u), id, A)) return false;
            }
    }
    return true;
}

MultiplierSymbol symbol_adjoint(const MultiplierSymbol& s) {
    MultiplierSymbol out;
    for (const auto& [tw, M] : s.blocks()) out.set(Spin(tw), M.transpose());
    return out;
}

std::string to_string(Pairing p) { return p == Pairing::Left ? "h(g^* f)" : "h(f g^*)"; }

bool adjoint_identity_holds(const MultiplierSymbol& sigma, const MultiplierSymbol& sigma_adj, Spin l_max, Pairing p) {
    std::vector<RadicalElement> basis, Ab, Bb;
    for (int tw = 0; tw <= l_max.twice; ++tw) {
        Spin l(tw);
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                RadicalElement t = t_coeff(l, i, j);
                Ab.push_back(apply_symbol(sigma, t));
                Bb.push_back(apply_symbol(sigma_adj, t));
                basis.push_back(std::move(t));
            }
    }
    for (size_t x = 0; x < basis.size(); ++x)
        for (size_t y = 0; y < basis.size(); ++y) {
            QRadical lhs, rhs;
            if (p == Pairing::Left) {
                lhs = cqalg::haar(cqalg::star(basis[y]) * Ab[x]);
                rhs = cqalg::haar(cqalg::star(Bb[y]) * basis[x]);
            } else {
                lhs = cqalg::haar(Ab[x] * cqalg::star(basis[y]));
                rhs = cqalg::haar(basis[x] * cqalg::star(Bb[y]));
            }
            if (lhs != rhs) return false;
        }
    return true;
}

double op_norm(const qarith::DMat& m) {
    if (m.rows() == 0) return 0;
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
    return svd.singularValues()(0);
}

double lp_lq_bound(const NumericFourier& sigma, double p, double q_exp, Spin l_max, const QPoint& q) {
    if (!(p > 1 && p <= 2 && q_exp >= 2 && std::isfinite(q_exp)))
        throw std::invalid_argument("lp_lq_bound needs 1 < p <= 2 <= q < inf");
    const double e = 1 / p - 1 / q_exp;
    std::vector<std::pair<double, double>> norms;
    for (const auto& [tw, M] : sigma.blocks()) {
        if (tw > l_max.twice) continue;
        Spin l(tw);
        norms.emplace_back(op_norm(M), qarith::evaluate(quantum_dim(l), q) * l.dim());
    }
    // s -> c^- for each attained norm c: the level set is {||sigma|| >= c}
    double best = 0;
    for (const auto& [c, w0] : norms) {
        if (c <= 0) continue;
        double sum = 0;
        for (const auto& [c2, w] : norms)
            if (c2 >= c) sum += w;
        double v = e == 0 ? c : c * std::pow(sum, e);
        best = std::max(best, v);
    }
    return best;
}

double l2_operator_norm(const NumericFourier& sigma) {
    double best = 0;
    for (const auto& [tw, M] : sigma.blocks()) best = std::max(best, op_norm(M));
    return best;
}

double l2_operator_norm_measured(const MultiplierSymbol& sigma, const QPoint& q) {
    double best = 0;
    for (const auto& [tw, M] : sigma.blocks()) {
        Spin l(tw);
        const int n = l.dim();
        for (int i = 0; i < n; ++i) {
            std::vector<RadicalElement> t, At;
            for (int j = 0; j < n; ++j) {
                t.push_back(t_coeff(l, i, j));
                At.push_back(apply_symbol(sigma, t.back()));
            }
            Eigen::MatrixXd G(n, n), B(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    G(a, b) = qarith::evaluate(cqalg::haar(cqalg::star(t[static_cast<size_t>(a)]) * t[static_cast<size_t>(b)]), q);
                    B(a, b) = qarith::evaluate(cqalg::haar(cqalg::star(At[static_cast<size_t>(a)]) * At[static_cast<size_t>(b)]), q);
                }
            Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(B, G);
            best = std::max(best, std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff())));
        }
    }
    return best;
}

RadicalElement quantize(const MultiplierSymbol& sigma, const AlgebraElement& f) {
    ExactFourier F = fourier::fourier_transform(f);
    RadicalElement out;
    for (const auto& [tw, M] : F.blocks()) {
        Spin l(tw);
        const RMat& S = block_or_throw(sigma, l);
        QScalar d = quantum_dim(l);
        // Tr(fhat t sigma) = sum_{ijk} fhat_ij t_jk sigma_ki
        for (int j = 0; j < l.dim(); ++j)
            for (int k = 0; k < l.dim(); ++k) {
                QRadical w;
                for (int i = 0; i < l.dim(); ++i)
                    if (!M(i, j).is_zero() && !S(k, i).is_zero()) w += S(k, i) * M(i, j);
                if (w.is_zero()) continue;
                out += t_coeff(l, j, k).scaled(w * d);
            }
    }
    return out;
}

Seminorms schwartz_seminorms(const NumericFourier& sigma, double alpha, double gamma, const spectral::DiracSpec& spec,
                             const QPoint& q) {
    if (alpha < 0 || gamma < 0) throw std::invalid_argument("seminorm orders must be nonnegative");
    Seminorms s;
    double acc = 0;
    for (const auto& [tw, M] : sigma.blocks()) {
        Spin l(tw);
        double lam = spec.abs_lambda(l, q);
        acc += qarith::evaluate(quantum_dim(l), q) * l.dim() * std::pow(lam, 2 * alpha) *
               fourier::hs_norm_sq(M, l, q.value());
        s.q_gamma = std::max(s.q_gamma, std::pow(lam, gamma) * op_norm(M));
    }
    s.p_alpha = std::sqrt(std::max(0.0, acc));
    return s;
}

namespace {

SeminormBound seminorm_bound(const NumericFourier& sigma, double alpha, double beta, const spectral::DiracSpec& spec,
                     const QPoint& q, bool corrected) {
    SeminormBound b;
    b.lhs = schwartz_seminorms(sigma, alpha, 0, spec, q).p_alpha;
    double c = 0, sup = 0;
    double gamma = corrected ? alpha + beta / 2 : alpha - beta / 2;
    for (const auto& [tw, M] : sigma.blocks()) {
        Spin l(tw);
        double d = qarith::evaluate(quantum_dim(l), q);
        double lam = spec.abs_lambda(l, q);
        c += (corrected ? d * d : d) * l.dim() / std::pow(lam, beta);
        sup = std::max(sup, std::pow(lam, gamma) * op_norm(M));
    }
    b.constant = std::sqrt(c);
    b.rhs = b.constant * sup;
    b.holds = b.lhs <= b.rhs * (1 + 1e-12);
    return b;
}

}  // namespace

SeminormBound seminorm_bound_stated(const NumericFourier& sigma, double alpha, double beta, const spectral::DiracSpec& spec,
                             const QPoint& q) {
    return seminorm_bound(sigma, alpha, beta, spec, q, false);
}

SeminormBound seminorm_bound_hs(const NumericFourier& sigma, double alpha, double beta, const spectral::DiracSpec& spec,
                               const QPoint& q) {
    return seminorm_bound(sigma, alpha, beta, spec, q, true);
}

}  // namespace suq2::multiplier
