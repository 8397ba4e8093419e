#include "suq2/fourier/inequality.hpp"

#include <cmath>
#include <stdexcept>

namespace suq2::fourier {

InequalityKind parse_inequality_kind(const std::string& s) {
    if (s == "hy") return InequalityKind::HausdorffYoung;
    if (s == "paley") return InequalityKind::Paley;
    if (s == "hy-paley") return InequalityKind::HYPaley;
    if (s == "hl") return InequalityKind::HardyLittlewood;
    if (s == "cor58") return InequalityKind::Cor58;
    throw std::invalid_argument("unknown inequality kind: " + s);
}

std::string to_string(InequalityKind k) {
    switch (k) {
        case InequalityKind::HausdorffYoung: return "hy";
        case InequalityKind::Paley: return "paley";
        case InequalityKind::HYPaley: return "hy-paley";
        case InequalityKind::HardyLittlewood: return "hl";
        case InequalityKind::Cor58: return "cor58";
    }
    return "?";
}

InequalityHarness::InequalityHarness(QPoint q, QuadratureGrid grid) : q_(q) {
    if (q_.is_classical()) sampler_.emplace(grid);
}

double InequalityHarness::lp_norm(const AlgebraElement& f, double p) const {
    if (p == 2.0) return std::sqrt(std::max(0.0, qarith::evaluate(cqalg::haar(f * cqalg::star(f)), q_)));
    if (!sampler_) throw std::domain_error("L^p norms for p != 2 are available only at q = 1");
    return sampler_->lp_norm(sampler_->values(f), p);
}

namespace {

double weight_at(const std::map<int, double>& w, int tw, const char* what) {
    auto it = w.find(tw);
    if (it == w.end()) throw std::invalid_argument(std::string("missing ") + what + " for spin " + Spin(tw).str());
    return it->second;
}

}  // namespace

InequalityResult InequalityHarness::evaluate(InequalityKind kind, const AlgebraElement& f,
                                             const InequalityParams& prm) const {
    const double p = prm.p;
    if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("inequality harness needs 1 < p <= 2");
    const double pp = p / (p - 1);
    if (kind == InequalityKind::HYPaley && !(prm.b >= p && prm.b <= pp))
        throw std::invalid_argument("hy-paley needs p <= b <= p'");
    NumericFourier F = to_numeric(fourier_transform(f), q_);
    InequalityResult r;
    r.rhs = lp_norm(f, p);
    double acc = 0;
    for (const auto& [tw, M] : F.blocks()) {
        Spin l(tw);
        double n = l.dim();
        double dn = qarith::evaluate(cqalg::quantum_dim(l), q_) * n;
        double x = std::sqrt(std::max(0.0, hs_norm_sq(M, l, q_.value()))) / std::sqrt(n);
        if (x == 0) continue;
        switch (kind) {
            case InequalityKind::HausdorffYoung: acc += dn * std::pow(x, pp); break;
            case InequalityKind::Paley:
                acc += dn * std::pow(x, p) * std::pow(weight_at(prm.weights, tw, "phi"), 2 - p);
                break;
            case InequalityKind::HYPaley:
                acc += dn * std::pow(x * std::pow(weight_at(prm.weights, tw, "phi"), 1 / prm.b - 1 / pp), prm.b);
                break;
            case InequalityKind::HardyLittlewood:
                acc += dn * std::pow(weight_at(prm.weights, tw, "lambda"), prm.beta * (p - 2)) * std::pow(x, p);
                break;
            case InequalityKind::Cor58:
                acc += dn * std::pow(std::pow(weight_at(prm.weights, tw, "lambda"), prm.beta * (0.5 - 1 / p)) * x, p);
                break;
        }
    }
    switch (kind) {
        case InequalityKind::HausdorffYoung: r.lhs = std::pow(acc, 1 / pp); break;
        case InequalityKind::Paley: {
            r.lhs = std::pow(acc, 1 / p);
            r.rhs *= std::pow(paley_constant(prm.weights, q_), (2 - p) / p);
            break;
        }
        case InequalityKind::HYPaley: {
            r.lhs = std::pow(acc, 1 / prm.b);
            r.rhs *= std::pow(paley_constant(prm.weights, q_), 1 / prm.b - 1 / pp);
            break;
        }
        // the p-th power form on both sides, reported after taking p-th roots
        case InequalityKind::HardyLittlewood: r.lhs = std::pow(acc, 1 / p); break;
        case InequalityKind::Cor58: r.lhs = std::pow(acc, 1 / p); break;
    }
    r.ratio = r.rhs > 0 ? r.lhs / r.rhs : (r.lhs > 0 ? kInfinity : 0.0);
    return r;
}

}  // namespace suq2::fourier
