#include "suq2/fourier/classical.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace suq2::fourier {

ClassicalSampler::ClassicalSampler(QuadratureGrid grid) : grid_(grid) {
    if (grid.polar < 1 || grid.angular < 1) throw std::invalid_argument("quadrature grid must be positive");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> tab(
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(grid.polar)), &gsl_integration_glfixed_table_free);
    const double two_pi = 2 * std::numbers::pi;
    const double wa = 1.0 / (grid.angular * grid.angular);
    for (int ip = 0; ip < grid.polar; ++ip) {
        double x, w;
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(ip), &x, &w, tab.get());
        // x = cos(theta); |alpha| = cos(theta/2), |beta| = sin(theta/2)
        double ca = std::sqrt(std::max(0.0, (1 + x) / 2)), sb = std::sqrt(std::max(0.0, (1 - x) / 2));
        for (int i1 = 0; i1 < grid.angular; ++i1)
            for (int i2 = 0; i2 < grid.angular; ++i2) {
                double p1 = two_pi * i1 / grid.angular, p2 = two_pi * i2 / grid.angular;
                alpha_.push_back(std::polar(ca, p1));
                beta_.push_back(std::polar(sb, p2));
                weights_.push_back(0.5 * w * wa);
            }
    }
}

std::vector<std::complex<double>> ClassicalSampler::values(const AlgebraElement& f) const {
    std::vector<std::pair<cqalg::Monomial, double>> terms;
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.eval(1.0));
    std::vector<std::complex<double>> out(weights_.size());
    for (size_t k = 0; k < weights_.size(); ++k) {
        std::complex<double> a = alpha_[k], b = beta_[k], c = -std::conj(beta_[k]), d = std::conj(alpha_[k]);
        std::complex<double> s = 0;
        for (const auto& [m, coef] : terms) {
            std::complex<double> v = coef;
            std::complex<double> head = m.dhead ? d : a;
            for (int e = 0; e < m.i; ++e) v *= head;
            for (int e = 0; e < m.j; ++e) v *= b;
            for (int e = 0; e < m.k; ++e) v *= c;
            s += v;
        }
        out[k] = s;
    }
    return out;
}

double ClassicalSampler::integrate(const std::vector<double>& g) const {
    double s = 0;
    for (size_t k = 0; k < g.size(); ++k) s += weights_[k] * g[k];
    return s;
}

double ClassicalSampler::lp_norm(const std::vector<std::complex<double>>& vals, double p) const {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0;
        for (const auto& v : vals) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0;
    for (size_t k = 0; k < vals.size(); ++k) s += weights_[k] * std::pow(std::abs(vals[k]), p);
    return std::pow(s, 1.0 / p);
}

double lp_norm_classical(const AlgebraElement& f, double p, const QPoint& q, QuadratureGrid grid) {
    if (!q.is_classical()) throw std::domain_error("classical L^p norms need q = 1");
    ClassicalSampler s(grid);
    return s.lp_norm(s.values(f), p);
}

}  // namespace suq2::fourier
