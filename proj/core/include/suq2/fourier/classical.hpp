#pragma once

#include "suq2/fourier/fourier.hpp"

#include <complex>
#include <vector>

namespace suq2::fourier {

// Product rule on SU(2) in Euler angles: Gauss-Legendre in cos(theta),
// trapezoid in the two periodic angles.
struct QuadratureGrid {
    int polar = 64;
    int angular = 64;
};

// Values of a commutative polynomial at the grid points, with weights summing to 1.
class ClassicalSampler {
public:
    explicit ClassicalSampler(QuadratureGrid grid = {});
    const QuadratureGrid& grid() const { return grid_; }
    size_t size() const { return weights_.size(); }
    std::vector<std::complex<double>> values(const AlgebraElement& f) const;
    double integrate(const std::vector<double>& g) const;
    double lp_norm(const std::vector<std::complex<double>>& vals, double p) const;

private:
    QuadratureGrid grid_;
    std::vector<double> weights_;
    // a = alpha, b = beta, c = -conj(beta), d = conj(alpha)
    std::vector<std::complex<double>> alpha_, beta_;
};

// ||f||_{L^p(SU(2))} at q = 1
double lp_norm_classical(const AlgebraElement& f, double p, const QPoint& q, QuadratureGrid grid = {});

}  // namespace suq2::fourier
