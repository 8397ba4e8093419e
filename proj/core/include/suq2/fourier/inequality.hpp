#pragma once

#include "suq2/fourier/classical.hpp"

#include <optional>
#include <string>

namespace suq2::fourier {

enum class InequalityKind { HausdorffYoung, Paley, HYPaley, HardyLittlewood, Cor58 };

InequalityKind parse_inequality_kind(const std::string& s);
std::string to_string(InequalityKind k);

struct InequalityParams {
    double p = 2.0;
    double b = 2.0;
    double beta = 3.0;
    // phi for paley / hy-paley, |lambda_l| for hl / cor58; keyed by twice_l
    std::map<int, double> weights;
};

struct InequalityResult {
    double lhs = 0;
    double rhs = 0;
    double ratio = 0;
};

// The Fourier side is computed exactly then evaluated; the L^p side comes from
// the Haar state when p = 2 and from quadrature otherwise (q = 1 only).
class InequalityHarness {
public:
    InequalityHarness(QPoint q, QuadratureGrid grid = {});
    InequalityResult evaluate(InequalityKind kind, const AlgebraElement& f, const InequalityParams& params) const;
    double lp_norm(const AlgebraElement& f, double p) const;

private:
    QPoint q_;
    std::optional<ClassicalSampler> sampler_;
};

}  // namespace suq2::fourier
