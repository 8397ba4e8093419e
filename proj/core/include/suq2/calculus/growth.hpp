#pragma once

#include "suq2/calculus/symbols.hpp"
#include "suq2/spectral/dirac.hpp"

#include <string>
#include <vector>

namespace suq2::calculus {

enum class GrowthRule { Equal, AtMost };

struct GrowthFamily {
    std::string name;
    std::string source;
    GrowthRule rule = GrowthRule::Equal;
    double exponent = 0;
    bool in_criterion = true;
};

struct GrowthPoint {
    int twice = 0;
    double log_qint = 0;
    // sum_m q^{2m} sum_n |sigma_mn|^2 on the weight-labelled matrix
    double hs_sq = 0;
    // the same weight applied to the t^l index of the operator symbol
    double hs_sq_consistent = 0;
};

struct GrowthFit {
    GrowthFamily family;
    std::vector<GrowthPoint> points;
    double slope = 0;
    double slope_consistent = 0;
    // max/min of hs_sq / [2l+1]^exponent over the scan
    double ratio_spread = 0;
    bool pass = false;
};

// hs norm with row weight q^{2m}, rows indexed by weight m = -l..l
double weighted_hs_sq(const DMat& m, double q, int twice);
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

std::vector<GrowthFit> growth_report(double q, int twice_max, double tolerance = 0.3);

// Admissibility against |lambda_l| of a Dirac spec: per symbol of the calculus, the slope gamma of
// log ||sigma||_HS^2 against log |lambda_l|, fitted separately on the lower and upper half of the scan.
// A symbol is admissible when both halves agree within the tolerance (power-law growth).
struct AdmissibilityRow {
    std::string symbol;
    double gamma = 0;
    double gamma_lower = 0;
    double gamma_upper = 0;
    bool admissible = false;
};
struct AdmissibilityReport {
    std::vector<AdmissibilityRow> rows;
    double gamma_max = 0;
    bool admissible = false;
};
AdmissibilityReport admissibility_check(CalculusKind kind, const spectral::DiracSpec& spec, int twice_max,
                                        const qarith::QPoint& q, double tolerance = 0.3);

}  // namespace suq2::calculus
