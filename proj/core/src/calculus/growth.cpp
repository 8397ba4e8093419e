#include "suq2/calculus/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace suq2::calculus {

double weighted_hs_sq(const DMat& m, double q, int twice) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0;
        for (int j = 0; j < m.cols(); ++j) row += m(i, j) * m(i, j);
        s += std::pow(q, 2.0 * i - twice) * row;
    }
    return s;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::vector<GrowthFamily> families() {
    using R = GrowthRule;
    return {
        {"X+", "generator", R::Equal, 2, true},
        {"X-", "generator", R::Equal, 2, true},
        {"q^{H/2}", "generator", R::Equal, 2, true},
        {"x+", "3D partial", R::Equal, 2, true},
        {"x-", "3D partial", R::Equal, 2, true},
        {"x0", "3D partial", R::Equal, 0, false},
        {"y+-", "3D commutation", R::Equal, 1, true},
        {"y0", "3D commutation", R::Equal, 1, true},
        {"sigma^a", "4D partial", R::AtMost, 2.5, true},
        {"sigma^b", "4D partial", R::Equal, 2, true},
        {"sigma^c", "4D partial", R::Equal, 2, true},
        {"sigma^d", "4D partial", R::Equal, 1, true},
        {"sigma_11^11", "4D commutation", R::Equal, 3, true},
        {"sigma_12^11", "4D commutation", R::Equal, 3, true},
        {"sigma_21^11", "4D commutation", R::Equal, 3, true},
        {"sigma_22^11", "4D commutation", R::Equal, 3, true},
        {"sigma_12^12", "4D commutation", R::Equal, 1, true},
        {"sigma_21^21", "4D commutation", R::Equal, 1, true},
        {"sigma_22^12", "4D commutation", R::Equal, 2, true},
        {"sigma_22^21", "4D commutation", R::Equal, 2, true},
        {"sigma_22^22", "4D commutation", R::Equal, 1, true},
    };
}

std::map<std::string, DMat> symbols_at(Spin l, double q) {
    std::map<std::string, DMat> out;
    auto g = generator_matrices(l, q);
    out["X+"] = g.Xp;
    out["X-"] = g.Xm;
    out["q^{H/2}"] = g.K_;
    auto three = partial_symbols_weight(CalculusKind::ThreeD, l, q);
    out["x+"] = three.at('+');
    out["x-"] = three.at('-');
    out["x0"] = three.at('0');
    auto c3 = commutation_symbols_weight(CalculusKind::ThreeD, l, q);
    out["y+-"] = c3.at({'+', '+'});
    out["y0"] = c3.at({'0', '0'});
    for (const auto& [k, v] : partial_symbols_weight(CalculusKind::FourD, l, q)) out[std::string("sigma^") + k] = v;
    for (const auto& [k, v] : commutation_symbols_weight(CalculusKind::FourD, l, q))
        out["sigma_" + commutation_name(k)] = v;
    return out;
}

}  // namespace

std::vector<GrowthFit> growth_report(double q, int twice_max, double tolerance) {
    auto fams = families();
    std::vector<GrowthFit> fits;
    for (const auto& f : fams) fits.push_back({f, {}, 0, 0, 0, false});
    for (int tw = 1; tw <= twice_max; ++tw) {
        Spin l(tw);
        double log_qint = std::log(qarith::q_int(2 * (tw + 1)).eval(q));
        auto syms = symbols_at(l, q);
        for (auto& fit : fits) {
            const DMat& m = syms.at(fit.family.name);
            fit.points.push_back({tw, log_qint, weighted_hs_sq(m, q, tw), weighted_hs_sq(reverse_weights(m), q, tw)});
        }
    }
    for (auto& fit : fits) {
        std::vector<double> x, y, yc;
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (const auto& p : fit.points) {
            if (p.hs_sq <= 0 || p.hs_sq_consistent <= 0) continue;
            x.push_back(p.log_qint);
            y.push_back(std::log(p.hs_sq));
            yc.push_back(std::log(p.hs_sq_consistent));
            double r = p.hs_sq / std::exp(fit.family.exponent * p.log_qint);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        fit.slope = least_squares_slope(x, y);
        fit.slope_consistent = least_squares_slope(x, yc);
        fit.ratio_spread = hi / lo;
        if (fit.family.rule == GrowthRule::Equal)
            fit.pass = std::abs(fit.slope - fit.family.exponent) <= tolerance;
        else
            fit.pass = fit.slope <= fit.family.exponent + tolerance;
    }
    return fits;
}

AdmissibilityReport admissibility_check(CalculusKind kind, const spectral::DiracSpec& spec, int twice_max,
                                        const qarith::QPoint& q, double tolerance) {
    if (q.is_classical()) throw std::invalid_argument("admissibility fits need q != 1");
    if (twice_max < 4) throw std::invalid_argument("admissibility fits need l_max >= 2");
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (int tw = 1; tw <= twice_max; ++tw) {
        Spin l(tw);
        double x = std::log(spec.abs_lambda(l, q));
        std::map<std::string, DMat> syms;
        if (kind == CalculusKind::ThreeD) {
            for (const auto& [k, v] : partial_symbols_weight(kind, l, q.value())) syms[std::string("x") + k] = v;
            for (const auto& [k, v] : commutation_symbols_weight(kind, l, q.value()))
                syms[std::string("y") + k.first] = v;
        } else {
            for (const auto& [k, v] : partial_symbols_weight(kind, l, q.value())) syms[std::string("sigma^") + k] = v;
            for (const auto& [k, v] : commutation_symbols_weight(kind, l, q.value()))
                syms["sigma_" + commutation_name(k)] = v;
        }
        for (const auto& [name, m] : syms) {
            double h = weighted_hs_sq(m, q.value(), tw);
            if (h > 0) series[name].emplace_back(x, std::log(h));
        }
    }
    AdmissibilityReport rep;
    rep.admissible = true;
    for (const auto& [name, pts] : series) {
        auto fit = [&](size_t lo, size_t hi) {
            std::vector<double> x, y;
            for (size_t i = lo; i < hi; ++i) {
                x.push_back(pts[i].first);
                y.push_back(pts[i].second);
            }
            return least_squares_slope(x, y);
        };
        size_t n = pts.size(), mid = n / 2;
        AdmissibilityRow row{name, fit(0, n), fit(0, mid + 1), fit(mid, n), false};
        row.admissible = std::abs(row.gamma_upper - row.gamma_lower) <= tolerance;
        rep.gamma_max = std::max(rep.gamma_max, std::max(row.gamma_lower, row.gamma_upper));
        rep.admissible = rep.admissible && row.admissible;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace suq2::calculus
