#pragma once

#include "suq2/qarith/qradical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suq2::qarith {

// Numeric value of the deformation parameter.
class QPoint {
public:
    explicit QPoint(const mpq_class& q0);
    explicit QPoint(double q0);
    // "7/10", "1", "0.7"
    static QPoint parse(const std::string& text);

    double value() const { return value_; }
    const std::optional<mpq_class>& exact() const { return exact_; }
    bool is_classical() const { return value_ == 1.0; }
    double b_q() const { return value_ >= 1.0 ? value_ : 1.0 / value_; }
    std::string str() const;

private:
    std::optional<mpq_class> exact_;
    double value_;
};

double evaluate(const QScalar& x, const QPoint& p);
double evaluate(const QRadical& x, const QPoint& p);
std::optional<mpq_class> evaluate_exact(const QScalar& x, const QPoint& p);

// [n]_q / b_q^n for n = 1..n_max
std::vector<double> bq_asymptotic_ratio(int n_max, const QPoint& p);

}  // namespace suq2::qarith
