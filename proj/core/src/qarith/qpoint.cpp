#include "suq2/qarith/qpoint.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace suq2::qarith {

QPoint::QPoint(const mpq_class& q0) : exact_(q0), value_(q0.get_d()) {
    if (sgn(q0) <= 0) throw std::invalid_argument("q0 must be positive");
}

QPoint::QPoint(double q0) : value_(q0) {
    if (!(q0 > 0.0) || !std::isfinite(q0)) throw std::invalid_argument("q0 must be positive");
}

QPoint QPoint::parse(const std::string& text) {
    if (text.find_first_of(".eE") == std::string::npos) {
        mpq_class v;
        if (v.set_str(text, 10) != 0) throw std::invalid_argument("cannot parse q: " + text);
        v.canonicalize();
        return QPoint(v);
    }
    size_t pos = 0;
    double d = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("cannot parse q: " + text);
    return QPoint(d);
}

std::string QPoint::str() const {
    if (exact_) return exact_->get_str();
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

double evaluate(const QScalar& x, const QPoint& p) {
    if (auto e = evaluate_exact(x, p)) return e->get_d();
    return x.eval(p.value());
}

double evaluate(const QRadical& x, const QPoint& p) {
    if (auto r = x.rational()) return evaluate(*r, p);
    return x.eval(p.value());
}

std::optional<mpq_class> evaluate_exact(const QScalar& x, const QPoint& p) {
    if (!p.exact()) return std::nullopt;
    return x.eval_q_exact(*p.exact());
}

std::vector<double> bq_asymptotic_ratio(int n_max, const QPoint& p) {
    if (p.is_classical()) throw std::domain_error("bq_asymptotic_ratio: q0 = 1 is degenerate");
    std::vector<double> out;
    double b = p.b_q();
    for (int n = 1; n <= n_max; ++n) out.push_back(evaluate(q_int(2 * n), p) / std::pow(b, n));
    return out;
}

}  // namespace suq2::qarith
