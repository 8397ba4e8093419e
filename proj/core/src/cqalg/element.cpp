#include "suq2/cqalg/element.hpp"
#include "suq2/cqalg/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace suq2::cqalg {

AlgebraElement lower(const RadicalElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) out.add_term(m, c.rational_or_throw());
    return out;
}

bool is_rational(const RadicalElement& x) {
    for (const auto& [m, c] : x.terms())
        if (!c.is_rational()) return false;
    return true;
}

Spin Spin::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            int tw = static_cast<int>(std::lround(2 * v));
            if (std::abs(2 * v - tw) > 1e-12) throw std::invalid_argument(s);
            return Spin(tw);
        }
        if (s.substr(slash + 1) != "2") throw std::invalid_argument(s);
        return Spin(std::stoi(s.substr(0, slash)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad spin label: " + s);
    }
}

}  // namespace suq2::cqalg
