#pragma once

#include <stdexcept>
#include <string>

namespace suq2::cqalg {

// l = twice / 2. Matrix indices run 0..2l; index i carries weight i - l.
struct Spin {
    int twice = 0;

    constexpr Spin() = default;
    constexpr explicit Spin(int twice_l) : twice(twice_l) {
        if (twice_l < 0) throw std::invalid_argument("spin must be nonnegative");
    }
    constexpr int dim() const { return twice + 1; }
    // twice the weight of index i
    constexpr int weight2(int i) const { return 2 * i - twice; }
    double value() const { return twice / 2.0; }

    static Spin parse(const std::string& s);
    std::string str() const { return twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2); }

    friend constexpr bool operator==(Spin a, Spin b) { return a.twice == b.twice; }
    friend constexpr auto operator<=>(Spin a, Spin b) { return a.twice <=> b.twice; }
};

}  // namespace suq2::cqalg
