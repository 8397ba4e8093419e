#pragma once

#include "suq2/cqalg/peter_weyl.hpp"

#include <limits>
#include <map>

namespace suq2::fourier {

using cqalg::AlgebraElement;
using cqalg::RadicalElement;
using cqalg::Spin;
using qarith::DMat;
using qarith::Mat;
using qarith::QPoint;
using qarith::QRadical;
using qarith::QScalar;
using qarith::RMat;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// n_l, d_l and Q^l for one spin
struct DualWeights {
    Spin l;
    int n;
    QScalar d;
    std::vector<QScalar> Q;

    static DualWeights of(Spin l);
    // Tr Q = Tr Q^{-1} = d
    bool traces_match() const;
};

// spin (as twice_l) -> (2l+1) x (2l+1) block
template <class K>
class FourierArray {
public:
    using Blocks = std::map<int, Mat<K>>;

    bool has(Spin l) const { return blocks_.count(l.twice) > 0; }
    const Mat<K>& at(Spin l) const { return blocks_.at(l.twice); }
    Mat<K>& at(Spin l) {
        auto it = blocks_.find(l.twice);
        if (it == blocks_.end()) it = blocks_.emplace(l.twice, Mat<K>(l.dim(), l.dim())).first;
        return it->second;
    }
    void set(Spin l, Mat<K> m) {
        if (m.rows() != l.dim() || m.cols() != l.dim()) throw std::invalid_argument("block size does not match spin " + l.str());
        blocks_[l.twice] = std::move(m);
    }
    const Blocks& blocks() const { return blocks_; }
    int max_twice() const { return blocks_.empty() ? -1 : blocks_.rbegin()->first; }
    // drop all-zero blocks
    void prune() {
        for (auto it = blocks_.begin(); it != blocks_.end();)
            it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
    }
    friend bool operator==(const FourierArray& a, const FourierArray& b) {
        FourierArray x(a), y(b);
        x.prune();
        y.prune();
        if (x.blocks_.size() != y.blocks_.size()) return false;
        for (const auto& [k, m] : x.blocks_) {
            auto it = y.blocks_.find(k);
            if (it == y.blocks_.end() || !(it->second == m)) return false;
        }
        return true;
    }

private:
    Blocks blocks_;
};

using ExactFourier = FourierArray<QRadical>;
using NumericFourier = FourierArray<double>;

NumericFourier to_numeric(const ExactFourier& F, const QPoint& q);

// fhat(l)_ij = h(f t^l_ji^*); every spin up to deg(f)/2 gets a block
ExactFourier fourier_transform(const AlgebraElement& f);
ExactFourier fourier_transform(const RadicalElement& f);
// f = sum_l d_l sum_ij q_j^{-1} t^l_ij fhat(l)_ji
RadicalElement inverse_fourier(const ExactFourier& F);
// same, required to land in rational coefficients
AlgebraElement inverse_fourier_rational(const ExactFourier& F);

// Rational coordinates in the unnormalized basis: f = sum_l sum_ij c^l_ij u^l_ij,
// c_ij = d_l (N_i / N_j) q_j^{-1} h(f u_ij^*)
using UCoordinates = std::map<int, qarith::QMat>;
UCoordinates u_coordinates(const AlgebraElement& f);
AlgebraElement from_u_coordinates(const UCoordinates& c);

// ||M||_HS^2 = Tr((Q^l)^{-1} M M^*) = sum_m q^{2m} sum_n |M_mn|^2
QRadical hs_norm_sq(const RMat& M, Spin l);
QScalar hs_norm_sq(const qarith::QMat& M, Spin l);
double hs_norm_sq(const DMat& M, Spin l, double q);

// (sum d_l n_l (||F(l)||_HS / sqrt n_l)^p)^{1/p}; p = kInfinity gives the sup form
double dual_lp_norm(const NumericFourier& F, double p, const QPoint& q);
double dual_lp_norm(const ExactFourier& F, double p, const QPoint& q);
// sum_l d_l ||F(l)||_HS^2, exact
QRadical plancherel_sum(const ExactFourier& F);

// M_phi = sup_t t sum_{phi(l) >= t} d_l n_l; phi keyed by twice_l
double paley_constant(const std::map<int, double>& phi, const QPoint& q);
double paley_constant_bruteforce(const std::map<int, double>& phi, const QPoint& q);
// exact variant, q must be rational
mpq_class paley_constant(const std::map<int, mpq_class>& phi, const QPoint& q);
mpq_class paley_constant_bruteforce(const std::map<int, mpq_class>& phi, const QPoint& q);

}  // namespace suq2::fourier
