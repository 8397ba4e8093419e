#pragma once

#include "suq2/qarith/qpoint.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace suq2::qarith {

inline bool is_zero_value(double x) { return x == 0.0; }
inline bool is_zero_value(const QScalar& x) { return x.is_zero(); }
inline bool is_zero_value(const QRadical& x) { return x.is_zero(); }

// Dense row-major matrix over an exact or floating scalar type.
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), K()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Mat diagonal(const std::vector<K>& d) {
        Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& operator()(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const K& operator()(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    Mat& operator+=(const Mat& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Mat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& xik = x(i, k);
                if (is_zero_value(xik)) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const K& ykj = y(k, j);
                    if (is_zero_value(ykj)) continue;
                    r(i, j) += xik * ykj;
                }
            }
        return r;
    }

    template <class S>
    Mat scaled(const S& s) const {
        Mat r(*this);
        for (auto& v : r.a_)
            if (!is_zero_value(v)) v = v * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!is_zero_value(v)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !is_zero_value((*this)(i, j))) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    template <class F>
    auto map(F f) const {
        using R = decltype(f(std::declval<const K&>()));
        Mat<R> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<K> a_;
};

using QMat = Mat<QScalar>;
using RMat = Mat<QRadical>;
using DMat = Mat<double>;

inline DMat to_double(const QMat& m, const QPoint& p) {
    return m.map([&](const QScalar& x) { return evaluate(x, p); });
}
inline DMat to_double(const RMat& m, const QPoint& p) {
    return m.map([&](const QRadical& x) { return evaluate(x, p); });
}
inline RMat to_radical(const QMat& m) {
    return m.map([](const QScalar& x) { return QRadical(x); });
}

}  // namespace suq2::qarith
