#pragma once
// Small dense row-major containers used for metric/connection data.  They are
// templated on the scalar so the same field code runs on plain doubles and on
// second-order jets.
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cglab {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, const T& fill = T{})
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> v_;
};

template <class T>
class Ten3 {
public:
    Ten3() = default;
    Ten3(int d0, int d1, int d2, const T& fill = T{})
        : d0_(d0), d1_(d1), d2_(d2),
          v_(static_cast<std::size_t>(d0) * d1 * d2, fill) {}

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    T& operator()(int i, int j, int k) {
        return v_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
    }
    const T& operator()(int i, int j, int k) const {
        return v_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
    }
    std::size_t size() const { return v_.size(); }
    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }

private:
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<T> v_;
};

template <class T>
class Ten4 {
public:
    Ten4() = default;
    Ten4(int d0, int d1, int d2, int d3, const T& fill = T{})
        : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
          v_(static_cast<std::size_t>(d0) * d1 * d2 * d3, fill) {}

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    int dim3() const { return d3_; }
    T& operator()(int i, int j, int k, int l) {
        return v_[((static_cast<std::size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l];
    }
    const T& operator()(int i, int j, int k, int l) const {
        return v_[((static_cast<std::size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l];
    }
    std::size_t size() const { return v_.size(); }
    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }

private:
    int d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<T> v_;
};

using MatD = Mat<double>;
using Ten3D = Ten3<double>;
using Ten4D = Ten4<double>;

inline double max_abs(const double* p, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(p[i]));
    return m;
}
template <class C>
double max_abs(const C& c) { return max_abs(c.data(), c.size()); }

} // namespace cglab
