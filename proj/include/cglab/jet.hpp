#pragma once
// Degree-2 truncated jet in d variables: value, gradient and Hessian of a
// scalar expression, propagated exactly (to rounding) through arithmetic.
// Storage is one contiguous buffer [value | grad(d) | hess(d*d) row-major]
// so most operations are single whole-buffer kernel calls.
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace cglab {

class Jet2 {
public:
    Jet2() : dim_(0), buf_(1, 0.0) {}
    explicit Jet2(int dim, double value = 0.0)
        : dim_(dim), buf_(buf_size(dim), 0.0) {
        buf_[0] = value;
    }

    static Jet2 variable(int dim, int index, double value) {
        Jet2 j(dim, value);
        j.buf_[1 + index] = 1.0;
        return j;
    }
    static Jet2 constant(int dim, double value) { return Jet2(dim, value); }

    int dim() const { return dim_; }
    double value() const { return buf_[0]; }
    double d(int i) const { return buf_[1 + i]; }
    double d2(int i, int j) const { return buf_[1 + dim_ + static_cast<std::size_t>(i) * dim_ + j]; }

    std::span<const double> grad() const { return {buf_.data() + 1, static_cast<std::size_t>(dim_)}; }
    std::span<const double> hess() const {
        return {buf_.data() + 1 + dim_, static_cast<std::size_t>(dim_) * dim_};
    }

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(double s);
    Jet2& operator+=(double s) { buf_[0] += s; return *this; }
    Jet2& operator-=(double s) { buf_[0] -= s; return *this; }

    friend Jet2 operator+(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator/(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a);

    friend Jet2 operator+(const Jet2& a, double s) { Jet2 r = a; r.buf_[0] += s; return r; }
    friend Jet2 operator+(double s, const Jet2& a) { return a + s; }
    friend Jet2 operator-(const Jet2& a, double s) { Jet2 r = a; r.buf_[0] -= s; return r; }
    friend Jet2 operator-(double s, const Jet2& a);
    friend Jet2 operator*(const Jet2& a, double s);
    friend Jet2 operator*(double s, const Jet2& a) { return a * s; }
    friend Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
    friend Jet2 operator/(double s, const Jet2& a) { return recip(a) * s; }

    friend Jet2 recip(const Jet2& a);
    friend Jet2 pow(const Jet2& a, double e);
    friend Jet2 sqrt(const Jet2& a);

private:
    static std::size_t buf_size(int d) {
        return 1 + static_cast<std::size_t>(d) + static_cast<std::size_t>(d) * d;
    }
    // f(a) with f(a0)=f0, f'(a0)=c1, f''(a0)=c2
    static Jet2 chain(const Jet2& a, double f0, double c1, double c2);

    int dim_;
    std::vector<double> buf_;
};

// Anchors for generic field code (T = double or Jet2): a zero of the same
// jet dimension as the argument.
inline double zero_like(double) { return 0.0; }
inline Jet2 zero_like(const Jet2& j) { return Jet2(j.dim()); }

} // namespace cglab
