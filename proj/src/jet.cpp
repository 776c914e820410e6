#include "cglab/jet.hpp"

#include <cmath>

#include "cglab/kernels.hpp"

namespace cglab {

namespace k = cglab::kernels;

Jet2& Jet2::operator+=(const Jet2& o) {
    assert(dim_ == o.dim_);
    k::axpy(1.0, o.buf_.data(), buf_.data(), buf_.size());
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    assert(dim_ == o.dim_);
    k::axpy(-1.0, o.buf_.data(), buf_.data(), buf_.size());
    return *this;
}

Jet2& Jet2::operator*=(double s) {
    k::scale(s, buf_.data(), buf_.data(), buf_.size());
    return *this;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    assert(a.dim_ == b.dim_);
    Jet2 r(a.dim_);
    k::axpby(1.0, a.buf_.data(), 1.0, b.buf_.data(), r.buf_.data(), r.buf_.size());
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    assert(a.dim_ == b.dim_);
    Jet2 r(a.dim_);
    k::axpby(1.0, a.buf_.data(), -1.0, b.buf_.data(), r.buf_.data(), r.buf_.size());
    return r;
}

Jet2 operator-(const Jet2& a) {
    Jet2 r(a.dim_);
    k::scale(-1.0, a.buf_.data(), r.buf_.data(), r.buf_.size());
    return r;
}

Jet2 operator-(double s, const Jet2& a) {
    Jet2 r = -a;
    r.buf_[0] += s;
    return r;
}

Jet2 operator*(const Jet2& a, double s) {
    Jet2 r(a.dim_);
    k::scale(s, a.buf_.data(), r.buf_.data(), r.buf_.size());
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    assert(a.dim_ == b.dim_);
    const int d = a.dim_;
    Jet2 r(d);
    // value+grad+hess in one pass: r = a0*b + b0*a, then the value is fixed
    // up and the grad outer product added to the Hessian block.
    k::axpby(a.buf_[0], b.buf_.data(), b.buf_[0], a.buf_.data(), r.buf_.data(), r.buf_.size());
    r.buf_[0] = a.buf_[0] * b.buf_[0];
    if (d > 0)
        k::syr2(1.0, a.buf_.data() + 1, b.buf_.data() + 1, r.buf_.data() + 1 + d,
                static_cast<std::size_t>(d));
    return r;
}

Jet2 Jet2::chain(const Jet2& a, double f0, double c1, double c2) {
    const int d = a.dim_;
    Jet2 r(d);
    k::scale(c1, a.buf_.data(), r.buf_.data(), r.buf_.size());
    r.buf_[0] = f0;
    if (d > 0)
        k::syr2(0.5 * c2, a.buf_.data() + 1, a.buf_.data() + 1, r.buf_.data() + 1 + d,
                static_cast<std::size_t>(d));
    return r;
}

Jet2 recip(const Jet2& a) {
    const double r = 1.0 / a.buf_[0];
    return Jet2::chain(a, r, -r * r, 2.0 * r * r * r);
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

Jet2 pow(const Jet2& a, double e) {
    const double v = a.buf_[0];
    const double f0 = std::pow(v, e);
    const double c1 = e * std::pow(v, e - 1.0);
    const double c2 = e * (e - 1.0) * std::pow(v, e - 2.0);
    return Jet2::chain(a, f0, c1, c2);
}

Jet2 sqrt(const Jet2& a) {
    const double s = std::sqrt(a.buf_[0]);
    return Jet2::chain(a, s, 0.5 / s, -0.25 / (s * s * s));
}

} // namespace cglab
