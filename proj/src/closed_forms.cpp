#include "cglab/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace cglab {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

FiberWeights fiber_weights(const CGParams& params, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("fiber weights need t >= 0");
    const double p = params.p, q = params.q;
    FiberWeights fw{};
    fw.omega = 1.0 / (1.0 + t);
    fw.omega_q = 1.0 / (1.0 + q * t);
    fw.F = p * fw.omega * fw.omega_q * ((p + 2.0 * q - 2.0) * fw.omega - q);
    fw.G = (p * p * fw.omega * fw.omega - p * (p - 2.0) * fw.omega + q) * fw.omega_q;
    return fw;
}

double fiber_sectional(const CGParams& params, std::span<const double> a,
                       std::span<const double> alpha, std::span<const double> beta) {
    if (std::abs(dot(alpha, alpha) - 1.0) > 1e-9 || std::abs(dot(beta, beta) - 1.0) > 1e-9 ||
        std::abs(dot(alpha, beta)) > 1e-9)
        throw std::invalid_argument("fiber sectional curvature needs an orthonormal pair");
    const double t = dot(a, a);
    const FiberWeights fw = fiber_weights(params, t);
    const double s = dot(alpha, a) * dot(alpha, a) + dot(beta, a) * dot(beta, a);
    return std::pow(fw.omega, -params.p) * (fw.F * s + fw.G) / (1.0 + params.q * s);
}

double fiber_ricci(const CGParams& params, int r, std::span<const double> a,
                   std::span<const double> alpha, std::span<const double> beta) {
    const double t = dot(a, a);
    const FiberWeights fw = fiber_weights(params, t);
    const double diag = t * fw.omega_q * fw.F + (r - 2.0 + fw.omega_q) * fw.G;
    const double rad = (r - 1.0 - fw.omega_q) * fw.F + params.q * fw.omega_q * fw.G;
    return diag * dot(alpha, beta) + rad * dot(alpha, a) * dot(beta, a);
}

FiberScalarCubic fiber_scalar_cubic(const CGParams& params, int r) {
    const double p = params.p, q = params.q;
    FiberScalarCubic co{};
    co.e = q * q * (r - 2.0);
    co.b = q * ((2.0 - r) * p * p + 2.0 * (r - 3.0) * p + 2.0 * (r - 2.0) * q + r);
    co.c = (2.0 - r) * p * p + 2.0 * (r - 1.0) * p * q + (r - 2.0) * q * q +
           2.0 * (r - 2.0) * p + 2.0 * r * q;
    co.d = r * (2.0 * p + q);
    return co;
}

double fiber_scalar(const CGParams& params, int r, double t) {
    if (r < 1) throw std::invalid_argument("fiber scalar needs rank >= 1");
    if (!(t >= 0.0)) throw std::invalid_argument("fiber scalar needs t >= 0");
    const double p = params.p, q = params.q;
    const FiberScalarCubic co = fiber_scalar_cubic(params, r);
    const double den = (1.0 + q * t) * (1.0 + q * t) * (1.0 + t) * (1.0 + t);
    return (r - 1.0) * std::pow(1.0 + t, p) / den *
           (((co.e * t + co.b) * t + co.c) * t + co.d);
}

FiberScalarQuartic fiber_scalar_quartic(const CGParams& params, int r) {
    const double p = params.p, q = params.q;
    FiberScalarQuartic co{};
    co.a1 = (r - 2.0) * (p - 1.0) * q * q * q;
    co.b1 = -(r * p * p * p - 4.0 * r * p * p - 2.0 * p * p * p - 2.0 * r * p * q + 2.0 * r * p +
              10.0 * p * p + 3.0 * r * q + 4.0 * p * q + r - 10.0 * p - 6.0 * q + 2.0) *
            q * q;
    co.c1 = -2.0 * r * p * p * p * q + 2.0 * r * p * p * q * q + r * p * q * q * q +
            7.0 * r * p * p * q + 4.0 * p * p * p * q - 2.0 * r * p * q * q -
            2.0 * p * p * q * q - 3.0 * r * q * q * q - 2.0 * p * q * q * q - 5.0 * r * p * q -
            16.0 * p * p * q - 3.0 * r * q * q + 2.0 * p * q * q + 6.0 * q * q * q +
            12.0 * p * q - 6.0 * q * q;
    co.d1 = -r * p * p * p + 3.0 * r * p * p * q - r * q * q * q + 3.0 * r * p * p +
            2.0 * p * p * p - 6.0 * r * p * q - 3.0 * r * q * q + 2.0 * q * q * q -
            2.0 * r * p - 6.0 * p * p - 6.0 * p * q - 6.0 * q * q + 4.0 * p;
    co.e1 = (p * p - p * q - q * q - 2.0 * p) * (r + 2.0);
    return co;
}

double fiber_scalar_derivative(const CGParams& params, int r, double t) {
    if (r < 1) throw std::invalid_argument("fiber scalar derivative needs rank >= 1");
    if (!(t >= 0.0)) throw std::invalid_argument("fiber scalar derivative needs t >= 0");
    const double p = params.p, q = params.q;
    const FiberScalarQuartic co = fiber_scalar_quartic(params, r);
    const double oq = 1.0 + q * t, ot = 1.0 + t;
    const double den = oq * oq * oq * ot * ot * ot;
    return (r - 1.0) * std::pow(ot, p) / den *
           ((((co.a1 * t + co.b1) * t + co.c1) * t + co.d1) * t + co.e1);
}

double total_scalar_e(const CGParams& params, const EuclideanBundle& bundle,
                      const TotalSpacePoint& pt) {
    const double t = bundle.fiber_norm_sq(pt);
    const double sm = bundle.base_scalar(pt.x);
    const double f = fiber_scalar(params, bundle.r, t);
    const double xi = xi_form(bundle, pt.x, pt.mu, pt.mu);
    return sm + f - xi / (4.0 * std::pow(1.0 + t, params.p));
}

double varpi(double c, double k) { return 0.25 * c * (2.0 - c * k); }

double b_norm_squared(int n, double c, double k, double p, std::span<const double> z,
                      const SkewEndomorphism& f) {
    const double w = varpi(c, k);
    const double z2 = dot(z, z);
    const double f2 = f.norm_sq(k);
    const double om = 1.0 / (1.0 + z2 + f2);
    return 2.0 * w * w * std::pow(om, p) * ((n - 1.0) * z2 + 2.0 * (n - 2.0) * f2);
}

double atiyah_scalar_from_norms(int n, double c, double k, double z_sq, double f_sq) {
    if (!(k > 0.0)) throw std::invalid_argument("atiyah scalar needs k > 0");
    const int r = AtiyahParams::rank(n);
    const double w = varpi(c, k);
    const double alpha = 1.0 + z_sq + f_sq;
    return n * (n - 1.0) * c +
           (r - 1.0) / (alpha * alpha) * (6.0 + (r - 2.0) * (alpha * alpha + alpha + 1.0)) -
           2.0 * w * w / alpha * ((n - 1.0) * z_sq + 2.0 * (n - 2.0) * f_sq);
}

double atiyah_scalar(int n, double c, double k, std::span<const double> z,
                     const SkewEndomorphism& f) {
    return atiyah_scalar_from_norms(n, c, k, dot(z, z), f.norm_sq(k));
}

double PositivityConstants::K(double c) const {
    if (n == 2) return 2.0 * (c + 2.0 * std::sqrt(1.0 + c)) / (c * c);
    return 2.0 * (c * d + 2.0 * std::sqrt(d) * std::sqrt(b + a * c)) / (d * c * c);
}

PositivityConstants positivity_constants(int n) {
    if (n < 2) throw std::invalid_argument("positivity constants need n >= 2");
    PositivityConstants pc{};
    pc.n = n;
    const int r = AtiyahParams::rank(n);
    pc.a = static_cast<double>(n) * (n - 1);
    pc.b = (r - 1.0) * (r - 2.0);
    pc.d = 4.0 * (n - 2.0);
    pc.threshold = (n == 2) ? 2.0 * (1.0 - std::sqrt(2.0))
                            : 2.0 * (pc.a - std::sqrt(pc.a * pc.a + pc.b * pc.d)) / pc.d;
    return pc;
}

bool positivity_predicate(int n, double c, double k) {
    if (n < 2) throw std::invalid_argument("positivity predicate needs n >= 2");
    if (!(k > 0.0)) throw std::invalid_argument("positivity predicate needs k > 0");
    if (c == 0.0) return true;
    const PositivityConstants pc = positivity_constants(n);
    return c > pc.threshold && k <= pc.K(c);
}

bool positivity_from_profile(int n, double c, double k) {
    if (n < 2) throw std::invalid_argument("positivity profile needs n >= 2");
    if (!(k > 0.0)) throw std::invalid_argument("positivity profile needs k > 0");
    const double w = varpi(c, k);
    if (n == 2) return 2.0 * (c + 1.0 - w * w) >= 0.0;
    const PositivityConstants pc = positivity_constants(n);
    return pc.a * c + pc.b - pc.d * w * w >= 0.0;
}

} // namespace cglab
