#pragma once
// Closed-form fiber curvatures of h_{p,q}, the scalar-curvature
// decomposition of the total space, the space-form principal-curvature
// scalars, and the positivity constants of the (c,k) region.
#include <span>

#include "cglab/bundle.hpp"
#include "cglab/space_form.hpp"

namespace cglab {

// omega = 1/(1+t), omega_q = 1/(1+qt),
// F = p w wq ((p+2q-2)w - q),  G = (p^2 w^2 - p(p-2) w + q) wq
struct FiberWeights {
    double omega, omega_q, F, G;
};
FiberWeights fiber_weights(const CGParams& params, double t);

// Sectional curvature of the fiber at a on the plane of an orthonormal pair
// (alpha, beta); vectors are fiber-frame coordinates.
double fiber_sectional(const CGParams& params, std::span<const double> a,
                       std::span<const double> alpha, std::span<const double> beta);

double fiber_ricci(const CGParams& params, int r, std::span<const double> a,
                   std::span<const double> alpha, std::span<const double> beta);

// s^v(a) = f(|a|^2) with f(t) = (r-1)(1+t)^p / ((1+qt)^2 (1+t)^2) *
// (e t^3 + b t^2 + c t + d)
struct FiberScalarCubic {
    double e, b, c, d;
};
FiberScalarCubic fiber_scalar_cubic(const CGParams& params, int r);
double fiber_scalar(const CGParams& params, int r, double t);

// f'(t) = (r-1)(1+t)^p / ((1+qt)^3 (1+t)^3) *
// (a1 t^4 + b1 t^3 + c1 t^2 + d1 t + e1)
struct FiberScalarQuartic {
    double a1, b1, c1, d1, e1;
};
FiberScalarQuartic fiber_scalar_quartic(const CGParams& params, int r);
double fiber_scalar_derivative(const CGParams& params, int r, double t);

// s^E(x,a) = s^M(x) + f(|a|^2) - xi(a,a)/(4 (1+|a|^2)^p)
double total_scalar_e(const CGParams& params, const EuclideanBundle& bundle,
                      const TotalSpacePoint& pt);

// varpi = c(2-ck)/4
double varpi(double c, double k);

// |B|^2(Z+F) = 2 varpi^2 omega^p ((n-1)|Z|^2 + 2(n-2)|F|^2), |F|^2 = -k tr F^2
double b_norm_squared(int n, double c, double k, double p, std::span<const double> z,
                      const SkewEndomorphism& f);

// Scalar curvature of h_{1,1} on AO(M,k) over a space form, as a function of
// the fiber norms |Z|^2 and |F|^2.
double atiyah_scalar_from_norms(int n, double c, double k, double z_sq, double f_sq);
double atiyah_scalar(int n, double c, double k, std::span<const double> z,
                     const SkewEndomorphism& f);

struct PositivityConstants {
    int n;
    double a, b, d;    // a = n(n-1), b = (r-1)(r-2), d = 4(n-2)
    double threshold;  // C_n for n >= 3; 2(1-sqrt(2)) plays its role for n = 2
    // upper bound K(n,c); caller contract: c > threshold and c != 0
    double K(double c) const;
};
PositivityConstants positivity_constants(int n);

// The printed region: c = 0, or c > threshold(n) and 0 < k <= K(n,c).
bool positivity_predicate(int n, double c, double k);

// Independent route for the same region: sign of the leading coefficient of
// alpha^2 s^A as a polynomial in alpha = 1 + t (all lower-order terms are
// positive, so s^A stays positive over the whole fiber iff this
// coefficient is >= 0).
bool positivity_from_profile(int n, double c, double k);

} // namespace cglab
