#pragma once
// Constant-curvature base manifolds in a single global conformal chart
// g_ij(x) = lambda(x)^2 delta_ij with lambda = 1/(1 + c|x|^2/4), plus the
// skew-endomorphism utilities used by the so(TM) fiber.
#include <span>
#include <utility>
#include <vector>

#include "cglab/metric_field.hpp"
#include "cglab/nd.hpp"

namespace cglab {

struct SpaceForm {
    int n;     // dimension >= 2
    double c;  // constant sectional curvature

    SpaceForm(int n, double c);

    // all of R^n for c >= 0, the ball |x|^2 < -4/c for c < 0
    bool in_domain(std::span<const double> x) const;
    double lambda(std::span<const double> x) const;
    double scalar_curvature() const { return static_cast<double>(n) * (n - 1) * c; }

    MetricField metric_field() const;
};

// Conformal factor in generic scalars (T = double or Jet2); x may carry more
// trailing coordinates than n (total-space evaluation), only the first n are
// read.
template <class T>
T conformal_lambda(double c, int n, std::span<const T> x) {
    auto s = zero_like(x[0]);
    for (int i = 0; i < n; ++i) s += x[i] * x[i];
    return 1.0 / (1.0 + 0.25 * c * s);
}

MatD conformal_metric(const SpaceForm& sf, std::span<const double> x);
// columns are the coordinate components of the orthonormal frame
// e_i = lambda^{-1} d/dx_i
MatD orthonormal_frame(const SpaceForm& sf, std::span<const double> x);

class SkewEndomorphism {
public:
    SkewEndomorphism() = default;
    explicit SkewEndomorphism(int n) : m_(n, n, 0.0) {}
    // validates antisymmetry (1e-12 relative) and renormalizes the lower
    // triangle to the exact negative of the upper
    static SkewEndomorphism from_matrix(const MatD& m);

    int n() const { return m_.rows(); }
    const MatD& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }
    double& entry(int i, int j) { return m_(i, j); }

    // |F|^2 = -k tr(F^2)
    double norm_sq(double k) const;
    std::vector<double> apply(std::span<const double> z) const;

private:
    MatD m_;
};

// (u ∧ v) w = <v,w> u - <u,w> v for frame-expressed u, v
SkewEndomorphism wedge(std::span<const double> u, std::span<const double> v);
// R^M(u,v) = -c u ∧ v in the sign convention with sectional curvature
// <R(u,v)u, v>
SkewEndomorphism curvature_endomorphism(const SpaceForm& sf, std::span<const double> u,
                                        std::span<const double> v);
SkewEndomorphism commutator(const SkewEndomorphism& a, const SkewEndomorphism& b);

// lexicographic indexing of the pairs (a,b), a<b, enumerating a basis of so(n)
int so_dim(int n);
int so_index(int a, int b, int n);
std::pair<int, int> so_pair(int index, int n);

} // namespace cglab
