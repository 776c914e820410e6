#pragma once
// Euclidean bundles with metric connections, the generalized Cheeger-Gromoll
// metric h_{p,q} on their total spaces, the O'Neill tensor, and the two
// built-in bundle families: the tangent bundle of a space form and the
// k-Atiyah bundle TM ⊕ so(TM).
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cglab/jet.hpp"
#include "cglab/metric_field.hpp"
#include "cglab/nd.hpp"
#include "cglab/space_form.hpp"

namespace cglab {

struct CGParams {
    double p = 0.0;
    double q = 0.0;  // must be >= 0
    CGParams(double p_, double q_);
};

struct AtiyahParams {
    double k;  // must be > 0
    explicit AtiyahParams(double k_);
    static int rank(int n) { return n * (n + 1) / 2; }
};

struct TotalSpacePoint {
    std::vector<double> x;   // base coordinates, length n
    std::vector<double> mu;  // fiber coordinates in the local frame, length r
};

// A rank-r Euclidean bundle over an n-dimensional chart.  All x-dependent
// data comes in a double and a jet evaluator instantiated from the same
// generic callable; conn(i,j,l) is Gamma^l_ij in
// nabla_{d/dx_i} s_j = sum_l Gamma^l_ij s_l.
struct EuclideanBundle {
    int n = 0;
    int r = 0;
    std::function<void(std::span<const double>, MatD&)> base_metric;
    std::function<void(std::span<const Jet2>, Mat<Jet2>&)> base_metric_jet;
    std::function<void(std::span<const double>, MatD&)> gram;
    std::function<void(std::span<const Jet2>, Mat<Jet2>&)> gram_jet;
    std::function<void(std::span<const double>, Ten3D&)> conn;
    std::function<void(std::span<const Jet2>, Ten3<Jet2>&)> conn_jet;
    std::function<bool(std::span<const double>)> in_domain;      // null: everywhere
    std::function<void(std::span<const double>, MatD&)> frame;   // orthonormal base frame, columns
    std::function<double(std::span<const double>)> base_scalar;  // s^M(x)
    std::optional<SpaceForm> base_space_form;
    std::optional<double> atiyah_k;

    bool admissible(std::span<const double> x) const { return !in_domain || in_domain(x); }
    // t = |a|^2 = mu^T G(x) mu
    double fiber_norm_sq(const TotalSpacePoint& pt) const;
};

// Assembles the double/jet evaluator pairs from generic callables
// f(span<const T> x, Out<T>&).
template <class FBase, class FGram, class FConn>
EuclideanBundle make_bundle(int n, int r, FBase base, FGram gram, FConn conn) {
    EuclideanBundle b;
    b.n = n;
    b.r = r;
    b.base_metric = [base, n](std::span<const double> x, MatD& g) {
        g = MatD(n, n, 0.0);
        base(x, g);
    };
    b.base_metric_jet = [base, n](std::span<const Jet2> x, Mat<Jet2>& g) {
        g = Mat<Jet2>(n, n, zero_like(x[0]));
        base(x, g);
    };
    b.gram = [gram, r](std::span<const double> x, MatD& g) {
        g = MatD(r, r, 0.0);
        gram(x, g);
    };
    b.gram_jet = [gram, r](std::span<const Jet2> x, Mat<Jet2>& g) {
        g = Mat<Jet2>(r, r, zero_like(x[0]));
        gram(x, g);
    };
    b.conn = [conn, n, r](std::span<const double> x, Ten3D& ga) {
        ga = Ten3D(n, r, r, 0.0);
        conn(x, ga);
    };
    b.conn_jet = [conn, n, r](std::span<const Jet2> x, Ten3<Jet2>& ga) {
        ga = Ten3<Jet2>(n, r, r, zero_like(x[0]));
        conn(x, ga);
    };
    return b;
}

// K(A) for A = sum b_i d/dx_i + sum Z_j d/dmu_j at pt:
// K(A)_l = Z_l + sum_ij b_i mu_j Gamma^l_ij
std::vector<double> connection_map(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                                   std::span<const double> b, std::span<const double> z);

// The unique lift with d(pi)(h) = u and K(h) = 0; returns (u, correction)
// as an (n+r)-vector.
std::vector<double> horizontal_lift(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                                    std::span<const double> u);

// h_{p,q} on the total space as a metric field in the coordinates
// (x_1..x_n, mu_1..mu_r).
MetricField cg_metric_field(const EuclideanBundle& bundle, const CGParams& params);

// Restriction of h_{p,q} to the fiber over x0, as a metric field on the
// fiber coordinates.
MetricField fiber_metric_field(const EuclideanBundle& bundle, const CGParams& params,
                               std::span<const double> x0);

EuclideanBundle build_tangent_bundle(const SpaceForm& sf);
EuclideanBundle build_atiyah_bundle(const SpaceForm& sf, const AtiyahParams& params);
// Trivial rank-r bundle over flat R^n with the product connection.
EuclideanBundle build_flat_bundle(int n, int r);

// Curvature of conn in the sign convention of the shape-tensor formulas:
// out(i,m,j,l) = component l of R(d/dx_i, d/dx_m) s_j.
Ten4D conn_curvature(const EuclideanBundle& bundle, std::span<const double> x);

// O'Neill shape tensor B_{u^h} v^h = 1/2 (R(u,v) a)^v; u, v in base chart
// coordinates; returns fiber-frame coordinates of the vertical value.
std::vector<double> oneill_b(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                             std::span<const double> u, std::span<const double> v);

// xi(a,b) = sum over ordered pairs (i,j), i != j, of
// <R(e_i,e_j)a, R(e_i,e_j)b>_E over an orthonormal base frame.
double xi_form(const EuclideanBundle& bundle, std::span<const double> x,
               std::span<const double> a, std::span<const double> b);

// Closed-form principal curvature of AO(M,k) over a space form applied to
// a = Z + F: (-2w u∧v (Z), -2w [u∧v, F]) with w = c(2-ck)/4; u, v, Z
// frame-expressed.
struct AtiyahCurvatureValue {
    std::vector<double> tm;
    SkewEndomorphism so;
};
AtiyahCurvatureValue principal_curvature_atiyah(const SpaceForm& sf, const AtiyahParams& params,
                                                std::span<const double> u, std::span<const double> v,
                                                std::span<const double> z, const SkewEndomorphism& f);

// Fiber-frame coordinates of Z + F on AO(M,k): first n entries Z, then
// sqrt(2k) F_ab over pairs a<b (the frame {e_i} ∪ {(2k)^{-1/2} e_a∧e_b} is
// <,>_k-orthonormal).
std::vector<double> atiyah_fiber_coords(std::span<const double> z, const SkewEndomorphism& f, double k);
void atiyah_split(std::span<const double> mu, int n, double k, std::vector<double>& z,
                  SkewEndomorphism& f);

} // namespace cglab
