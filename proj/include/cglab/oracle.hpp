#pragma once
// Coordinate curvature engine: Christoffel symbols, Riemann / Ricci tensors
// and scalar curvature of any twice-differentiable metric field, from exact
// second-order forward-mode jets (no finite differences on the main path).
#include <span>

#include "cglab/metric_field.hpp"
#include "cglab/nd.hpp"

namespace cglab {

// Sign conventions for the Riemann tensor.  `textbook` is
// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]; `reversed` is its negative,
// with sectional curvature <R(u,v)u, v>/(|u|^2|v|^2 - <u,v>^2).  Christoffel
// symbols, Ricci and scalar curvature are convention-independent.
enum class Convention { textbook, reversed };

struct SecondJet {
    int dim = 0;
    MatD g;     // g(i,j)
    Ten3D dg;   // dg(k,i,j)    = d_k g_ij
    Ten4D d2g;  // d2g(k,l,i,j) = d_k d_l g_ij
};

SecondJet second_jet(const MetricField& field, std::span<const double> x);

// Gamma^k_ij stored as (k,i,j); requires an invertible jet.g (condition
// estimate above 1e12 raises DegeneracyError).
Ten3D christoffel(const SecondJet& jet);

struct CurvatureReport {
    int dim = 0;
    Convention convention = Convention::textbook;
    MatD g, g_inv;
    Ten3D christoffel;  // Gamma^k_ij
    Ten4D riemann;      // riemann(l,k,i,j) = component l of R(d_i, d_j) d_k
    MatD ricci;
    double scalar = 0.0;
};

CurvatureReport curvature_report(const MetricField& field, std::span<const double> x,
                                 Convention convention);

// Sectional curvature of span{u,v}; throws DegeneracyError when u,v are
// (numerically) linearly dependent.
double sectional_curvature(const CurvatureReport& report, const MatD& g,
                           std::span<const double> u, std::span<const double> v);

// Checked dense inverse (partial-pivot LU, condition gate at 1e12).
MatD checked_inverse(const MatD& m);

} // namespace cglab
