#include "cglab/space_form.hpp"

#include <cmath>
#include <stdexcept>

#include "cglab/errors.hpp"

namespace cglab {

SpaceForm::SpaceForm(int n_, double c_) : n(n_), c(c_) {
    if (n < 2) throw std::invalid_argument("space form dimension must be >= 2");
    if (!std::isfinite(c)) throw std::invalid_argument("curvature must be finite");
}

bool SpaceForm::in_domain(std::span<const double> x) const {
    if (c >= 0.0) return true;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * x[i];
    return s < -4.0 / c;
}

double SpaceForm::lambda(std::span<const double> x) const {
    if (!in_domain(x)) throw DomainError("point outside the conformal chart ball");
    return conformal_lambda(c, n, x);
}

MetricField SpaceForm::metric_field() const {
    const int dim = n;
    const double cc = c;
    return make_metric_field(
        dim,
        [dim, cc](auto x, auto& g) {
            auto lam = conformal_lambda(cc, dim, x);
            auto l2 = lam * lam;
            for (int i = 0; i < dim; ++i) g(i, i) = l2;
        },
        [sf = *this](std::span<const double> x) { return sf.in_domain(x); });
}

MatD conformal_metric(const SpaceForm& sf, std::span<const double> x) {
    const double lam = sf.lambda(x);
    MatD g(sf.n, sf.n, 0.0);
    for (int i = 0; i < sf.n; ++i) g(i, i) = lam * lam;
    return g;
}

MatD orthonormal_frame(const SpaceForm& sf, std::span<const double> x) {
    const double inv_lam = 1.0 / sf.lambda(x);
    MatD e(sf.n, sf.n, 0.0);
    for (int i = 0; i < sf.n; ++i) e(i, i) = inv_lam;
    return e;
}

SkewEndomorphism SkewEndomorphism::from_matrix(const MatD& m) {
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("skew endomorphism must be square");
    const double scale = std::max(max_abs(m), 1.0);
    SkewEndomorphism f(n);
    for (int i = 0; i < n; ++i) {
        if (std::abs(m(i, i)) > 1e-12 * scale)
            throw std::invalid_argument("matrix is not antisymmetric");
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) + m(j, i)) > 1e-12 * scale)
                throw std::invalid_argument("matrix is not antisymmetric");
            f.m_(i, j) = m(i, j);
            f.m_(j, i) = -m(i, j);
        }
    }
    return f;
}

double SkewEndomorphism::norm_sq(double k) const {
    // -k tr(F^2) = k sum_ij F_ij^2 for antisymmetric F
    double s = 0.0;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) s += m_(i, j) * m_(i, j);
    return k * s;
}

std::vector<double> SkewEndomorphism::apply(std::span<const double> z) const {
    std::vector<double> out(n(), 0.0);
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) out[i] += m_(i, j) * z[j];
    return out;
}

SkewEndomorphism wedge(std::span<const double> u, std::span<const double> v) {
    const int n = static_cast<int>(u.size());
    SkewEndomorphism w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) w.entry(i, j) = u[i] * v[j] - v[i] * u[j];
    return w;
}

SkewEndomorphism curvature_endomorphism(const SpaceForm& sf, std::span<const double> u,
                                        std::span<const double> v) {
    SkewEndomorphism w = wedge(u, v);
    for (int i = 0; i < w.n(); ++i)
        for (int j = 0; j < w.n(); ++j) w.entry(i, j) *= -sf.c;
    return w;
}

SkewEndomorphism commutator(const SkewEndomorphism& a, const SkewEndomorphism& b) {
    const int n = a.n();
    if (b.n() != n) throw std::invalid_argument("commutator of mismatched sizes");
    SkewEndomorphism out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int m = 0; m < n; ++m) s += a(i, m) * b(m, j) - b(i, m) * a(m, j);
            out.entry(i, j) = s;
        }
    return out;
}

int so_dim(int n) { return n * (n - 1) / 2; }

int so_index(int a, int b, int n) {
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<int, int> so_pair(int index, int n) {
    for (int a = 0; a < n - 1; ++a) {
        const int row = n - 1 - a;
        if (index < row) return {a, a + 1 + index};
        index -= row;
    }
    throw std::invalid_argument("so(n) basis index out of range");
}

} // namespace cglab
