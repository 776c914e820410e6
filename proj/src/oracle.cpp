#include "cglab/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "cglab/errors.hpp"

namespace cglab {

namespace {

Eigen::MatrixXd to_eigen(const MatD& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

MatD from_eigen(const Eigen::MatrixXd& e) {
    MatD m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

} // namespace

MatD checked_inverse(const MatD& m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(to_eigen(m));
    const double rcond = lu.rcond();
    if (!(rcond > 1e-12))
        throw DegeneracyError("metric numerically singular (condition estimate above 1e12)");
    return from_eigen(lu.inverse());
}

SecondJet second_jet(const MetricField& field, std::span<const double> x) {
    if (!field.admissible(x))
        throw DomainError("coordinate point outside the chart's admissible domain");
    const int d = field.dim;

    std::vector<Jet2> xj;
    xj.reserve(d);
    for (int i = 0; i < d; ++i) xj.push_back(Jet2::variable(d, i, x[i]));

    Mat<Jet2> h;
    field.eval_jet(xj, h);

    SecondJet out;
    out.dim = d;
    out.g = MatD(d, d);
    out.dg = Ten3D(d, d, d);
    out.d2g = Ten4D(d, d, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Jet2& e = h(i, j);
            out.g(i, j) = e.value();
            for (int k = 0; k < d; ++k) {
                out.dg(k, i, j) = e.d(k);
                for (int l = 0; l < d; ++l) out.d2g(k, l, i, j) = e.d2(k, l);
            }
        }
    return out;
}

Ten3D christoffel(const SecondJet& jet) {
    const int d = jet.dim;
    const MatD ginv = checked_inverse(jet.g);
    Ten3D gamma(d, d, d, 0.0);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                double s = 0.0;
                for (int l = 0; l < d; ++l)
                    s += ginv(k, l) * (jet.dg(i, j, l) + jet.dg(j, i, l) - jet.dg(l, i, j));
                gamma(k, i, j) = 0.5 * s;
                gamma(k, j, i) = gamma(k, i, j);
            }
    return gamma;
}

CurvatureReport curvature_report(const MetricField& field, std::span<const double> x,
                                 Convention convention) {
    const SecondJet jet = second_jet(field, x);
    const int d = jet.dim;

    CurvatureReport rep;
    rep.dim = d;
    rep.convention = convention;
    rep.g = jet.g;
    rep.g_inv = checked_inverse(jet.g);
    rep.christoffel = christoffel(jet);

    // d_m g^{kl} = -g^{ka} (d_m g_ab) g^{bl}
    Ten3D dginv(d, d, d, 0.0);
    for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                double s = 0.0;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        s += rep.g_inv(k, a) * jet.dg(m, a, b) * rep.g_inv(b, l);
                dginv(m, k, l) = -s;
            }

    // dgamma(m,k,i,j) = d_m Gamma^k_ij
    Ten4D dgamma(d, d, d, d, 0.0);
    for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < d; ++l) {
                        s += dginv(m, k, l) * (jet.dg(i, j, l) + jet.dg(j, i, l) - jet.dg(l, i, j));
                        s += rep.g_inv(k, l) *
                             (jet.d2g(m, i, j, l) + jet.d2g(m, j, i, l) - jet.d2g(m, l, i, j));
                    }
                    dgamma(m, k, i, j) = 0.5 * s;
                    dgamma(m, k, j, i) = dgamma(m, k, i, j);
                }

    // textbook convention first: R(d_i, d_j) d_k, component l
    rep.riemann = Ten4D(d, d, d, d, 0.0);
    const Ten3D& ga = rep.christoffel;
    for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double s = dgamma(i, l, j, k) - dgamma(j, l, i, k);
                    for (int m = 0; m < d; ++m)
                        s += ga(l, i, m) * ga(m, j, k) - ga(l, j, m) * ga(m, i, k);
                    rep.riemann(l, k, i, j) = s;
                }

    rep.ricci = MatD(d, d, 0.0);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            double s = 0.0;
            for (int l = 0; l < d; ++l) s += rep.riemann(l, k, l, j);
            rep.ricci(k, j) = s;
        }

    rep.scalar = 0.0;
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) rep.scalar += rep.g_inv(k, j) * rep.ricci(k, j);

    if (convention == Convention::reversed)
        for (std::size_t idx = 0; idx < rep.riemann.size(); ++idx)
            rep.riemann.data()[idx] = -rep.riemann.data()[idx];

    return rep;
}

double sectional_curvature(const CurvatureReport& report, const MatD& g,
                           std::span<const double> u, std::span<const double> v) {
    const int d = report.dim;
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uu += u[i] * g(i, j) * u[j];
            vv += v[i] * g(i, j) * v[j];
            uv += u[i] * g(i, j) * v[j];
        }
    const double den = uu * vv - uv * uv;
    if (!(den > 1e-12 * std::max(uu * vv, 1e-300)))
        throw DegeneracyError("sectional curvature of a degenerate plane");

    // reversed: <R(u,v)u, v>;  textbook: <R(u,v)v, u>
    const bool rev = report.convention == Convention::reversed;
    double num = 0.0;
    for (int l = 0; l < d; ++l) {
        double comp = 0.0;
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    comp += report.riemann(l, k, i, j) * (rev ? u[k] : v[k]) * u[i] * v[j];
        for (int m = 0; m < d; ++m) num += comp * g(l, m) * (rev ? v[m] : u[m]);
    }
    return num / den;
}

} // namespace cglab
