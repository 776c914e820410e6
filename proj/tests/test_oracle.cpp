#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cglab/errors.hpp"
#include "cglab/metric_field.hpp"
#include "cglab/oracle.hpp"
#include "cglab/rng.hpp"
#include "cglab/space_form.hpp"

using namespace cglab;

namespace {

MetricField flat_field(int dim) {
    return make_metric_field(dim, [dim](auto x, auto& g) {
        for (int i = 0; i < dim; ++i) g(i, i) = zero_like(x[0]) + 1.0;
    });
}

// g = (1 + |x|^2) I + x x^T: symmetric, positive definite, polynomial
MetricField poly_field(int dim) {
    return make_metric_field(dim, [dim](auto x, auto& g) {
        auto s = zero_like(x[0]);
        for (int i = 0; i < dim; ++i) s += x[i] * x[i];
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) g(i, j) = x[i] * x[j];
            g(i, i) += 1.0 + s;
        }
    });
}

// block-diagonal product of two fields, each reading its own coordinates
MetricField product_field(const MetricField& a, const MetricField& b) {
    const int da = a.dim, db = b.dim;
    return make_metric_field(da + db, [a, b, da, db](auto x, auto& g) {
        using T = std::remove_cvref_t<decltype(x[0])>;
        Mat<T> ga, gb;
        if constexpr (std::is_same_v<T, double>) {
            a.eval(x.first(da), ga);
            b.eval(x.subspan(da), gb);
        } else {
            a.eval_jet(x.first(da), ga);
            b.eval_jet(x.subspan(da), gb);
        }
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j) g(i, j) = ga(i, j);
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j) g(da + i, da + j) = gb(i, j);
    });
}

double phi_conformal(double c, std::span<const double> x, int j) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    const double lam = 1.0 / (1.0 + 0.25 * c * s);
    return -0.5 * c * x[j] * lam;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("flat metric: zero jets, zero curvature") {
    const MetricField f = flat_field(3);
    const std::vector<double> x = {0.4, -1.2, 2.0};
    const SecondJet jet = second_jet(f, x);
    CHECK(max_abs(jet.dg) == 0.0);
    CHECK(max_abs(jet.d2g) == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(jet.g(i, i) == 1.0);

    const CurvatureReport rep = curvature_report(f, x, Convention::reversed);
    CHECK(max_abs(rep.christoffel) == 0.0);
    CHECK(max_abs(rep.riemann) == 0.0);
    CHECK(rep.scalar == 0.0);
}

TEST_CASE("one-dimensional field jets by hand") {
    const MetricField f =
        make_metric_field(1, [](auto x, auto& g) { g(0, 0) = 1.0 + x[0] * x[0]; });
    const std::vector<double> x = {0.0};
    const SecondJet jet = second_jet(f, x);
    CHECK(jet.g(0, 0) == 1.0);
    CHECK(jet.dg(0, 0, 0) == 0.0);
    CHECK(jet.d2g(0, 0, 0, 0) == 2.0);
}

TEST_CASE("conformal chart gradient vanishes at the origin") {
    // lambda is even about 0, so every d_k g_ij = 0 there
    const SpaceForm s2(2, 1.0);
    const std::vector<double> origin = {0.0, 0.0};
    const SecondJet jet = second_jet(s2.metric_field(), origin);
    CHECK(max_abs(jet.dg) == 0.0);
    CHECK(jet.g(0, 0) == 1.0);
}

TEST_CASE("conformal chart Christoffels vs hand formula") {
    // Gamma^k_ij = d_i phi delta_jk + d_j phi delta_ik - delta_ij d_k phi
    const SpaceForm sf(2, 1.0);
    const std::vector<double> x = {1.0, 0.0};
    const SecondJet jet = second_jet(sf.metric_field(), x);
    const Ten3D gamma = christoffel(jet);
    for (int kk = 0; kk < 2; ++kk)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double want = 0.0;
                if (kk == i) want += phi_conformal(1.0, x, j);
                if (kk == j) want += phi_conformal(1.0, x, i);
                if (i == j) want -= phi_conformal(1.0, x, kk);
                CHECK(gamma(kk, i, j) == doctest::Approx(want).epsilon(1e-13));
            }
    // lambda(1,0) = 0.8, phi_0 = -0.4
    CHECK(gamma(0, 0, 0) == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(gamma(0, 1, 1) == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("christoffel symmetry and metric compatibility") {
    Rng rng(5);
    for (const MetricField& f : {poly_field(3), SpaceForm(3, 1.0).metric_field(),
                                 SpaceForm(2, -1.0).metric_field()}) {
        for (int trial = 0; trial < 5; ++trial) {
            const std::vector<double> x = rng.ball(f.dim, 1.0);
            const SecondJet jet = second_jet(f, x);
            const Ten3D ga = christoffel(jet);
            const double scale = std::max(1.0, max_abs(jet.dg));
            for (int kk = 0; kk < f.dim; ++kk)
                for (int i = 0; i < f.dim; ++i)
                    for (int j = 0; j < f.dim; ++j) {
                        CHECK(ga(kk, i, j) == ga(kk, j, i));
                        // d_k g_ij = Gamma^m_ki g_mj + Gamma^m_kj g_im
                        double rhs = 0.0;
                        for (int m = 0; m < f.dim; ++m)
                            rhs += ga(m, kk, i) * jet.g(m, j) + ga(m, kk, j) * jet.g(i, m);
                        CHECK(std::abs(jet.dg(kk, i, j) - rhs) < 1e-10 * scale);
                    }
        }
    }
}

TEST_CASE("space form scalar curvature") {
    const SpaceForm s2(2, 1.0);
    Rng rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<double> x = rng.ball(2, 1.5);
        CHECK(curvature_report(s2.metric_field(), x, Convention::reversed).scalar ==
              doctest::Approx(2.0).epsilon(1e-9));
    }
    const SpaceForm h2(2, -1.0);
    const std::vector<double> origin = {0.0, 0.0};
    CHECK(curvature_report(h2.metric_field(), origin, Convention::textbook).scalar ==
          doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("riemann tensor invariants") {
    Rng rng(17);
    for (const MetricField& f : {poly_field(3), SpaceForm(3, -0.5).metric_field()}) {
        const std::vector<double> x = rng.ball(f.dim, 0.9);
        const CurvatureReport rep = curvature_report(f, x, Convention::textbook);
        const int d = rep.dim;
        const double scale = std::max(1.0, max_abs(rep.riemann));

        // antisymmetry in the last two indices is exact by construction
        for (int l = 0; l < d; ++l)
            for (int kk = 0; kk < d; ++kk)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        CHECK(rep.riemann(l, kk, i, j) == -rep.riemann(l, kk, j, i));

        // first Bianchi identity
        for (int l = 0; l < d; ++l)
            for (int kk = 0; kk < d; ++kk)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        const double cyc = rep.riemann(l, kk, i, j) + rep.riemann(l, i, j, kk) +
                                           rep.riemann(l, j, kk, i);
                        CHECK(std::abs(cyc) < 1e-9 * scale);
                    }

        // lowered tensor: antisymmetric in (a,b), symmetric under pair swap
        Ten4D low(d, d, d, d, 0.0);
        for (int a = 0; a < d; ++a)
            for (int kk = 0; kk < d; ++kk)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        double s = 0.0;
                        for (int l = 0; l < d; ++l) s += rep.g(a, l) * rep.riemann(l, kk, i, j);
                        low(a, kk, i, j) = s;
                    }
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        CHECK(std::abs(low(a, b, i, j) + low(b, a, i, j)) < 1e-9 * scale);
                        CHECK(std::abs(low(a, b, i, j) - low(i, j, a, b)) < 1e-9 * scale);
                    }

        // ricci is the contraction, scalar the g-inverse trace
        for (int kk = 0; kk < d; ++kk)
            for (int j = 0; j < d; ++j) {
                double s = 0.0;
                for (int l = 0; l < d; ++l) s += rep.riemann(l, kk, l, j);
                CHECK(rep.ricci(kk, j) == doctest::Approx(s).epsilon(1e-12));
            }
    }
}

TEST_CASE("reversed convention is the negated textbook riemann") {
    const SpaceForm sf(3, 1.0);
    const std::vector<double> x = {0.2, -0.1, 0.4};
    const CurvatureReport tb = curvature_report(sf.metric_field(), x, Convention::textbook);
    const CurvatureReport pp = curvature_report(sf.metric_field(), x, Convention::reversed);
    for (std::size_t i = 0; i < tb.riemann.size(); ++i)
        CHECK(pp.riemann.data()[i] == -tb.riemann.data()[i]);
    CHECK(pp.scalar == tb.scalar);
    CHECK(max_abs(pp.ricci) == max_abs(tb.ricci));
}

TEST_CASE("sectional curvature") {
    const SpaceForm s3(3, 1.0);
    const std::vector<double> x = {0.1, 0.2, -0.3};
    const CurvatureReport rep = curvature_report(s3.metric_field(), x, Convention::reversed);

    Rng rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<double> u = rng.ball(3, 1.0);
        const std::vector<double> v = rng.ball(3, 1.0);
        const double kk = sectional_curvature(rep, rep.g, u, v);
        CHECK(kk == doctest::Approx(1.0).epsilon(1e-9));
        // scale invariance
        std::vector<double> u2 = u, v3 = v;
        for (auto& e : u2) e *= 2.0;
        for (auto& e : v3) e *= 3.0;
        CHECK(sectional_curvature(rep, rep.g, u2, v3) == doctest::Approx(kk).epsilon(1e-12));
    }
    // flat space: zero
    const CurvatureReport flat = curvature_report(flat_field(3), x, Convention::reversed);
    const std::vector<double> u = {1.0, 0.0, 0.0}, v = {0.0, 1.0, 0.0};
    CHECK(sectional_curvature(flat, flat.g, u, v) == 0.0);
    // degenerate plane rejected
    std::vector<double> w = {2.0, 0.0, 0.0};
    CHECK_THROWS_AS(sectional_curvature(flat, flat.g, u, w), DegeneracyError);
}

TEST_CASE("second jet agrees with central finite differences") {
    const double h = 1e-4;
    Rng rng(77);
    for (const SpaceForm& sf : {SpaceForm(2, 1.0), SpaceForm(2, -1.0), SpaceForm(3, 1.0),
                                SpaceForm(3, -0.5)}) {
        const MetricField f = sf.metric_field();
        const std::vector<double> x = rng.ball(sf.n, 1.0);
        const SecondJet jet = second_jet(f, x);

        auto eval_at = [&](const std::vector<double>& p) {
            MatD g;
            f.eval(p, g);
            return g;
        };
        for (int kk = 0; kk < sf.n; ++kk) {
            std::vector<double> xp = x, xm = x;
            xp[kk] += h;
            xm[kk] -= h;
            const MatD gp = eval_at(xp), gm = eval_at(xm);
            for (int i = 0; i < sf.n; ++i)
                for (int j = 0; j < sf.n; ++j) {
                    const double fd = (gp(i, j) - gm(i, j)) / (2.0 * h);
                    CHECK(std::abs(jet.dg(kk, i, j) - fd) <= 1e-5 * (1.0 + std::abs(fd)));
                }
            for (int ll = 0; ll < sf.n; ++ll) {
                std::vector<double> xpp = x, xpm = x, xmp = x, xmm = x;
                xpp[kk] += h; xpp[ll] += h;
                xpm[kk] += h; xpm[ll] -= h;
                xmp[kk] -= h; xmp[ll] += h;
                xmm[kk] -= h; xmm[ll] -= h;
                const MatD gpp = eval_at(xpp), gpm = eval_at(xpm), gmp = eval_at(xmp),
                           gmm = eval_at(xmm);
                for (int i = 0; i < sf.n; ++i)
                    for (int j = 0; j < sf.n; ++j) {
                        const double fd =
                            (gpp(i, j) - gpm(i, j) - gmp(i, j) + gmm(i, j)) / (4.0 * h * h);
                        CHECK(std::abs(jet.d2g(kk, ll, i, j) - fd) <=
                              1e-5 * (1.0 + std::abs(fd)));
                    }
            }
        }
    }
}

TEST_CASE("second jet symmetry is exact") {
    Rng rng(123);
    for (const MetricField& f : {poly_field(4), SpaceForm(3, 1.0).metric_field()}) {
        const std::vector<double> x = rng.ball(f.dim, 0.8);
        const SecondJet jet = second_jet(f, x);
        for (int i = 0; i < f.dim; ++i)
            for (int j = 0; j < f.dim; ++j) {
                CHECK(jet.g(i, j) == jet.g(j, i));
                for (int kk = 0; kk < f.dim; ++kk) {
                    CHECK(jet.dg(kk, i, j) == jet.dg(kk, j, i));
                    for (int ll = 0; ll < f.dim; ++ll)
                        CHECK(jet.d2g(kk, ll, i, j) == jet.d2g(ll, kk, i, j));
                }
            }
    }
}

TEST_CASE("product metric scalar curvature adds") {
    const MetricField prod = product_field(flat_field(2), SpaceForm(2, 1.0).metric_field());
    const std::vector<double> z = {0.7, -0.3, 0.25, 0.4};
    CHECK(curvature_report(prod, z, Convention::reversed).scalar ==
          doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("error paths") {
    const SpaceForm h2(2, -1.0);  // chart ball |x| < 2
    const std::vector<double> outside = {2.5, 0.0};
    CHECK_THROWS_AS(second_jet(h2.metric_field(), outside), DomainError);

    const MetricField singular = make_metric_field(2, [](auto x, auto& g) {
        g(0, 0) = zero_like(x[0]) + 1.0;
        g(0, 1) = zero_like(x[0]) + 1.0;
        g(1, 0) = zero_like(x[0]) + 1.0;
        g(1, 1) = zero_like(x[0]) + 1.0;
    });
    const std::vector<double> x = {0.0, 0.0};
    CHECK_THROWS_AS(christoffel(second_jet(singular, x)), DegeneracyError);
}

} // TEST_SUITE
