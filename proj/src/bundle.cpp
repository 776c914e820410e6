#include "cglab/bundle.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "cglab/errors.hpp"

namespace cglab {

CGParams::CGParams(double p_, double q_) : p(p_), q(q_) {
    if (!(q >= 0.0)) throw std::invalid_argument("h_{p,q} requires q >= 0");
    if (!std::isfinite(p)) throw std::invalid_argument("h_{p,q} requires finite p");
}

AtiyahParams::AtiyahParams(double k_) : k(k_) {
    if (!(k > 0.0)) throw std::invalid_argument("Atiyah bundle requires k > 0");
}

double EuclideanBundle::fiber_norm_sq(const TotalSpacePoint& pt) const {
    MatD g;
    gram(pt.x, g);
    double t = 0.0;
    for (int j = 0; j < r; ++j)
        for (int l = 0; l < r; ++l) t += pt.mu[j] * g(j, l) * pt.mu[l];
    return t;
}

namespace {

template <class T>
void eval_base(const EuclideanBundle& b, std::span<const T> x, Mat<T>& out) {
    if constexpr (std::is_same_v<T, double>)
        b.base_metric(x, out);
    else
        b.base_metric_jet(x, out);
}

template <class T>
void eval_gram(const EuclideanBundle& b, std::span<const T> x, Mat<T>& out) {
    if constexpr (std::is_same_v<T, double>)
        b.gram(x, out);
    else
        b.gram_jet(x, out);
}

template <class T>
void eval_conn(const EuclideanBundle& b, std::span<const T> x, Ten3<T>& out) {
    if constexpr (std::is_same_v<T, double>)
        b.conn(x, out);
    else
        b.conn_jet(x, out);
}

} // namespace

std::vector<double> connection_map(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                                   std::span<const double> b, std::span<const double> z) {
    Ten3D ga;
    bundle.conn(pt.x, ga);
    std::vector<double> out(z.begin(), z.end());
    // the correction is summed separately (same order as horizontal_lift)
    // so K(horizontal_lift(u)) cancels exactly
    for (int l = 0; l < bundle.r; ++l) {
        double corr = 0.0;
        for (int i = 0; i < bundle.n; ++i)
            for (int j = 0; j < bundle.r; ++j) corr += b[i] * pt.mu[j] * ga(i, j, l);
        out[l] += corr;
    }
    return out;
}

std::vector<double> horizontal_lift(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                                    std::span<const double> u) {
    Ten3D ga;
    bundle.conn(pt.x, ga);
    std::vector<double> out(bundle.n + bundle.r, 0.0);
    for (int i = 0; i < bundle.n; ++i) out[i] = u[i];
    for (int l = 0; l < bundle.r; ++l) {
        double corr = 0.0;
        for (int i = 0; i < bundle.n; ++i)
            for (int j = 0; j < bundle.r; ++j) corr += u[i] * pt.mu[j] * ga(i, j, l);
        out[bundle.n + l] = -corr;
    }
    return out;
}

MetricField cg_metric_field(const EuclideanBundle& bundle, const CGParams& params) {
    const int n = bundle.n, r = bundle.r;
    const double p = params.p, q = params.q;
    const EuclideanBundle b = bundle;  // kept alive by the field
    auto f = [b, n, r, p, q](auto z, auto& h) {
        using T = std::remove_cvref_t<decltype(z[0])>;
        using std::pow;
        const auto x = z.first(n);
        const auto mu = z.subspan(n);
        const T zero = zero_like(z[0]);

        Mat<T> gbase, gram;
        Ten3<T> ga;
        eval_base(b, x, gbase);
        eval_gram(b, x, gram);
        eval_conn(b, x, ga);

        // K_i = K(d/dx_i): the fiber correction of the coordinate field
        std::vector<T> kv(static_cast<std::size_t>(n) * r, zero);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < r; ++l) {
                T acc = zero;
                for (int j = 0; j < r; ++j) acc += mu[j] * ga(i, j, l);
                kv[static_cast<std::size_t>(i) * r + l] = acc;
            }
        // Ga_m = <e_m, a>_E
        std::vector<T> gmu(r, zero);
        T t = zero;
        for (int m = 0; m < r; ++m) {
            T acc = zero;
            for (int l = 0; l < r; ++l) acc += gram(m, l) * mu[l];
            gmu[m] = acc;
            t += mu[m] * acc;
        }
        // GK_i = gram * K_i and <K_i, a>_E
        std::vector<T> gk(static_cast<std::size_t>(n) * r, zero);
        std::vector<T> ka(n, zero);
        for (int i = 0; i < n; ++i) {
            T acc = zero;
            for (int m = 0; m < r; ++m) {
                T e = zero;
                for (int l = 0; l < r; ++l) e += gram(m, l) * kv[static_cast<std::size_t>(i) * r + l];
                gk[static_cast<std::size_t>(i) * r + m] = e;
                acc += kv[static_cast<std::size_t>(i) * r + m] * gmu[m];
            }
            ka[i] = acc;
        }

        const T w = pow(1.0 + t, -p);

        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = i1; i2 < n; ++i2) {
                T vert = zero;
                for (int m = 0; m < r; ++m)
                    vert += kv[static_cast<std::size_t>(i1) * r + m] *
                            gk[static_cast<std::size_t>(i2) * r + m];
                if (q != 0.0) vert += q * ka[i1] * ka[i2];
                h(i1, i2) = gbase(i1, i2) + w * vert;
                h(i2, i1) = h(i1, i2);
            }
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < r; ++m) {
                T e = gk[static_cast<std::size_t>(i) * r + m];
                if (q != 0.0) e += q * ka[i] * gmu[m];
                h(i, n + m) = w * e;
                h(n + m, i) = h(i, n + m);
            }
        for (int m = 0; m < r; ++m)
            for (int l = m; l < r; ++l) {
                T e = gram(m, l);
                if (q != 0.0) e += q * gmu[m] * gmu[l];
                h(n + m, n + l) = w * e;
                h(n + l, n + m) = h(n + m, n + l);
            }
    };
    std::function<bool(std::span<const double>)> dom;
    if (bundle.in_domain)
        dom = [b = bundle, n](std::span<const double> z) { return b.in_domain(z.first(n)); };
    return make_metric_field(n + r, f, dom);
}

MetricField fiber_metric_field(const EuclideanBundle& bundle, const CGParams& params,
                               std::span<const double> x0) {
    if (!bundle.admissible(x0)) throw DomainError("fiber base point outside the chart domain");
    MatD g0;
    bundle.gram(x0, g0);
    const int r = bundle.r;
    const double p = params.p, q = params.q;
    auto f = [g0, r, p, q](auto mu, auto& h) {
        using T = std::remove_cvref_t<decltype(mu[0])>;
        using std::pow;
        const T zero = zero_like(mu[0]);
        std::vector<T> gmu(r, zero);
        T t = zero;
        for (int m = 0; m < r; ++m) {
            T acc = zero;
            for (int l = 0; l < r; ++l) acc += g0(m, l) * mu[l];
            gmu[m] = acc;
            t += mu[m] * acc;
        }
        const T w = pow(1.0 + t, -p);
        for (int m = 0; m < r; ++m)
            for (int l = m; l < r; ++l) {
                T e = zero + g0(m, l);
                if (q != 0.0) e += q * gmu[m] * gmu[l];
                h(m, l) = w * e;
                h(l, m) = h(m, l);
            }
    };
    return make_metric_field(r, f);
}

EuclideanBundle build_tangent_bundle(const SpaceForm& sf) {
    const int n = sf.n;
    const double c = sf.c;
    auto base = [n, c](auto x, auto& g) {
        auto lam = conformal_lambda(c, n, x);
        auto l2 = lam * lam;
        for (int i = 0; i < n; ++i) g(i, i) = l2;
    };
    auto gram = [n](auto x, auto& g) {
        for (int j = 0; j < n; ++j) g(j, j) = zero_like(x[0]) + 1.0;
    };
    // frame rotation coefficients of e_j = lambda^{-1} d_j:
    // Gamma^l_ij = delta_li phi_j - delta_ij phi_l, phi_j = d_j log(lambda)
    auto conn = [n, c](auto x, auto& ga) {
        using T = std::remove_cvref_t<decltype(x[0])>;
        auto lam = conformal_lambda(c, n, x);
        std::vector<T> phi;
        phi.reserve(n);
        for (int j = 0; j < n; ++j) phi.push_back((-0.5 * c) * x[j] * lam);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) ga(i, j, i) += phi[j];
            for (int l = 0; l < n; ++l) ga(i, i, l) -= phi[l];
        }
    };
    EuclideanBundle b = make_bundle(n, n, base, gram, conn);
    b.in_domain = [sf](std::span<const double> x) { return sf.in_domain(x); };
    b.frame = [sf](std::span<const double> x, MatD& e) { e = orthonormal_frame(sf, x); };
    b.base_scalar = [sf](std::span<const double>) { return sf.scalar_curvature(); };
    b.base_space_form = sf;
    return b;
}

EuclideanBundle build_atiyah_bundle(const SpaceForm& sf, const AtiyahParams& params) {
    const int n = sf.n;
    const double c = sf.c;
    const double k = params.k;
    const int nso = so_dim(n);
    const int r = n + nso;
    const double s2k = std::sqrt(2.0 * k);

    auto base = [n, c](auto x, auto& g) {
        auto lam = conformal_lambda(c, n, x);
        auto l2 = lam * lam;
        for (int i = 0; i < n; ++i) g(i, i) = l2;
    };
    auto gram = [r](auto x, auto& g) {
        for (int j = 0; j < r; ++j) g(j, j) = zero_like(x[0]) + 1.0;
    };
    // Four blocks of nabla^A in the frame {e_i} ∪ {(2k)^{-1/2} e_a∧e_b}:
    //   TM->TM  frame rotation coefficients of nabla^M
    //   TM->so  -1/2 R^M(d_i, e_j) = (c/2) lambda e_i∧e_j
    //   so->TM  H_{d_i} F = c k lambda F(e_i)
    //   so->so  commutator with the rotation form, [omega_i, F]
    auto conn = [n, c, k, nso, s2k](auto x, auto& ga) {
        using T = std::remove_cvref_t<decltype(x[0])>;
        auto lam = conformal_lambda(c, n, x);
        const T zero = zero_like(x[0]);
        std::vector<T> phi;
        phi.reserve(n);
        for (int j = 0; j < n; ++j) phi.push_back((-0.5 * c) * x[j] * lam);
        // omega_i as a matrix: w_i(row,col) = delta_{row,i} phi_col - delta_{i,col} phi_row
        auto rot = [&](int i, int row, int col) {
            T v = zero;
            if (row == i) v += phi[col];
            if (col == i) v -= phi[row];
            return v;
        };

        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) ga(i, i, l) -= phi[l];
            for (int j = 0; j < n; ++j) {
                ga(i, j, i) += phi[j];
                if (i != j) {
                    const int a = std::min(i, j), b = std::max(i, j);
                    const double sgn = (i < j) ? 1.0 : -1.0;
                    ga(i, j, n + so_index(a, b, n)) += (0.5 * c * s2k * sgn) * lam;
                }
            }
            for (int idx = 0; idx < nso; ++idx) {
                const auto [a, b] = so_pair(idx, n);
                const int m = n + idx;
                if (i == b) ga(i, m, a) += (c * k / s2k) * lam;
                if (i == a) ga(i, m, b) -= (c * k / s2k) * lam;
                for (int idx2 = 0; idx2 < nso; ++idx2) {
                    const auto [a2, b2] = so_pair(idx2, n);
                    // [omega_i, E_ab] entry (a2,b2)
                    T v = zero;
                    if (b2 == b) v += rot(i, a2, a);
                    if (b2 == a) v -= rot(i, a2, b);
                    if (a2 == a) v -= rot(i, b, b2);
                    if (a2 == b) v += rot(i, a, b2);
                    ga(i, m, n + idx2) = v;
                }
            }
        }
    };

    EuclideanBundle b = make_bundle(n, r, base, gram, conn);
    b.in_domain = [sf](std::span<const double> x) { return sf.in_domain(x); };
    b.frame = [sf](std::span<const double> x, MatD& e) { e = orthonormal_frame(sf, x); };
    b.base_scalar = [sf](std::span<const double>) { return sf.scalar_curvature(); };
    b.base_space_form = sf;
    b.atiyah_k = k;
    return b;
}

EuclideanBundle build_flat_bundle(int n, int r) {
    auto base = [n](auto x, auto& g) {
        for (int i = 0; i < n; ++i) g(i, i) = zero_like(x[0]) + 1.0;
    };
    auto gram = [r](auto x, auto& g) {
        for (int j = 0; j < r; ++j) g(j, j) = zero_like(x[0]) + 1.0;
    };
    auto conn = [](auto, auto&) {};
    EuclideanBundle b = make_bundle(n, r, base, gram, conn);
    b.frame = [n](std::span<const double>, MatD& e) {
        e = MatD(n, n, 0.0);
        for (int i = 0; i < n; ++i) e(i, i) = 1.0;
    };
    b.base_scalar = [](std::span<const double>) { return 0.0; };
    return b;
}

Ten4D conn_curvature(const EuclideanBundle& bundle, std::span<const double> x) {
    if (!bundle.admissible(x)) throw DomainError("point outside the chart domain");
    const int n = bundle.n, r = bundle.r;
    std::vector<Jet2> xj;
    xj.reserve(n);
    for (int i = 0; i < n; ++i) xj.push_back(Jet2::variable(n, i, x[i]));
    Ten3<Jet2> gj;
    bundle.conn_jet(xj, gj);

    Ten4D out(n, n, r, r, 0.0);
    for (int i = 0; i < n; ++i)
        for (int m = i + 1; m < n; ++m)
            for (int j = 0; j < r; ++j)
                for (int l = 0; l < r; ++l) {
                    double s = gj(m, j, l).d(i) - gj(i, j, l).d(m);
                    for (int mm = 0; mm < r; ++mm)
                        s += gj(m, j, mm).value() * gj(i, mm, l).value() -
                             gj(i, j, mm).value() * gj(m, mm, l).value();
                    out(i, m, j, l) = -s;  // R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y]
                    out(m, i, j, l) = s;
                }
    return out;
}

std::vector<double> oneill_b(const EuclideanBundle& bundle, const TotalSpacePoint& pt,
                             std::span<const double> u, std::span<const double> v) {
    const Ten4D rc = conn_curvature(bundle, pt.x);
    const int n = bundle.n, r = bundle.r;
    std::vector<double> out(r, 0.0);
    for (int l = 0; l < r; ++l) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m) {
                if (u[i] == 0.0 || v[m] == 0.0) continue;
                double rj = 0.0;
                for (int j = 0; j < r; ++j) rj += rc(i, m, j, l) * pt.mu[j];
                s += u[i] * v[m] * rj;
            }
        out[l] = 0.5 * s;
    }
    return out;
}

double xi_form(const EuclideanBundle& bundle, std::span<const double> x,
               std::span<const double> a, std::span<const double> b) {
    const int n = bundle.n, r = bundle.r;
    const Ten4D rc = conn_curvature(bundle, x);
    MatD frame;
    bundle.frame(x, frame);
    MatD gram;
    bundle.gram(x, gram);

    double xi = 0.0;
    std::vector<double> ra(r), rb(r);
    for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
            if (i2 == j2) continue;
            // R(e_{i2}, e_{j2}) applied to a and b
            for (int l = 0; l < r; ++l) {
                double sa = 0.0, sb = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int m = 0; m < n; ++m) {
                        const double w = frame(i, i2) * frame(m, j2);
                        if (w == 0.0) continue;
                        double rja = 0.0, rjb = 0.0;
                        for (int j = 0; j < r; ++j) {
                            rja += rc(i, m, j, l) * a[j];
                            rjb += rc(i, m, j, l) * b[j];
                        }
                        sa += w * rja;
                        sb += w * rjb;
                    }
                ra[l] = sa;
                rb[l] = sb;
            }
            for (int m = 0; m < r; ++m)
                for (int l = 0; l < r; ++l) xi += ra[m] * gram(m, l) * rb[l];
        }
    return xi;
}

AtiyahCurvatureValue principal_curvature_atiyah(const SpaceForm& sf, const AtiyahParams& params,
                                                std::span<const double> u, std::span<const double> v,
                                                std::span<const double> z,
                                                const SkewEndomorphism& f) {
    const double w = 0.25 * sf.c * (2.0 - sf.c * params.k);
    const SkewEndomorphism uv = wedge(u, v);
    AtiyahCurvatureValue out;
    out.tm = uv.apply(z);
    for (auto& e : out.tm) e *= -2.0 * w;
    out.so = commutator(uv, f);
    for (int i = 0; i < out.so.n(); ++i)
        for (int j = 0; j < out.so.n(); ++j) out.so.entry(i, j) *= -2.0 * w;
    return out;
}

std::vector<double> atiyah_fiber_coords(std::span<const double> z, const SkewEndomorphism& f,
                                        double k) {
    const int n = static_cast<int>(z.size());
    const double s2k = std::sqrt(2.0 * k);
    std::vector<double> mu(z.begin(), z.end());
    mu.resize(n + so_dim(n), 0.0);
    for (int idx = 0; idx < so_dim(n); ++idx) {
        const auto [a, b] = so_pair(idx, n);
        mu[n + idx] = s2k * f(a, b);
    }
    return mu;
}

void atiyah_split(std::span<const double> mu, int n, double k, std::vector<double>& z,
                  SkewEndomorphism& f) {
    const double s2k = std::sqrt(2.0 * k);
    z.assign(mu.begin(), mu.begin() + n);
    f = SkewEndomorphism(n);
    for (int idx = 0; idx < so_dim(n); ++idx) {
        const auto [a, b] = so_pair(idx, n);
        f.entry(a, b) = mu[n + idx] / s2k;
        f.entry(b, a) = -f(a, b);
    }
}

} // namespace cglab
