#include "cglab/rigidity.hpp"

#include <cmath>
#include <stdexcept>

#include "cglab/closed_forms.hpp"
#include "cglab/oracle.hpp"
#include "cglab/rng.hpp"

namespace cglab {

RigidityVerdict classify_fiber_constancy(const CGParams& params, int r) {
    if (r < 2) throw std::invalid_argument("fiber constancy classification needs r >= 2");
    RigidityVerdict v;
    if (params.p == 0.0 && params.q == 0.0) {
        v.fiber_case = FiberCase::sasaki_flat_pair;
        v.fiber_scalar_value = 0.0;
        v.scalar_offset = 0.0;
        return v;
    }
    if (params.p == 2.0 && params.q == 0.0) {
        v.fiber_case = FiberCase::stereographic_pair;
        v.fiber_scalar_value = 4.0 * r * (r - 1.0);
        v.scalar_offset = 4.0 * r * (r - 1.0);
        return v;
    }
    v.fiber_case = FiberCase::nonconstant;
    const double f0 = fiber_scalar(params, r, 0.0);
    for (int t2 = 1; t2 <= 64; ++t2) {
        const double f2 = fiber_scalar(params, r, t2);
        if (std::abs(f2 - f0) > 1e-9) {
            v.witness = FiberWitness{0.0, f0, static_cast<double>(t2), f2};
            break;
        }
    }
    return v;
}

ScalarRigidityVerdict scalar_rigidity(const CGParams& params, int r, bool flat_connection,
                                      bool constant_base_scalar) {
    const RigidityVerdict fiber = classify_fiber_constancy(params, r);
    ScalarRigidityVerdict out;
    out.constant_scalar =
        flat_connection && constant_base_scalar && fiber.fiber_case != FiberCase::nonconstant;
    if (out.constant_scalar) out.offset = fiber.scalar_offset;
    return out;
}

StructureReport classify_special_structures(const CGParams& params, int r, bool flat_connection,
                                            BaseProperty base) {
    const bool sasaki = params.p == 0.0 && params.q == 0.0;
    const bool stereo = params.p == 2.0 && params.q == 0.0;
    StructureReport rep;
    if (!flat_connection) return rep;

    // a flat base satisfies the weaker properties too
    const bool base_ricci_flat = base == BaseProperty::ricci_flat || base == BaseProperty::flat;
    const bool base_loc_sym = base == BaseProperty::locally_symmetric ||
                              base == BaseProperty::flat;

    if (sasaki && base_ricci_flat) rep.einstein_constant = 0.0;
    if (stereo && base == BaseProperty::einstein_4r1) rep.einstein_constant = 4.0 * (r - 1.0);
    rep.locally_symmetric = (sasaki || stereo) && base_loc_sym;
    rep.flat = sasaki && base == BaseProperty::flat;
    rep.constant_sectional = rep.flat;  // constant sectional curvature forces flatness
    return rep;
}

PrincipalIdentityReport vanishing_principal_checks(const SpaceForm& sf, int points,
                                                   std::uint64_t seed) {
    if (!(sf.c > 0.0))
        throw std::invalid_argument("vanishing principal curvature needs c > 0 (k = 2/c)");
    const double k = 2.0 / sf.c;
    const EuclideanBundle bundle = build_atiyah_bundle(sf, AtiyahParams(k));
    const MetricField base_field = sf.metric_field();
    const int n = sf.n, nso = so_dim(n);

    PrincipalIdentityReport rep;
    rep.expected_scalar = sf.scalar_curvature();
    Rng rng(seed);
    for (int s = 0; s < points; ++s) {
        const std::vector<double> x = rng.ball(n, 1.0);

        const Ten4D rc = conn_curvature(bundle, x);
        rep.max_abs_curvature = std::max(rep.max_abs_curvature, max_abs(rc));

        // H_{e_j} e_i is the so-part of nabla^A_{e_j} e_i; frame scale is
        // 1/lambda per contracted coordinate direction.
        const double inv_lam = 1.0 / sf.lambda(x);
        Ten3D ga;
        bundle.conn(x, ga);
        const CurvatureReport base = curvature_report(base_field, x, Convention::reversed);

        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            double row = 0.0;
            for (int i = 0; i < n; ++i) {
                double hsq = 0.0;
                for (int m = 0; m < nso; ++m) {
                    const double comp = inv_lam * ga(j, i, n + m);
                    hsq += comp * comp;
                }
                row += hsq;
            }
            const double ric_jj = inv_lam * inv_lam * base.ricci(j, j);
            rep.max_ricci_err = std::max(rep.max_ricci_err, std::abs(row - ric_jj));
            rep.max_ricci_err = std::max(rep.max_ricci_err, std::abs(row - (n - 1.0) * sf.c));
            total += row;
        }
        rep.h_norm_sq = total;
        rep.max_scalar_err = std::max(rep.max_scalar_err, std::abs(total - base.scalar));
        rep.max_scalar_err = std::max(rep.max_scalar_err, std::abs(total - rep.expected_scalar));
    }
    return rep;
}

SymmetricSpaceReport symmetric_space_report(const SpaceForm& sf, const CGParams& params,
                                            int points, std::uint64_t seed) {
    if (!(sf.c > 0.0)) throw std::invalid_argument("symmetric space report needs c > 0");
    const bool sasaki = params.p == 0.0 && params.q == 0.0;
    const bool stereo = params.p == 2.0 && params.q == 0.0;
    if (!sasaki && !stereo)
        throw std::invalid_argument("symmetric space report is for (p,q) in {(0,0),(2,0)}");

    const double k = 2.0 / sf.c;
    const EuclideanBundle bundle = build_atiyah_bundle(sf, AtiyahParams(k));
    const int r = bundle.r;
    const MetricField field = cg_metric_field(bundle, params);

    SymmetricSpaceReport rep;
    rep.predicted_scalar = sf.scalar_curvature() + (stereo ? 4.0 * r * (r - 1.0) : 0.0);
    rep.einstein_c = 4.0 * (r - 1.0) / (sf.n - 1.0);
    rep.einstein_flagged = stereo && std::abs(sf.c - rep.einstein_c) < 1e-12;

    Rng rng(seed);
    const int dim = sf.n + r;
    const int planes_per_point = std::max(1, 200 / std::max(points, 1));
    double lo = 0.0, hi = 0.0, sum = 0.0;
    bool first_plane = true;
    for (int s = 0; s < points; ++s) {
        std::vector<double> z = rng.ball(sf.n, 1.0);
        const std::vector<double> mu = rng.ball(r, 1.5);
        z.insert(z.end(), mu.begin(), mu.end());
        const CurvatureReport oracle = curvature_report(field, z, Convention::reversed);
        if (s == 0) { lo = hi = oracle.scalar; }
        lo = std::min(lo, oracle.scalar);
        hi = std::max(hi, oracle.scalar);
        sum += oracle.scalar;
        rep.max_abs_err = std::max(rep.max_abs_err, std::abs(oracle.scalar - rep.predicted_scalar));

        for (int pl = 0; pl < planes_per_point; ++pl) {
            const std::vector<double> u = rng.ball(dim, 1.0);
            const std::vector<double> v = rng.ball(dim, 1.0);
            const double sec = sectional_curvature(oracle, oracle.g, u, v);
            if (first_plane) { rep.min_sectional = sec; first_plane = false; }
            rep.min_sectional = std::min(rep.min_sectional, sec);
            ++rep.sampled_planes;
        }
    }
    rep.oracle_mean = sum / points;
    rep.oracle_spread = hi - lo;
    return rep;
}

} // namespace cglab
