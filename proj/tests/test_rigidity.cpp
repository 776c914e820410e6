#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cglab/bundle.hpp"
#include "cglab/closed_forms.hpp"
#include "cglab/oracle.hpp"
#include "cglab/rigidity.hpp"
#include "cglab/rng.hpp"

using namespace cglab;

TEST_SUITE("rigidity") {

TEST_CASE("fiber constancy classification") {
    const RigidityVerdict sasaki = classify_fiber_constancy(CGParams(0.0, 0.0), 4);
    CHECK(sasaki.fiber_case == FiberCase::sasaki_flat_pair);
    CHECK(*sasaki.fiber_scalar_value == 0.0);

    const RigidityVerdict stereo = classify_fiber_constancy(CGParams(2.0, 0.0), 3);
    CHECK(stereo.fiber_case == FiberCase::stereographic_pair);
    CHECK(*stereo.fiber_scalar_value == doctest::Approx(24.0));

    const RigidityVerdict cg = classify_fiber_constancy(CGParams(1.0, 1.0), 3);
    CHECK(cg.fiber_case == FiberCase::nonconstant);
    REQUIRE(cg.witness.has_value());
    CHECK(cg.witness->f1 == doctest::Approx(18.0));
    CHECK(std::abs(cg.witness->f2 - cg.witness->f1) > 1e-9);

    // other nonconstant parameters also produce witnesses
    for (const CGParams& params : {CGParams(1.0, 0.0), CGParams(0.0, 1.0), CGParams(-1.0, 2.0)}) {
        const RigidityVerdict v = classify_fiber_constancy(params, 2);
        CHECK(v.fiber_case == FiberCase::nonconstant);
        REQUIRE(v.witness.has_value());
        CHECK(std::abs(v.witness->f2 - v.witness->f1) > 1e-9);
    }
    CHECK_THROWS_AS(classify_fiber_constancy(CGParams(1.0, 1.0), 1), std::invalid_argument);
}

TEST_CASE("scalar rigidity predicate") {
    const ScalarRigidityVerdict a = scalar_rigidity(CGParams(0.0, 0.0), 2, true, true);
    CHECK(a.constant_scalar);
    CHECK(*a.offset == 0.0);

    const ScalarRigidityVerdict b = scalar_rigidity(CGParams(2.0, 0.0), 3, true, true);
    CHECK(b.constant_scalar);
    CHECK(*b.offset == doctest::Approx(24.0));

    CHECK_FALSE(scalar_rigidity(CGParams(1.0, 1.0), 3, true, true).constant_scalar);
    CHECK_FALSE(scalar_rigidity(CGParams(0.0, 0.0), 3, false, true).constant_scalar);
    CHECK_FALSE(scalar_rigidity(CGParams(2.0, 0.0), 3, true, false).constant_scalar);
}

TEST_CASE("special structure classification") {
    const StructureReport e0 =
        classify_special_structures(CGParams(0.0, 0.0), 4, true, BaseProperty::ricci_flat);
    CHECK(*e0.einstein_constant == 0.0);
    CHECK_FALSE(e0.flat);

    const StructureReport e1 =
        classify_special_structures(CGParams(2.0, 0.0), 4, true, BaseProperty::einstein_4r1);
    CHECK(*e1.einstein_constant == doctest::Approx(12.0));

    const StructureReport fl =
        classify_special_structures(CGParams(0.0, 0.0), 4, true, BaseProperty::flat);
    CHECK(fl.flat);
    CHECK(fl.constant_sectional);
    CHECK(fl.locally_symmetric);
    CHECK(*fl.einstein_constant == 0.0);

    // no flat connection: nothing survives
    const StructureReport none =
        classify_special_structures(CGParams(0.0, 0.0), 4, false, BaseProperty::flat);
    CHECK_FALSE(none.einstein_constant.has_value());
    CHECK_FALSE(none.locally_symmetric);

    // (1,1) is never Einstein or locally symmetric here
    const StructureReport cg =
        classify_special_structures(CGParams(1.0, 1.0), 4, true, BaseProperty::flat);
    CHECK_FALSE(cg.einstein_constant.has_value());
    CHECK_FALSE(cg.locally_symmetric);
}

TEST_CASE("vanishing principal curvature identities") {
    // S^2(1), k = 2: each |H_{e_i} e_j|^2 = 1, s^M = 2
    const PrincipalIdentityReport r2 = vanishing_principal_checks(SpaceForm(2, 1.0), 5, 2026);
    CHECK(r2.pass(1e-8));
    CHECK(r2.expected_scalar == doctest::Approx(2.0));
    CHECK(r2.h_norm_sq == doctest::Approx(2.0).epsilon(1e-10));

    // S^3(1), k = 2: s^M = 6 = |H|^2
    const PrincipalIdentityReport r3 = vanishing_principal_checks(SpaceForm(3, 1.0), 5, 2026);
    CHECK(r3.pass(1e-8));
    CHECK(r3.h_norm_sq == doctest::Approx(6.0).epsilon(1e-10));

    for (double c : {0.5, 2.0}) {
        const PrincipalIdentityReport r = vanishing_principal_checks(SpaceForm(2, c), 3, 7);
        CHECK(r.pass(1e-8));
    }

    CHECK_THROWS_AS(vanishing_principal_checks(SpaceForm(2, 0.0), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(vanishing_principal_checks(SpaceForm(2, -1.0), 3, 1), std::invalid_argument);
}

TEST_CASE("symmetric space scalars") {
    // S^2(1), (0,0): constant scalar 2
    const SymmetricSpaceReport a = symmetric_space_report(SpaceForm(2, 1.0), CGParams(0.0, 0.0), 5, 11);
    CHECK(a.predicted_scalar == doctest::Approx(2.0));
    CHECK(a.oracle_spread < 1e-6);
    CHECK(a.max_abs_err < 1e-6);
    // soft diagnostic: the claimed non-negative sectional curvature over
    // sampled planes
    CHECK(a.sampled_planes == 200);
    CHECK(a.min_sectional >= -1e-8);

    // S^2(1), (2,0), r=3: constant scalar 2 + 24 = 26
    const SymmetricSpaceReport b = symmetric_space_report(SpaceForm(2, 1.0), CGParams(2.0, 0.0), 5, 11);
    CHECK(b.predicted_scalar == doctest::Approx(26.0));
    CHECK(b.oracle_spread < 1e-6);
    CHECK(b.max_abs_err < 1e-6);
    CHECK(b.min_sectional >= -1e-8);

    // Einstein parameter: n=2, r=3 flags at c = 4(r-1)/(n-1) = 8
    CHECK(b.einstein_c == doctest::Approx(8.0));
    CHECK_FALSE(b.einstein_flagged);
    const SymmetricSpaceReport e = symmetric_space_report(SpaceForm(2, 8.0), CGParams(2.0, 0.0), 2, 11);
    CHECK(e.einstein_flagged);

    CHECK_THROWS_AS(symmetric_space_report(SpaceForm(2, 1.0), CGParams(1.0, 1.0), 3, 1),
                    std::invalid_argument);
}

// Rigidity at the level of sampled constancy: the two rigid pairs give a
// constant oracle scalar on a flat bundle, (1,1) does not.
TEST_CASE("sampled scalar constancy on flat bundles") {
    const EuclideanBundle flat = build_flat_bundle(2, 2);
    Rng rng(2029);
    std::vector<TotalSpacePoint> pts;
    for (int i = 0; i < 10; ++i) pts.push_back({rng.ball(2, 1.0), rng.ball(2, 1.5)});

    auto spread = [&](const CGParams& params) {
        const MetricField field = cg_metric_field(flat, params);
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (const auto& pt : pts) {
            std::vector<double> z = pt.x;
            z.insert(z.end(), pt.mu.begin(), pt.mu.end());
            const double s = curvature_report(field, z, Convention::reversed).scalar;
            if (first) { lo = hi = s; first = false; }
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return std::pair<double, double>(lo, hi);
    };

    const auto [lo00, hi00] = spread(CGParams(0.0, 0.0));
    CHECK(hi00 - lo00 < 1e-8);
    CHECK(std::abs(hi00) < 1e-10);

    const auto [lo20, hi20] = spread(CGParams(2.0, 0.0));
    CHECK(hi20 - lo20 < 1e-8);
    CHECK(hi20 == doctest::Approx(8.0).epsilon(1e-9));  // 4r(r-1), r=2

    const auto [lo11, hi11] = spread(CGParams(1.0, 1.0));
    CHECK(hi11 - lo11 > 1e-3);
}

} // TEST_SUITE
