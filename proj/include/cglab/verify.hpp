#pragma once
// Closed-form vs oracle verification cases.  Each case pits a family of
// closed formulas against an independent computation (the coordinate
// curvature oracle, the connection-coefficient curvature, or a finite
// difference) and reports the worst error.
#include <cstdint>
#include <string>
#include <vector>

namespace cglab {

struct VerifyOptions {
    int n = 2;
    double c = 1.0;
    double k = 1.0;
    int samples = 5;
    std::uint64_t seed = 20260811;
    double tol = 0.0;  // 0: case default
};

struct VerificationReport {
    std::string case_name;
    int samples = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;  // |err| / max(1, |reference|)
    double tolerance = 0.0;
    bool pass = false;         // max_rel_err <= tolerance (plus case-specific witnesses)
};

// Cases: "fiber", "sasaki-flat", "tm-sphere", "atiyah", "principal",
// "derivative".  Unknown names throw std::invalid_argument.
VerificationReport verify_case(const std::string& name, const VerifyOptions& options = {});

std::vector<std::string> verify_case_names();

} // namespace cglab
