#pragma once

#include <string>
#include <vector>

namespace seglab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    // Multiplies every quadrature weight in the quadrature checks; 1 leaves them correct.
    double quadrature_weight_scale = 1.0;
};

/// Fast invariant suite: quadrature oracles, homogeneous-pair frequencies, 1D profile
/// symmetry, exact power-law fits and snapshot round trip. Deterministic output.
std::vector<CheckResult> run_checks(const CheckOptions& options = {});

}  // namespace seglab
