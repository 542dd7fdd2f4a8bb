#pragma once

#include <string>
#include <vector>

#include "seglab/sweep.hpp"

namespace seglab {

// Pass/fail thresholds for the scaling claims checked on sweep output.
namespace thresholds {
inline constexpr double kFrequencySlack = 2e-2;
inline constexpr double kFrequencyCeiling = 1.1;
inline constexpr double kInterfaceExponentLo = -0.30;
inline constexpr double kInterfaceExponentHi = -0.20;
inline constexpr double kInterfaceR2 = 0.98;
inline constexpr double kInterfaceSpread = 2.0;
inline constexpr double kGradientFloor = 0.5;
inline constexpr double kMixedExponentCeiling = -0.125 + 0.02;
inline constexpr double kExcessLayerMultiple = 10.0;
inline constexpr double kRbetaLo = 1.0;
inline constexpr double kRbetaHi = 50.0;
inline constexpr double kDriftMultiple = 10.0;
inline constexpr double kLipschitzRelTol = 0.20;
inline constexpr double kHausdorffMultiple = 5.0;
}  // namespace thresholds

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Every claim whose measurements are present in `records`.
std::vector<ClaimResult> evaluate_claims(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits);

}  // namespace seglab
