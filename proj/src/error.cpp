#include "seglab/error.hpp"

namespace seglab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::PointOutsideDomain: return "point-outside-domain";
        case ErrorCode::DiskOverflow: return "disk-overflows-domain";
        case ErrorCode::RegionOutsideDomain: return "region-outside-domain";
        case ErrorCode::RescaledWindowOverflow: return "rescaled-window-overflows-domain";
        case ErrorCode::InvalidParams: return "invalid-params";
        case ErrorCode::NegativeBoundaryData: return "negative-boundary-data";
        case ErrorCode::MaxIterationsExceeded: return "max-iterations-exceeded";
        case ErrorCode::DegenerateField: return "degenerate-field";
        case ErrorCode::ScaleBelowResolution: return "scale-below-resolution";
        case ErrorCode::NoInterface: return "no-interface";
        case ErrorCode::NonGraphCurve: return "non-graph-curve";
        case ErrorCode::OnlyTwoSpecies: return "only-two-species";
        case ErrorCode::NonpositiveValue: return "nonpositive-value";
        case ErrorCode::TooFewPoints: return "too-few-points";
        case ErrorCode::PlanInvalid: return "plan-invalid";
        case ErrorCode::ConfigParse: return "config-parse-error";
        case ErrorCode::SnapshotParse: return "snapshot-parse-error";
        case ErrorCode::Io: return "io-failure";
    }
    return "unknown";
}

}  // namespace seglab
