#pragma once

#include <span>
#include <utility>

namespace seglab {

struct PowerLawFit {
    double exponent = 0.0;
    double intercept = 0.0;  // natural log of the prefactor
    double r2 = 0.0;
    std::size_t npoints = 0;
};

/// Unweighted least squares of log(value) against log(beta).
/// Throws TooFewPoints below 3 points and NonpositiveValue for beta or value <= 0.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace seglab
