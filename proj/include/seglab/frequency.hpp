#pragma once

#include <vector>

#include "seglab/field.hpp"

namespace seglab {

/// Almgren quotient N(r; c) = r (int_{B_r} sum |grad u_i|^2 + beta sum_{i<j} u_i^2 u_j^2) / int_{dB_r} sum u_i^2.
double almgren_frequency(const MultiField& mf, Vec2 center, double r);

struct FrequencyProfile {
    Vec2 center;
    double beta = 0.0;
    double slack = 2e-2;
    std::vector<double> radii;
    std::vector<double> values;
    /// Indices k >= 1 with values[k] < values[k-1] * (1 - slack).
    std::vector<std::size_t> violations;

    bool monotone() const { return violations.empty(); }
    /// Largest relative drop values[k-1] -> values[k] (0 when nondecreasing).
    double worst_drop() const;
};

/// N at nsamples geometrically spaced radii in [rmin, rmax].
FrequencyProfile frequency_profile(const MultiField& mf, Vec2 center, double rmin, double rmax, std::size_t nsamples,
                                   double slack = 2e-2);

}  // namespace seglab
