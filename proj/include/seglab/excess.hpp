#pragma once

#include <optional>
#include <vector>

#include "seglab/field.hpp"

namespace seglab {

/// Mean of grad w over B_r(c), the minimizer of e -> int_{B_r} |grad w - e|^2.
Vec2 best_fit_vector(const ScalarField& w, Vec2 center, double r);

/// r^{-2} int_{B_r(c)} |grad w - e|^2.
double excess(const ScalarField& w, Vec2 center, double r, Vec2 e);

struct ExcessSequence {
    Vec2 center;
    double theta = 0.3;
    double base_radius = 1.0;
    double beta = 0.0;
    std::vector<double> scales;  // base_radius * theta^k
    std::vector<double> E;
    std::vector<Vec2> e;
    std::vector<double> drift;   // |e_k - e_{k-1}| 2^{k/2}, drift[0] = 0
    /// Largest scale where E_k > 0.75 E_{k-1} first happens; empty if the decay never stalls.
    std::optional<double> r_beta_estimate;

    /// Morrey exponent log 2 / |log theta|.
    double alpha() const;
    /// r_beta_estimate / beta^{-1/4}, NaN without a transition.
    double r_beta_ratio() const;
    double max_drift() const;
};

/// Excess E_k against the best-fit vector e_k at scales base_radius * theta^k, k = 0..kmax.
ExcessSequence dyadic_excess_sequence(const ScalarField& w, Vec2 center, double theta, std::size_t kmax, double beta,
                                      double base_radius = 1.0);

}  // namespace seglab
