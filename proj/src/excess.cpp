#include "seglab/excess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "seglab/error.hpp"
#include "seglab/quadrature.hpp"

namespace seglab {

Vec2 best_fit_vector(const ScalarField& w, Vec2 center, double r) {
    const Domain& d = w.domain();
    const double area = std::numbers::pi * r * r;
    const double gx = disk_integral(d, [&](Vec2 p) { return gradient_at(w, p).x; }, center, r);
    const double gy = disk_integral(d, [&](Vec2 p) { return gradient_at(w, p).y; }, center, r);
    return {gx / area, gy / area};
}

double excess(const ScalarField& w, Vec2 center, double r, Vec2 e) {
    const double total = disk_integral(w.domain(), [&](Vec2 p) {
        const Vec2 g = gradient_at(w, p) - e;
        return dot(g, g);
    }, center, r);
    return total / (r * r);
}

double ExcessSequence::alpha() const { return std::log(2.0) / std::abs(std::log(theta)); }

double ExcessSequence::r_beta_ratio() const {
    if (!r_beta_estimate || !(beta > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return *r_beta_estimate / std::pow(beta, -0.25);
}

double ExcessSequence::max_drift() const {
    return drift.empty() ? 0.0 : *std::max_element(drift.begin(), drift.end());
}

ExcessSequence dyadic_excess_sequence(const ScalarField& w, Vec2 center, double theta, std::size_t kmax, double beta,
                                      double base_radius) {
    if (!(theta > 0.0 && theta < 0.5)) throw Error(ErrorCode::InvalidArgument, "theta must lie in (0, 1/2)");
    if (!(base_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "base radius must be positive");
    const double smallest = base_radius * std::pow(theta, static_cast<double>(kmax));
    if (smallest < 2.0 * w.domain().h())
        throw Error(ErrorCode::ScaleBelowResolution,
                    "theta^kmax scale " + std::to_string(smallest) + " is below 2h = " + std::to_string(2.0 * w.domain().h()));

    ExcessSequence seq;
    seq.center = center;
    seq.theta = theta;
    seq.base_radius = base_radius;
    seq.beta = beta;
    double r = base_radius;
    for (std::size_t k = 0; k <= kmax; ++k, r *= theta) {
        const Vec2 e = best_fit_vector(w, center, r);
        seq.scales.push_back(r);
        seq.e.push_back(e);
        seq.E.push_back(excess(w, center, r, e));
        seq.drift.push_back(k == 0 ? 0.0 : norm(e - seq.e[k - 1]) * std::pow(2.0, 0.5 * static_cast<double>(k)));
    }

    // Excess values below this floor are quadrature noise of an exactly linear w.
    const double floor = 1e-12 * std::max(1.0, dot(seq.e.front(), seq.e.front()));
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (seq.E[k] > floor && seq.E[k] > 0.75 * seq.E[k - 1]) {
            seq.r_beta_estimate = seq.scales[k];
            break;
        }
    }
    return seq;
}

}  // namespace seglab
