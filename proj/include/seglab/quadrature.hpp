#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "seglab/error.hpp"
#include "seglab/field.hpp"
#include "seglab/stencil.hpp"

namespace seglab {

/// Polar sampling rule for B_r and its boundary circle.
struct PolarRule {
    std::size_t n_theta = 64;
    std::size_t n_rho = 16;
    double weight_scale = 1.0;  // 1 for a correct rule; anything else is fault injection

    static PolarRule for_radius(double r, double h) {
        PolarRule rule;
        rule.n_theta = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi * r / h)));
        rule.n_rho = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(r / h)));
        return rule;
    }
};

namespace detail {
void require_disk(const Domain& d, Vec2 c, double r);
}

/// Midpoint rule in rho and theta over B_r(c); integrand is a callable Vec2 -> double.
template <class F>
double disk_integral(const Domain& d, F&& f, Vec2 c, double r, PolarRule rule) {
    detail::require_disk(d, c, r);
    const double drho = r / static_cast<double>(rule.n_rho);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(rule.n_theta);
    double total = 0.0;
    for (std::size_t k = 0; k < rule.n_rho; ++k) {
        const double rho = (static_cast<double>(k) + 0.5) * drho;
        double ring = 0.0;
        for (std::size_t l = 0; l < rule.n_theta; ++l) {
            const double t = (static_cast<double>(l) + 0.5) * dtheta;
            ring += f(Vec2{c.x + rho * std::cos(t), c.y + rho * std::sin(t)});
        }
        total += ring * rho;
    }
    return total * drho * dtheta * rule.weight_scale;
}

template <class F>
double disk_integral(const Domain& d, F&& f, Vec2 c, double r) {
    return disk_integral(d, std::forward<F>(f), c, r, PolarRule::for_radius(r, d.h()));
}

/// Trapezoid rule in theta over the circle of radius r about c (arc-length measure).
template <class F>
double circle_integral(const Domain& d, F&& f, Vec2 c, double r, PolarRule rule) {
    detail::require_disk(d, c, r);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(rule.n_theta);
    double total = 0.0;
    for (std::size_t l = 0; l < rule.n_theta; ++l) {
        const double t = static_cast<double>(l) * dtheta;
        total += f(Vec2{c.x + r * std::cos(t), c.y + r * std::sin(t)});
    }
    return total * r * dtheta * rule.weight_scale;
}

template <class F>
double circle_integral(const Domain& d, F&& f, Vec2 c, double r) {
    return circle_integral(d, std::forward<F>(f), c, r, PolarRule::for_radius(r, d.h()));
}

inline double disk_integral(const ScalarField& f, Vec2 c, double r, PolarRule rule) {
    return disk_integral(f.domain(), [&](Vec2 p) { return sample(f, p); }, c, r, rule);
}

inline double circle_integral(const ScalarField& f, Vec2 c, double r, PolarRule rule) {
    return circle_integral(f.domain(), [&](Vec2 p) { return sample(f, p); }, c, r, rule);
}

inline double disk_integral(const ScalarField& f, Vec2 c, double r) {
    return disk_integral(f.domain(), [&](Vec2 p) { return sample(f, p); }, c, r);
}

inline double circle_integral(const ScalarField& f, Vec2 c, double r) {
    return circle_integral(f.domain(), [&](Vec2 p) { return sample(f, p); }, c, r);
}

}  // namespace seglab
