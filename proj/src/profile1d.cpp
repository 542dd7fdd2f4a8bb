#include "seglab/profile1d.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "seglab/error.hpp"

namespace seglab {
namespace {

// Residuals of the discrete system, including the slope-ghost rows at the Neumann ends.
double max_residual(const std::vector<double>& g1, const std::vector<double>& g2, double dt) {
    const std::size_t n = g1.size();
    const double idt2 = 1.0 / (dt * dt);
    double worst = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double c = g1[k];
        const double lap = k + 1 < n ? (g1[k + 1] - c) + (g1[k - 1] - c) : 2.0 * (g1[k - 1] - c) + 2.0 * dt;
        worst = std::max(worst, std::abs(lap * idt2 - c * g2[k] * g2[k]));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double c = g2[k];
        const double lap = k > 0 ? (g2[k + 1] - c) + (g2[k - 1] - c) : 2.0 * (g2[k + 1] - c) + 2.0 * dt;
        worst = std::max(worst, std::abs(lap * idt2 - c * g1[k] * g1[k]));
    }
    return worst;
}

}  // namespace

std::pair<double, double> Profile1D::at(double s) const {
    if (s < t.front() - 1e-12 || s > t.back() + 1e-12)
        throw Error(ErrorCode::PointOutsideDomain, "profile evaluated outside [-L, L]");
    const double pos = (s - t.front()) / dt();
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::max(0.0, std::floor(pos))), t.size() - 2);
    const double f = pos - static_cast<double>(k);
    return {(1 - f) * g1[k] + f * g1[k + 1], (1 - f) * g2[k] + f * g2[k + 1]};
}

Profile1D solve_profile_1d(double half_length, std::size_t npoints, double tol, std::size_t max_iters) {
    if (!(half_length >= 5.0)) throw Error(ErrorCode::InvalidArgument, "half_length must be >= 5");
    if (npoints < 256) throw Error(ErrorCode::InvalidArgument, "npoints must be >= 256");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    const auto start = std::chrono::steady_clock::now();

    Profile1D p;
    const std::size_t n = npoints;
    const double dt = 2.0 * half_length / static_cast<double>(n - 1);
    p.t.resize(n);
    p.g1.resize(n);
    p.g2.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Symmetric node placement so that t[k] == -t[n-1-k] exactly.
        const double tk = (static_cast<double>(k) - 0.5 * static_cast<double>(n - 1)) * dt;
        p.t[k] = tk;
        p.g1[k] = std::max(tk, 0.0);
        p.g2[k] = std::max(-tk, 0.0);
    }
    p.g1[0] = 0.0;
    p.g2[n - 1] = 0.0;

    // One Dirichlet end and one Neumann end: the slowest mode has wavelength 4L.
    const double omega = 2.0 / (1.0 + std::sin(std::numbers::pi / (2.0 * static_cast<double>(n - 1))));
    p.report.omega = omega;
    const double dt2 = dt * dt;
    const double update_tol = tol * dt2;
    auto& g1 = p.g1;
    auto& g2 = p.g2;

    auto relax = [&](double& x, double left, double right, double other, double slope_term) {
        const double react = dt2 * other * other;
        const double r = (left - x) + (right - x) + slope_term - react * x;
        double next = x + omega * r / (2.0 + react);
        if (next < 0.0) next = 0.0;
        const double change = std::abs(next - x);
        x = next;
        return change;
    };

    // The truncated problem pins translations only through exponentially small end values, so
    // the iteration runs on g1 alone with g2(t) = g1(-t) imposed; the residual check below still
    // covers both equations.
    auto mirror = [&] {
        for (std::size_t k = 0; k < n; ++k) g2[k] = g1[n - 1 - k];
    };
    for (std::size_t it = 1; it <= max_iters; ++it) {
        double worst = 0.0;
        for (std::size_t color = 0; color < 2; ++color)
            for (std::size_t k = 2 - color; k < n; k += 2) {
                const double other = g1[n - 1 - k];
                if (k + 1 < n)
                    worst = std::max(worst, relax(g1[k], g1[k - 1], g1[k + 1], other, 0.0));
                else
                    worst = std::max(worst, relax(g1[k], g1[k - 1], g1[k - 1], other, 2.0 * dt));
            }
        p.report.iterations = it;
        p.report.max_update = worst;
        if (worst < update_tol) {
            mirror();
            p.report.residual = max_residual(g1, g2, dt);
            if (p.report.residual < tol) {
                p.report.converged = true;
                break;
            }
        }
    }
    mirror();
    p.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!p.report.converged)
        throw Error(ErrorCode::MaxIterationsExceeded,
                    "1D profile did not reach tol " + std::to_string(tol) + " in " + std::to_string(max_iters) + " sweeps");
    return p;
}

}  // namespace seglab
