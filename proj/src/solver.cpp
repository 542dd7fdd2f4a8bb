#include "seglab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "seglab/error.hpp"
#include "seglab/quadrature.hpp"

namespace seglab {
namespace {

double auto_omega(std::size_t nx, std::size_t ny) {
    const double rho = 0.5 * (std::cos(std::numbers::pi / static_cast<double>(nx - 1)) +
                              std::cos(std::numbers::pi / static_cast<double>(ny - 1)));
    return 2.0 / (1.0 + std::sqrt(1.0 - rho * rho));
}

void apply_boundary(MultiField& mf, const BoundaryData& bd) {
    const Domain& d = mf.domain();
    for (std::size_t s = 0; s < mf.nspecies(); ++s) {
        ScalarField& u = mf.species(s);
        for (std::size_t j = 0; j < d.ny(); ++j)
            for (std::size_t i = 0; i < d.nx(); ++i) {
                if (!d.on_boundary(i, j)) continue;
                const double v = bd.trace(s, d.point(i, j));
                if (!std::isfinite(v) || v < 0.0)
                    throw Error(ErrorCode::NegativeBoundaryData, "boundary value of species " + std::to_string(s + 1) +
                                                                     " at node (" + std::to_string(i) + ", " +
                                                                     std::to_string(j) + ") is negative or not finite");
                u(i, j) = v;
            }
    }
}

// Coons patch of the boundary traces, clipped at zero.
void blend_interior(ScalarField& u) {
    const Domain& d = u.domain();
    const std::size_t nx = d.nx(), ny = d.ny();
    const double c00 = u(0, 0), c10 = u(nx - 1, 0), c01 = u(0, ny - 1), c11 = u(nx - 1, ny - 1);
    for (std::size_t j = 1; j + 1 < ny; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(ny - 1);
        for (std::size_t i = 1; i + 1 < nx; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(nx - 1);
            const double v = (1 - s) * u(0, j) + s * u(nx - 1, j) + (1 - t) * u(i, 0) + t * u(i, ny - 1) -
                             ((1 - s) * (1 - t) * c00 + s * (1 - t) * c10 + (1 - s) * t * c01 + s * t * c11);
            u(i, j) = std::max(v, 0.0);
        }
    }
}

double max_residual(const MultiField& mf, const std::vector<const double*>& u) {
    const Domain& d = mf.domain();
    const std::size_t nx = d.nx(), ny = d.ny(), ns = u.size();
    const double ih2 = 1.0 / (d.h() * d.h());
    const double beta = mf.beta();
    double worst = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
        const double* us = u[s];
        for (std::size_t j = 1; j + 1 < ny; ++j)
            for (std::size_t i = 1; i + 1 < nx; ++i) {
                const std::size_t k = j * nx + i;
                const double c = us[k];
                double v = 0.0;
                for (std::size_t t = 0; t < ns; ++t)
                    if (t != s) v += u[t][k] * u[t][k];
                const double lap = ((us[k + 1] - c) + (us[k - 1] - c) + (us[k + nx] - c) + (us[k - nx] - c)) * ih2;
                worst = std::max(worst, std::abs(lap - beta * c * v));
            }
    }
    return worst;
}

// One red-black sweep over every species; returns the largest applied change.
double sweep(std::vector<double*>& u, std::size_t nx, std::size_t ny, double h2beta, double omega) {
    const std::size_t ns = u.size();
    double worst = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
        double* us = u[s];
        for (std::size_t color = 0; color < 2; ++color) {
            for (std::size_t j = 1; j + 1 < ny; ++j) {
                const std::size_t i0 = 1 + ((j + 1 + color) & 1);
                for (std::size_t i = i0; i + 1 < nx; i += 2) {
                    const std::size_t k = j * nx + i;
                    double v = 0.0;
                    for (std::size_t t = 0; t < ns; ++t)
                        if (t != s) v += u[t][k] * u[t][k];
                    const double c = us[k];
                    const double react = h2beta * v;
                    const double r = (us[k + 1] - c) + (us[k - 1] - c) + (us[k + nx] - c) + (us[k - nx] - c) - react * c;
                    double next = c + omega * r / (4.0 + react);
                    if (next < 0.0) next = 0.0;
                    worst = std::max(worst, std::abs(next - c));
                    us[k] = next;
                }
            }
        }
    }
    return worst;
}

void record_normalizations(const MultiField& mf, SolveReport& rep) {
    rep.sup_sum = mf.sup_sum();
    const Domain& d = mf.domain();
    const Vec2 c = d.center();
    const double fit = std::min({c.x - d.x0(), d.x1() - c.x, c.y - d.y0(), d.y1() - c.y}) - d.h();
    const double r = std::min(1.0, fit);
    rep.l2_radius = r;
    if (r <= d.h()) return;
    const auto& u1 = mf.species(0);
    const auto& u2 = mf.species(1);
    const double mass = circle_integral(d, [&](Vec2 p) {
        const double a = sample(u1, p), b = sample(u2, p);
        return a * a + b * b;
    }, c, r);
    rep.l2_ratio = mass / (std::numbers::pi * r * r * r);
}

SolveResult run(MultiField mf, const SolveConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const Domain& d = mf.domain();
    SolveReport rep;
    rep.omega = cfg.omega > 0.0 ? cfg.omega : auto_omega(d.nx(), d.ny());
    rep.under_resolved = cfg.beta > 0.0 && std::pow(cfg.beta, -0.25) < 4.0 * d.h();

    std::vector<double*> u;
    std::vector<const double*> cu;
    for (std::size_t s = 0; s < mf.nspecies(); ++s) {
        u.push_back(mf.species(s).values().data());
        cu.push_back(u.back());
    }
    const double h2 = d.h() * d.h();
    const double h2beta = h2 * cfg.beta;
    const double update_tol = cfg.tol * h2;
    const std::size_t every = std::max<std::size_t>(1, cfg.report_every);

    for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
        rep.max_update = sweep(u, d.nx(), d.ny(), h2beta, rep.omega);
        rep.iterations = it;
        const bool sample_now = it % every == 0;
        if (sample_now || rep.max_update < update_tol) {
            rep.residual = max_residual(mf, cu);
            if (sample_now) rep.history.push_back({it, rep.residual});
            if (rep.max_update < update_tol && rep.residual < cfg.tol) {
                rep.converged = true;
                break;
            }
        }
    }
    if (!rep.converged) rep.residual = max_residual(mf, cu);
    record_normalizations(mf, rep);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(mf), std::move(rep)};
}

void check_config(const BoundaryData& bd, const SolveConfig& cfg) {
    if (!(cfg.beta >= 0.0) || !std::isfinite(cfg.beta)) throw Error(ErrorCode::InvalidArgument, "beta must be >= 0");
    if (!(cfg.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    if (cfg.max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
    if (cfg.omega < 0.0 || cfg.omega >= 2.0) throw Error(ErrorCode::InvalidArgument, "omega must lie in (0, 2)");
    if (bd.nspecies < 2 || !bd.trace) throw Error(ErrorCode::InvalidArgument, "boundary data is incomplete");
}

}  // namespace

std::string SolveReport::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "converged=" << (converged ? 1 : 0) << '\n'
       << "iterations=" << iterations << '\n'
       << "residual=" << residual << '\n'
       << "max_update=" << max_update << '\n'
       << "omega=" << omega << '\n'
       << "under_resolved=" << (under_resolved ? 1 : 0) << '\n'
       << "sup_sum=" << sup_sum << '\n'
       << "l2_ratio=" << l2_ratio << '\n'
       << "l2_radius=" << l2_radius << '\n';
    return os.str();
}

SolveResult solve_system(const Domain& domain, const BoundaryData& bd, const SolveConfig& cfg, InitialGuess guess) {
    check_config(bd, cfg);
    MultiField mf(domain, bd.nspecies, cfg.beta);
    apply_boundary(mf, bd);
    if (guess == InitialGuess::LimitPair && bd.limit_w) {
        for (std::size_t j = 1; j + 1 < domain.ny(); ++j)
            for (std::size_t i = 1; i + 1 < domain.nx(); ++i) {
                const double w = bd.limit_w(domain.point(i, j));
                mf.species(0)(i, j) = std::max(w, 0.0);
                mf.species(1)(i, j) = std::max(-w, 0.0);
            }
    } else {
        for (std::size_t s = 0; s < mf.nspecies(); ++s) blend_interior(mf.species(s));
    }
    return run(std::move(mf), cfg);
}

SolveResult solve_system(const Domain& domain, const BoundaryData& bd, const SolveConfig& cfg,
                         const MultiField& initial) {
    check_config(bd, cfg);
    if (!(initial.domain() == domain) || initial.nspecies() != bd.nspecies)
        throw Error(ErrorCode::InvalidArgument, "initial guess does not match domain/species count");
    initial.validate();
    MultiField mf(domain, bd.nspecies, cfg.beta);
    for (std::size_t s = 0; s < mf.nspecies(); ++s) mf.species(s) = initial.species(s);
    apply_boundary(mf, bd);
    return run(std::move(mf), cfg);
}

}  // namespace seglab
