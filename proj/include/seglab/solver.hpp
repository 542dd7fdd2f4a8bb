#pragma once

#include <string>
#include <vector>

#include "seglab/boundary.hpp"
#include "seglab/field.hpp"

namespace seglab {

struct SolveConfig {
    double beta = 0.0;
    double tol = 1e-10;                  // max residual, field value / length^2
    std::size_t max_iters = 2'000'000;   // sweeps
    std::size_t report_every = 100;
    double omega = 0.0;                  // over-relaxation; 0 picks the Laplacian optimum for the grid
};

struct ResidualSample {
    std::size_t iteration = 0;
    double residual = 0.0;
};

struct SolveReport {
    std::size_t iterations = 0;
    double residual = 0.0;
    double max_update = 0.0;
    double wall_seconds = 0.0;
    bool converged = false;
    bool under_resolved = false;
    double omega = 1.0;
    // Both normalizations in use for u_beta: sup of the species sum, and the ratio of
    // int_{dB_r} (u_1^2 + u_2^2) to int_{dB_r} x_2^2 on the widest circle about the center (r <= 1).
    double sup_sum = 0.0;
    double l2_ratio = 0.0;
    double l2_radius = 0.0;
    std::vector<ResidualSample> history;

    /// Flat key=value block. Wall time is left out so the text is reproducible.
    std::string to_text() const;
};

struct SolveResult {
    MultiField field;
    SolveReport report;
};

enum class InitialGuess {
    LimitPair,  // (w^+, w^-, 0, ...) from the closed-form limit, else Blend
    Blend,      // transfinite blend of the boundary traces
};

/// Red-black projected nonlinear SOR for Delta u_i = beta u_i sum_{j != i} u_j^2 with Dirichlet data.
/// Never throws on non-convergence: the last iterate comes back with converged = false.
SolveResult solve_system(const Domain& domain, const BoundaryData& bd, const SolveConfig& cfg,
                         InitialGuess guess = InitialGuess::LimitPair);

/// Same, starting from `initial` (boundary nodes are overwritten by the traces).
SolveResult solve_system(const Domain& domain, const BoundaryData& bd, const SolveConfig& cfg,
                         const MultiField& initial);

}  // namespace seglab
