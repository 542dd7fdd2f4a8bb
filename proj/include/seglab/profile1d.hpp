#pragma once

#include <vector>

#include "seglab/solver.hpp"

namespace seglab {

/// Symmetric entire solution of g1'' = g1 g2^2, g2'' = g2 g1^2 on [-L, L], normalized by
/// unit slope at the far ends: g1(-L) = 0, g1'(L) = 1, g2(L) = 0, g2'(-L) = -1.
struct Profile1D {
    std::vector<double> t;
    std::vector<double> g1;
    std::vector<double> g2;
    SolveReport report;

    double dt() const { return t[1] - t[0]; }
    /// Linear interpolation of (g1, g2) at s; s must lie in [-L, L].
    std::pair<double, double> at(double s) const;
};

Profile1D solve_profile_1d(double half_length, std::size_t npoints, double tol = 1e-10,
                           std::size_t max_iters = 5'000'000);

}  // namespace seglab
