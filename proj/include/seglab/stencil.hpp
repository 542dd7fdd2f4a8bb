#pragma once

#include "seglab/field.hpp"

namespace seglab {

/// Bilinear interpolation of f at p; p must lie in the closed domain.
double sample(const ScalarField& f, Vec2 p);

/// Central-difference gradient at an interior node (1 <= i <= nx-2, 1 <= j <= ny-2).
Vec2 nodal_gradient(const ScalarField& f, std::size_t i, std::size_t j);

/// Central-difference gradient blended bilinearly from the four nodes of the cell
/// containing p. Throws PointOutsideDomain when p is within h of the boundary.
Vec2 gradient_at(const ScalarField& f, Vec2 p);

/// Pointwise residual Delta_h u_i - beta u_i sum_{j != i} u_j^2 at an interior node.
double residual_at(const MultiField& mf, std::size_t species, std::size_t i, std::size_t j);

/// Max over species and interior nodes in region of |residual_at|.
double laplacian_residual(const MultiField& mf, const Region& region = Region::everything());

}  // namespace seglab
