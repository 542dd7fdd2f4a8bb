#pragma once

#include "seglab/field.hpp"

namespace seglab {

/// u^lambda_i(x) = lambda^{-1} u_i(center + lambda x) on `target`, with beta' = beta lambda^4.
/// Throws RescaledWindowOverflow when center + lambda * target leaves the source domain.
MultiField rescale_field(const MultiField& mf, double lambda, Vec2 center, const Domain& target);

/// Same, on the source grid.
MultiField rescale_field(const MultiField& mf, double lambda, Vec2 center);

}  // namespace seglab
