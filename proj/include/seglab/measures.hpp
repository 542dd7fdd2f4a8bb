#pragma once

#include "seglab/field.hpp"
#include "seglab/interface.hpp"

namespace seglab {

struct PointValue {
    double value = 0.0;
    Vec2 at;
};

/// Min over curve vertices of the interpolated u_1 + u_2.
PointValue interface_min_sum(const MultiField& mf, const InterfaceCurve& curve);

/// Min of |grad w| over grid nodes in region.
double min_gradient_norm(const ScalarField& w, const Region& region);

/// Max over region nodes of sum_{j >= 3} u_j. Throws OnlyTwoSpecies for N = 2.
PointValue nondominant_sup(const MultiField& mf, const Region& region);

struct MixedTerms {
    double reaction = 0.0;  // int beta (u1 u2^3 + u2 u1^3)
    double gradient = 0.0;  // int |grad u1| |grad u2|
};

/// Cell-midpoint quadrature over cells whose center lies in region.
MixedTerms mixed_term_integrals(const MultiField& mf, const Region& region);

}  // namespace seglab
