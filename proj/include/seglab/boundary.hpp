#pragma once

#include <functional>
#include <optional>
#include <string>

#include "seglab/field.hpp"

namespace seglab {

enum class BoundaryKind { FlatLinear, TiltedHarmonic, ThreeSpeciesBump, CustomSnapshot };

std::string_view to_string(BoundaryKind kind);
BoundaryKind parse_boundary_kind(std::string_view name);

/// w = c0 + cx x + cy y + cxx x^2 + cxy x y + cyy y^2; harmonic iff cxx + cyy == 0.
struct QuadraticPoly {
    double c0 = 0.0, cx = 0.0, cy = 1.0, cxx = 0.0, cxy = 0.0, cyy = 0.0;

    double operator()(Vec2 p) const { return c0 + cx * p.x + cy * p.y + cxx * p.x * p.x + cxy * p.x * p.y + cyy * p.y * p.y; }
    Vec2 gradient(Vec2 p) const { return {cx + 2 * cxx * p.x + cxy * p.y, cy + cxy * p.x + 2 * cyy * p.y}; }
};

struct DataParams {
    Vec2 e{0.0, 1.0};          // flat-linear and three-species-bump: w = e . x
    QuadraticPoly poly{};      // tilted-harmonic
    double amplitude = 0.1;    // third-species bump height
    double arc_x = 0.8;        // bump lives on boundary nodes with x > arc_x
    double ramp = 0.1;         // bump rises linearly over [arc_x, arc_x + ramp]
};

/// Dirichlet traces for every species plus, when known, the harmonic limit w of u_1 - u_2.
struct BoundaryData {
    BoundaryKind kind = BoundaryKind::FlatLinear;
    std::size_t nspecies = 2;
    std::function<double(std::size_t species, Vec2 p)> trace;
    std::function<double(Vec2)> limit_w;  // empty when no closed form exists
    std::optional<QuadraticPoly> limit_poly;
    std::string description;
};

/// Limit-pair traces u_1 = w^+, u_2 = w^- (and an optional third-species bump).
BoundaryData harmonic_limit_data(BoundaryKind kind, const DataParams& params);

/// Boundary traces copied from the nodes of a snapshot (custom-snapshot kind).
BoundaryData snapshot_data(const MultiField& snapshot);

}  // namespace seglab
