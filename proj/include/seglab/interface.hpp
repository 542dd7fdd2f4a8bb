#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "seglab/field.hpp"

namespace seglab {

struct GraphSample {
    double xp;  // coordinate along the tangent (e_y, -e_x)
    double h;   // height along the graph direction e
};

/// Ordered polyline approximating {w = 0}, with its graph representation when one exists.
struct InterfaceCurve {
    std::vector<Vec2> vertices;
    Vec2 graph_direction{0.0, 1.0};
    bool is_graph = false;
    std::vector<GraphSample> graph_samples;
    double lipschitz_constant = 0.0;
    double grid_h = 0.0;
    std::size_t components = 1;
    std::size_t skipped_zero_cells = 0;

    /// Wraps an arbitrary polyline and attempts the graph representation in `direction`.
    static InterfaceCurve from_polyline(std::vector<Vec2> vertices, double grid_h, Vec2 direction);
};

/// (x', h) along `direction` if x' is strictly monotone along the vertices (returned increasing).
std::optional<std::vector<GraphSample>> graph_representation(const std::vector<Vec2>& vertices, Vec2 direction);

/// Marching squares on cells whose corners all lie in `region`; keeps the longest component.
/// Throws NoInterface when w does not change sign there. A curve that is not a graph in the
/// chosen direction is returned with is_graph = false.
InterfaceCurve extract_interface(const ScalarField& w, const Region& region,
                                 std::optional<Vec2> direction = std::nullopt);

/// Max of |h(a) - h(b)| / |x'(a) - x'(b)| over vertex pairs with |x'(a) - x'(b)| >= 2 grid_h.
double lipschitz_constant(const InterfaceCurve& curve, Vec2 direction);

/// Symmetric Hausdorff distance between two polylines.
double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

/// Points of {f = 0} above the given tangent coordinates: for each x', the root of
/// s -> f(x' t + s e) nearest to `guess[k]`, bracketed by expanding around it.
std::vector<Vec2> zero_set_graph(const std::function<double(Vec2)>& f, Vec2 direction, const std::vector<double>& xp,
                                 const std::vector<double>& guess);

}  // namespace seglab
