#include "seglab/interface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "seglab/error.hpp"
#include "seglab/excess.hpp"

namespace seglab {
namespace {

Vec2 tangent_of(Vec2 e) { return {e.y, -e.x}; }

Vec2 unit(Vec2 e) {
    const double n = norm(e);
    if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidArgument, "graph direction must be nonzero");
    return (1.0 / n) * e;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

double point_polyline_distance(Vec2 p, const std::vector<Vec2>& line) {
    if (line.size() == 1) return norm(p - line.front());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < line.size(); ++k) best = std::min(best, point_segment_distance(p, line[k], line[k + 1]));
    return best;
}

struct Segment {
    std::uint64_t a;
    std::uint64_t b;
};

}  // namespace

std::optional<std::vector<GraphSample>> graph_representation(const std::vector<Vec2>& vertices, Vec2 direction) {
    const Vec2 e = unit(direction);
    const Vec2 t = tangent_of(e);
    std::vector<GraphSample> out;
    out.reserve(vertices.size());
    for (const Vec2& v : vertices) out.push_back({dot(v, t), dot(v, e)});
    if (out.size() < 2) return out;
    const bool increasing = out[1].xp > out[0].xp;
    for (std::size_t k = 1; k < out.size(); ++k) {
        const bool step_up = out[k].xp > out[k - 1].xp;
        if (out[k].xp == out[k - 1].xp || step_up != increasing) return std::nullopt;
    }
    if (!increasing) std::reverse(out.begin(), out.end());
    return out;
}

InterfaceCurve InterfaceCurve::from_polyline(std::vector<Vec2> vertices, double grid_h, Vec2 direction) {
    InterfaceCurve c;
    c.vertices = std::move(vertices);
    c.grid_h = grid_h;
    c.graph_direction = unit(direction);
    if (auto g = graph_representation(c.vertices, c.graph_direction)) {
        c.is_graph = true;
        c.graph_samples = std::move(*g);
        c.lipschitz_constant = seglab::lipschitz_constant(c, c.graph_direction);
    } else {
        c.lipschitz_constant = std::numeric_limits<double>::quiet_NaN();
    }
    return c;
}

double lipschitz_constant(const InterfaceCurve& curve, Vec2 direction) {
    const auto g = graph_representation(curve.vertices, direction);
    if (!g) throw Error(ErrorCode::NonGraphCurve, "curve is not a graph in the requested direction");
    const double min_sep = 2.0 * curve.grid_h;
    double best = 0.0;
    const auto& s = *g;
    for (std::size_t a = 0; a < s.size(); ++a) {
        // xp is increasing, so pairs closer than min_sep are contiguous.
        std::size_t b = a + 1;
        while (b < s.size() && s[b].xp - s[a].xp < min_sep) ++b;
        for (; b < s.size(); ++b) best = std::max(best, std::abs(s[b].h - s[a].h) / (s[b].xp - s[a].xp));
    }
    return best;
}

InterfaceCurve extract_interface(const ScalarField& w, const Region& region, std::optional<Vec2> direction) {
    const Domain& d = w.domain();
    const std::size_t nx = d.nx(), ny = d.ny();
    auto positive = [&](std::size_t i, std::size_t j) { return w(i, j) >= 0.0; };
    auto in_region = [&](std::size_t i, std::size_t j) { return region.contains(d.point(i, j)); };

    // Crossing points keyed by grid edge: 2*node for the +x edge, 2*node+1 for the +y edge.
    std::unordered_map<std::uint64_t, Vec2> points;
    auto crossing = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
        const std::uint64_t key = 2 * static_cast<std::uint64_t>(d.index(i0, j0)) + (j1 != j0 ? 1 : 0);
        if (!points.count(key)) {
            const double f0 = w(i0, j0), f1 = w(i1, j1);
            const double t = f0 / (f0 - f1);
            points[key] = d.point(i0, j0) + t * (d.point(i1, j1) - d.point(i0, j0));
        }
        return key;
    };

    std::vector<Segment> segments;
    std::size_t skipped = 0;
    bool saw_pos = false, saw_neg = false;
    for (std::size_t j = 0; j + 1 < ny; ++j)
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            if (!(in_region(i, j) && in_region(i + 1, j) && in_region(i, j + 1) && in_region(i + 1, j + 1))) continue;
            const std::array<double, 4> f{w(i, j), w(i + 1, j), w(i + 1, j + 1), w(i, j + 1)};
            if (f[0] == 0.0 && f[1] == 0.0 && f[2] == 0.0 && f[3] == 0.0) {
                ++skipped;
                continue;
            }
            const std::array<bool, 4> pos{positive(i, j), positive(i + 1, j), positive(i + 1, j + 1), positive(i, j + 1)};
            for (bool p : pos) (p ? saw_pos : saw_neg) = true;
            // Edges: 0 bottom (c0-c1), 1 right (c1-c2), 2 top (c3-c2), 3 left (c0-c3).
            std::array<std::optional<std::uint64_t>, 4> edge;
            if (pos[0] != pos[1]) edge[0] = crossing(i, j, i + 1, j);
            if (pos[1] != pos[2]) edge[1] = crossing(i + 1, j, i + 1, j + 1);
            if (pos[3] != pos[2]) edge[2] = crossing(i, j + 1, i + 1, j + 1);
            if (pos[0] != pos[3]) edge[3] = crossing(i, j, i, j + 1);
            std::array<std::uint64_t, 4> hit{};
            std::size_t n = 0;
            for (const auto& e : edge)
                if (e) hit[n++] = *e;
            if (n == 2) {
                segments.push_back({hit[0], hit[1]});
            } else if (n == 4) {
                // Saddle: decide connectivity by the sign of the cell-center average.
                const bool center_pos = (f[0] + f[1] + f[2] + f[3]) >= 0.0;
                if (center_pos == pos[0]) {
                    segments.push_back({*edge[0], *edge[1]});
                    segments.push_back({*edge[2], *edge[3]});
                } else {
                    segments.push_back({*edge[0], *edge[3]});
                    segments.push_back({*edge[1], *edge[2]});
                }
            }
        }

    if (segments.empty() || !(saw_pos && saw_neg))
        throw Error(ErrorCode::NoInterface, "w does not change sign in the region");

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> incident;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        incident[segments[s].a].push_back(s);
        incident[segments[s].b].push_back(s);
    }

    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<std::uint64_t>> chains;
    auto walk = [&](std::size_t s0, std::uint64_t start) {
        std::vector<std::uint64_t> chain{start};
        std::size_t s = s0;
        std::uint64_t at = start;
        while (true) {
            used[s] = true;
            at = segments[s].a == at ? segments[s].b : segments[s].a;
            chain.push_back(at);
            std::optional<std::size_t> next;
            for (std::size_t cand : incident[at])
                if (!used[cand]) next = cand;
            if (!next) break;
            s = *next;
        }
        chains.push_back(std::move(chain));
    };
    // Open chains first (they start at an edge touched by a single segment), then loops.
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s]) continue;
        if (incident[segments[s].a].size() == 1) walk(s, segments[s].a);
        else if (incident[segments[s].b].size() == 1) walk(s, segments[s].b);
    }
    for (std::size_t s = 0; s < segments.size(); ++s)
        if (!used[s]) walk(s, segments[s].a);

    const auto longest = std::max_element(chains.begin(), chains.end(),
                                          [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<Vec2> verts;
    const double dup = 1e-12 * d.h();
    for (std::uint64_t key : *longest) {
        const Vec2 p = points.at(key);
        if (verts.empty() || norm(p - verts.back()) > dup) verts.push_back(p);
    }

    Vec2 dir{0.0, 1.0};
    if (direction) {
        dir = *direction;
    } else {
        Vec2 c = region.shape() == Region::Shape::Everything ? d.center() : region.center();
        double fit = std::min({c.x - d.x0(), d.x1() - c.x, c.y - d.y0(), d.y1() - c.y}) - d.h();
        const double r = std::min(fit, region.inradius());
        if (r > 2.0 * d.h()) {
            const Vec2 e = best_fit_vector(w, c, r);
            if (norm(e) > 0.0) dir = e;
        }
    }
    InterfaceCurve curve = InterfaceCurve::from_polyline(std::move(verts), d.h(), dir);
    curve.components = chains.size();
    curve.skipped_zero_cells = skipped;
    return curve;
}

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "Hausdorff distance of an empty set");
    double worst = 0.0;
    for (const Vec2& p : a) worst = std::max(worst, point_polyline_distance(p, b));
    for (const Vec2& p : b) worst = std::max(worst, point_polyline_distance(p, a));
    return worst;
}

std::vector<Vec2> zero_set_graph(const std::function<double(Vec2)>& f, Vec2 direction, const std::vector<double>& xp,
                                 const std::vector<double>& guess) {
    if (xp.size() != guess.size()) throw Error(ErrorCode::InvalidArgument, "xp and guess differ in length");
    const Vec2 e = unit(direction);
    const Vec2 t = tangent_of(e);
    std::vector<Vec2> out;
    out.reserve(xp.size());
    for (std::size_t k = 0; k < xp.size(); ++k) {
        auto g = [&](double s) { return f(xp[k] * t + s * e); };
        double lo = guess[k], hi = guess[k];
        double width = 1e-3;
        while (std::signbit(g(lo)) == std::signbit(g(hi))) {
            lo = guess[k] - width;
            hi = guess[k] + width;
            width *= 2.0;
            if (width > 1e3) throw Error(ErrorCode::NoInterface, "no root of the limit function near the curve");
        }
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::signbit(g(mid)) == std::signbit(g(lo))) lo = mid;
            else hi = mid;
        }
        out.push_back(xp[k] * t + 0.5 * (lo + hi) * e);
    }
    return out;
}

}  // namespace seglab
