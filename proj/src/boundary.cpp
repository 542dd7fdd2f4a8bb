#include "seglab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "seglab/error.hpp"
#include "seglab/stencil.hpp"

namespace seglab {

std::string_view to_string(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::FlatLinear: return "flat-linear";
        case BoundaryKind::TiltedHarmonic: return "tilted-harmonic";
        case BoundaryKind::ThreeSpeciesBump: return "three-species-bump";
        case BoundaryKind::CustomSnapshot: return "custom-snapshot";
    }
    return "unknown";
}

BoundaryKind parse_boundary_kind(std::string_view name) {
    for (auto k : {BoundaryKind::FlatLinear, BoundaryKind::TiltedHarmonic, BoundaryKind::ThreeSpeciesBump,
                   BoundaryKind::CustomSnapshot})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::InvalidParams, "unknown data kind '" + std::string(name) + "'");
}

BoundaryData harmonic_limit_data(BoundaryKind kind, const DataParams& params) {
    BoundaryData bd;
    bd.kind = kind;
    std::ostringstream desc;
    desc.precision(17);
    desc << to_string(kind);

    QuadraticPoly poly;
    switch (kind) {
        case BoundaryKind::FlatLinear:
        case BoundaryKind::ThreeSpeciesBump: {
            if (std::abs(norm(params.e) - 1.0) > 1e-12) throw Error(ErrorCode::InvalidParams, "e must be a unit vector");
            poly = QuadraticPoly{0.0, params.e.x, params.e.y, 0.0, 0.0, 0.0};
            desc << " e=" << params.e.x << ',' << params.e.y;
            break;
        }
        case BoundaryKind::TiltedHarmonic: {
            poly = params.poly;
            if (std::abs(poly.cxx + poly.cyy) > 1e-14)
                throw Error(ErrorCode::InvalidParams, "polynomial is not harmonic (cxx + cyy != 0)");
            desc << " poly=" << poly.c0 << ',' << poly.cx << ',' << poly.cy << ',' << poly.cxx << ',' << poly.cxy << ','
                 << poly.cyy;
            break;
        }
        case BoundaryKind::CustomSnapshot:
            throw Error(ErrorCode::InvalidParams, "custom-snapshot data comes from snapshot_data()");
    }

    bd.limit_poly = poly;
    bd.limit_w = poly;
    if (kind == BoundaryKind::ThreeSpeciesBump) {
        if (!(params.amplitude >= 0.0) || !std::isfinite(params.amplitude))
            throw Error(ErrorCode::InvalidParams, "bump amplitude must be nonnegative");
        if (!(params.ramp > 0.0)) throw Error(ErrorCode::InvalidParams, "bump ramp must be positive");
        bd.nspecies = 3;
        desc << " amplitude=" << params.amplitude << " arc_x=" << params.arc_x << " ramp=" << params.ramp;
        const double amp = params.amplitude, a = params.arc_x, ramp = params.ramp;
        bd.trace = [poly, amp, a, ramp](std::size_t s, Vec2 p) {
            if (s == 2) return amp * std::clamp((p.x - a) / ramp, 0.0, 1.0);
            const double w = poly(p);
            return s == 0 ? std::max(w, 0.0) : std::max(-w, 0.0);
        };
    } else {
        bd.trace = [poly](std::size_t s, Vec2 p) {
            const double w = poly(p);
            if (s == 0) return std::max(w, 0.0);
            if (s == 1) return std::max(-w, 0.0);
            return 0.0;
        };
    }
    bd.description = desc.str();
    return bd;
}

BoundaryData snapshot_data(const MultiField& snapshot) {
    snapshot.validate();
    BoundaryData bd;
    bd.kind = BoundaryKind::CustomSnapshot;
    bd.nspecies = snapshot.nspecies();
    auto held = std::make_shared<const MultiField>(snapshot);
    bd.trace = [held](std::size_t s, Vec2 p) { return sample(held->species(s), p); };
    bd.description = "custom-snapshot";
    return bd;
}

}  // namespace seglab
