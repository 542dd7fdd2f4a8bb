#include "seglab/measures.hpp"

#include <cmath>
#include <limits>

#include "seglab/error.hpp"
#include "seglab/stencil.hpp"

namespace seglab {
namespace {

void require_region(const Domain& d, const Region& region) {
    if (region.shape() == Region::Shape::Everything) return;
    if (!d.contains(region.lo()) || !d.contains(region.hi()))
        throw Error(ErrorCode::RegionOutsideDomain, "region leaves the domain");
}

}  // namespace

PointValue interface_min_sum(const MultiField& mf, const InterfaceCurve& curve) {
    if (curve.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty interface curve");
    PointValue best{std::numeric_limits<double>::infinity(), {}};
    for (const Vec2& p : curve.vertices) {
        const double s = sample(mf.species(0), p) + sample(mf.species(1), p);
        if (s < best.value) best = {s, p};
    }
    return best;
}

double min_gradient_norm(const ScalarField& w, const Region& region) {
    const Domain& d = w.domain();
    require_region(d, region);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j + 1 < d.ny(); ++j)
        for (std::size_t i = 1; i + 1 < d.nx(); ++i)
            if (region.contains(d.point(i, j))) best = std::min(best, norm(nodal_gradient(w, i, j)));
    if (!std::isfinite(best)) throw Error(ErrorCode::InvalidArgument, "region holds no interior node");
    return best;
}

PointValue nondominant_sup(const MultiField& mf, const Region& region) {
    if (mf.nspecies() < 3) throw Error(ErrorCode::OnlyTwoSpecies, "no non-dominating species in a two-species field");
    const Domain& d = mf.domain();
    require_region(d, region);
    PointValue best{-1.0, {}};
    for (std::size_t j = 0; j < d.ny(); ++j)
        for (std::size_t i = 0; i < d.nx(); ++i) {
            const Vec2 p = d.point(i, j);
            if (!region.contains(p)) continue;
            double s = 0.0;
            for (std::size_t k = 2; k < mf.nspecies(); ++k) s += mf.species(k)(i, j);
            if (s > best.value) best = {s, p};
        }
    if (best.value < 0.0) throw Error(ErrorCode::InvalidArgument, "region holds no grid node");
    return best;
}

MixedTerms mixed_term_integrals(const MultiField& mf, const Region& region) {
    const Domain& d = mf.domain();
    require_region(d, region);
    const double h = d.h();
    const double beta = mf.beta();
    const ScalarField& u1 = mf.species(0);
    const ScalarField& u2 = mf.species(1);
    MixedTerms out;
    for (std::size_t j = 0; j + 1 < d.ny(); ++j)
        for (std::size_t i = 0; i + 1 < d.nx(); ++i) {
            if (!region.contains(d.point(i, j) + Vec2{0.5 * h, 0.5 * h})) continue;
            auto mid = [&](const ScalarField& u) { return 0.25 * (u(i, j) + u(i + 1, j) + u(i, j + 1) + u(i + 1, j + 1)); };
            auto grad = [&](const ScalarField& u) {
                return Vec2{((u(i + 1, j) - u(i, j)) + (u(i + 1, j + 1) - u(i, j + 1))) / (2 * h),
                            ((u(i, j + 1) - u(i, j)) + (u(i + 1, j + 1) - u(i + 1, j))) / (2 * h)};
            };
            const double a = mid(u1), b = mid(u2);
            out.reaction += beta * (a * b * b * b + b * a * a * a);
            out.gradient += norm(grad(u1)) * norm(grad(u2));
        }
    out.reaction *= h * h;
    out.gradient *= h * h;
    return out;
}

}  // namespace seglab
