#include "seglab/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seglab/error.hpp"

namespace seglab {
namespace {

struct CellPos {
    std::size_t i;
    double t;
};

// Cell index along one axis, clamped to [lo, hi], and the fractional offset in it.
CellPos locate(double coord, double origin, double h, std::size_t lo, std::size_t hi) {
    const double s = (coord - origin) / h;
    auto i = static_cast<std::ptrdiff_t>(std::floor(s));
    i = std::clamp<std::ptrdiff_t>(i, static_cast<std::ptrdiff_t>(lo), static_cast<std::ptrdiff_t>(hi));
    return {static_cast<std::size_t>(i), s - static_cast<double>(i)};
}

}  // namespace

double sample(const ScalarField& f, Vec2 p) {
    const Domain& d = f.domain();
    if (!d.contains(p)) throw Error(ErrorCode::PointOutsideDomain, "sample point outside domain");
    const auto [i, tx] = locate(p.x, d.x0(), d.h(), 0, d.nx() - 2);
    const auto [j, ty] = locate(p.y, d.y0(), d.h(), 0, d.ny() - 2);
    const double f00 = f(i, j), f10 = f(i + 1, j), f01 = f(i, j + 1), f11 = f(i + 1, j + 1);
    return (1 - ty) * ((1 - tx) * f00 + tx * f10) + ty * ((1 - tx) * f01 + tx * f11);
}

Vec2 nodal_gradient(const ScalarField& f, std::size_t i, std::size_t j) {
    const double inv = 0.5 / f.domain().h();
    return {(f(i + 1, j) - f(i - 1, j)) * inv, (f(i, j + 1) - f(i, j - 1)) * inv};
}

Vec2 gradient_at(const ScalarField& f, Vec2 p) {
    const Domain& d = f.domain();
    if (!d.contains(p, d.h()))
        throw Error(ErrorCode::PointOutsideDomain, "gradient point within h of the boundary");
    const auto [i, tx] = locate(p.x, d.x0(), d.h(), 1, d.nx() - 3);
    const auto [j, ty] = locate(p.y, d.y0(), d.h(), 1, d.ny() - 3);
    const Vec2 g00 = nodal_gradient(f, i, j), g10 = nodal_gradient(f, i + 1, j);
    const Vec2 g01 = nodal_gradient(f, i, j + 1), g11 = nodal_gradient(f, i + 1, j + 1);
    return (1 - ty) * ((1 - tx) * g00 + tx * g10) + ty * ((1 - tx) * g01 + tx * g11);
}

double residual_at(const MultiField& mf, std::size_t species, std::size_t i, std::size_t j) {
    const ScalarField& u = mf.species(species);
    const double c = u(i, j);
    const double h = mf.domain().h();
    // Sum of neighbour differences keeps the stencil accurate when |u| >> h^2 |Delta u|.
    const double lap = ((u(i + 1, j) - c) + (u(i - 1, j) - c) + (u(i, j + 1) - c) + (u(i, j - 1) - c)) / (h * h);
    double others = 0.0;
    for (std::size_t s = 0; s < mf.nspecies(); ++s) {
        if (s == species) continue;
        const double v = mf.species(s)(i, j);
        others += v * v;
    }
    return lap - mf.beta() * c * others;
}

double laplacian_residual(const MultiField& mf, const Region& region) {
    const Domain& d = mf.domain();
    if (region.shape() != Region::Shape::Everything &&
        !(d.contains(region.lo()) && d.contains(region.hi())))
        throw Error(ErrorCode::RegionOutsideDomain, "residual region leaves the domain");
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < d.ny(); ++j)
        for (std::size_t i = 1; i + 1 < d.nx(); ++i) {
            if (!region.contains(d.point(i, j))) continue;
            for (std::size_t s = 0; s < mf.nspecies(); ++s) worst = std::max(worst, std::abs(residual_at(mf, s, i, j)));
        }
    return worst;
}

}  // namespace seglab
