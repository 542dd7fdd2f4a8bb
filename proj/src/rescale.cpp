#include "seglab/rescale.hpp"

#include "seglab/error.hpp"
#include "seglab/stencil.hpp"

namespace seglab {

MultiField rescale_field(const MultiField& mf, double lambda, Vec2 center, const Domain& target) {
    if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
    const Domain& src = mf.domain();
    const Vec2 lo = center + lambda * Vec2{target.x0(), target.y0()};
    const Vec2 hi = center + lambda * Vec2{target.x1(), target.y1()};
    if (!src.contains(lo) || !src.contains(hi))
        throw Error(ErrorCode::RescaledWindowOverflow, "lambda * target window leaves the source domain");

    const double l4 = lambda * lambda * lambda * lambda;
    MultiField out(target, mf.nspecies(), mf.beta() * l4);
    for (std::size_t s = 0; s < mf.nspecies(); ++s) {
        const ScalarField& u = mf.species(s);
        ScalarField& v = out.species(s);
        for (std::size_t j = 0; j < target.ny(); ++j)
            for (std::size_t i = 0; i < target.nx(); ++i)
                v(i, j) = sample(u, center + lambda * target.point(i, j)) / lambda;
    }
    return out;
}

MultiField rescale_field(const MultiField& mf, double lambda, Vec2 center) {
    return rescale_field(mf, lambda, center, mf.domain());
}

}  // namespace seglab
