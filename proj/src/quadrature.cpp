#include "seglab/quadrature.hpp"

namespace seglab::detail {

void require_disk(const Domain& d, Vec2 c, double r) {
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    if (!d.contains_disk(c, r, d.h()))
        throw Error(ErrorCode::DiskOverflow, "B_" + std::to_string(r) + " at (" + std::to_string(c.x) + ", " +
                                                 std::to_string(c.y) + ") does not fit with margin h");
}

}  // namespace seglab::detail
