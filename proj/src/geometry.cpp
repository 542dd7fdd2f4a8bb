#include "seglab/geometry.hpp"

#include <algorithm>
#include <limits>

#include "seglab/error.hpp"

namespace seglab {

Domain::Domain(double x0, double y0, double h, std::size_t nx, std::size_t ny)
    : x0_(x0), y0_(y0), h_(h), nx_(nx), ny_(ny) {
    if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(x0) || !std::isfinite(y0))
        throw Error(ErrorCode::InvalidArgument, "domain needs finite corner and h > 0");
    if (nx < 3 || ny < 3) throw Error(ErrorCode::InvalidArgument, "domain needs at least 3 points per axis");
}

Domain Domain::centered_square(double half, std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "domain needs at least 3 points per axis");
    const double h = 2.0 * half / static_cast<double>(n - 1);
    return Domain(-half, -half, h, n, n);
}

bool Domain::contains(Vec2 p, double margin) const {
    // Slack absorbs rounding in x0 + i*h for points placed exactly on the margin.
    const double slack = 1e-9 * h_;
    return p.x >= x0_ + margin - slack && p.x <= x1() - margin + slack && p.y >= y0_ + margin - slack &&
           p.y <= y1() - margin + slack;
}

bool Domain::contains_disk(Vec2 c, double r, double margin) const {
    return contains(c, r + margin);
}

Region Region::disk(Vec2 c, double r) {
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "disk region needs r > 0");
    Region out;
    out.shape_ = Shape::Disk;
    out.c_ = c;
    out.r_ = r;
    out.lo_ = {c.x - r, c.y - r};
    out.hi_ = {c.x + r, c.y + r};
    return out;
}

Region Region::rect(double xlo, double ylo, double xhi, double yhi) {
    if (!(xhi > xlo) || !(yhi > ylo)) throw Error(ErrorCode::InvalidArgument, "empty rectangle region");
    Region out;
    out.shape_ = Shape::Rect;
    out.lo_ = {xlo, ylo};
    out.hi_ = {xhi, yhi};
    out.c_ = {0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
    out.r_ = 0.5 * std::min(xhi - xlo, yhi - ylo);
    return out;
}

Region Region::everything() {
    Region out;
    constexpr double inf = std::numeric_limits<double>::infinity();
    out.lo_ = {-inf, -inf};
    out.hi_ = {inf, inf};
    out.r_ = inf;
    return out;
}

Vec2 Region::center() const { return c_; }

double Region::inradius() const { return r_; }

bool Region::contains(Vec2 p) const {
    switch (shape_) {
        case Shape::Disk: {
            const Vec2 d = p - c_;
            return dot(d, d) <= r_ * r_ * (1.0 + 1e-12);
        }
        case Shape::Rect:
            return p.x >= lo_.x && p.x <= hi_.x && p.y >= lo_.y && p.y <= hi_.y;
        case Shape::Everything:
            return true;
    }
    return false;
}

}  // namespace seglab
