#pragma once

#include <cmath>
#include <cstddef>

namespace seglab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Uniform 2D grid: nodes at (x0 + i*h, y0 + j*h), i < nx, j < ny.
class Domain {
public:
    Domain(double x0, double y0, double h, std::size_t nx, std::size_t ny);

    /// Square [-half, half]^2 centered at the origin with n points per axis.
    static Domain centered_square(double half, std::size_t n);

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double h() const { return h_; }
    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t size() const { return nx_ * ny_; }

    double x1() const { return x0_ + static_cast<double>(nx_ - 1) * h_; }
    double y1() const { return y0_ + static_cast<double>(ny_ - 1) * h_; }
    double x(std::size_t i) const { return x0_ + static_cast<double>(i) * h_; }
    double y(std::size_t j) const { return y0_ + static_cast<double>(j) * h_; }
    Vec2 point(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
    Vec2 center() const { return {0.5 * (x0_ + x1()), 0.5 * (y0_ + y1())}; }
    std::size_t index(std::size_t i, std::size_t j) const { return j * nx_ + i; }

    bool on_boundary(std::size_t i, std::size_t j) const {
        return i == 0 || j == 0 || i + 1 == nx_ || j + 1 == ny_;
    }

    /// True when p lies inside the domain at distance >= margin from every side.
    bool contains(Vec2 p, double margin = 0.0) const;

    /// True when the closed disk B_r(c) keeps distance >= margin from every side.
    bool contains_disk(Vec2 c, double r, double margin) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    double x0_;
    double y0_;
    double h_;
    std::size_t nx_;
    std::size_t ny_;
};

/// Disk or axis-aligned rectangle used to restrict grid-point searches.
class Region {
public:
    enum class Shape { Disk, Rect, Everything };

    static Region disk(Vec2 c, double r);
    static Region rect(double xlo, double ylo, double xhi, double yhi);
    static Region everything();

    Shape shape() const { return shape_; }
    Vec2 center() const;
    /// Radius for disks, half of the smaller side for rectangles.
    double inradius() const;
    bool contains(Vec2 p) const;
    /// Bounding box [lo, hi]; infinite for Everything.
    Vec2 lo() const { return lo_; }
    Vec2 hi() const { return hi_; }

private:
    Shape shape_ = Shape::Everything;
    Vec2 lo_{};
    Vec2 hi_{};
    Vec2 c_{};
    double r_ = 0.0;
};

}  // namespace seglab
