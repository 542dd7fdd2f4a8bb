#include "seglab/powerlaw.hpp"

#include <algorithm>
#include <cmath>

#include "seglab/error.hpp"

namespace seglab {

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw Error(ErrorCode::TooFewPoints, "a power-law fit needs at least 3 points");
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [b, v] : points) {
        if (!(b > 0.0) || !(v > 0.0) || !std::isfinite(b) || !std::isfinite(v))
            throw Error(ErrorCode::NonpositiveValue, "power-law fit needs positive finite data");
        mx += std::log(b);
        my += std::log(v);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [b, v] : points) {
        const double dx = std::log(b) - mx, dy = std::log(v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw Error(ErrorCode::TooFewPoints, "power-law fit needs at least two distinct betas");

    PowerLawFit fit;
    fit.npoints = points.size();
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0.0;
    for (const auto& [b, v] : points) {
        const double r = std::log(v) - (fit.intercept + fit.exponent * std::log(b));
        ss_res += r * r;
    }
    fit.r2 = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

}  // namespace seglab
