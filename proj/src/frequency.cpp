#include "seglab/frequency.hpp"

#include <algorithm>
#include <cmath>

#include "seglab/error.hpp"
#include "seglab/quadrature.hpp"

namespace seglab {

double almgren_frequency(const MultiField& mf, Vec2 center, double r) {
    const Domain& d = mf.domain();
    const std::size_t ns = mf.nspecies();
    const double beta = mf.beta();
    std::vector<double> vals(ns);

    const double energy = disk_integral(d, [&](Vec2 p) {
        double e = 0.0;
        for (std::size_t i = 0; i < ns; ++i) {
            const Vec2 g = gradient_at(mf.species(i), p);
            e += dot(g, g);
            vals[i] = sample(mf.species(i), p);
        }
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = i + 1; j < ns; ++j) e += beta * vals[i] * vals[i] * vals[j] * vals[j];
        return e;
    }, center, r);

    const double mass = circle_integral(d, [&](Vec2 p) {
        double m = 0.0;
        for (std::size_t i = 0; i < ns; ++i) {
            const double v = sample(mf.species(i), p);
            m += v * v;
        }
        return m;
    }, center, r);

    if (!(mass > 1e-30)) throw Error(ErrorCode::DegenerateField, "sum of u_i^2 vanishes on the circle");
    return r * energy / mass;
}

double FrequencyProfile::worst_drop() const {
    double worst = 0.0;
    for (std::size_t k = 1; k < values.size(); ++k)
        worst = std::max(worst, (values[k - 1] - values[k]) / values[k - 1]);
    return worst;
}

FrequencyProfile frequency_profile(const MultiField& mf, Vec2 center, double rmin, double rmax, std::size_t nsamples,
                                   double slack) {
    if (nsamples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two radii");
    if (!(rmin > 0.0) || !(rmax > rmin)) throw Error(ErrorCode::InvalidArgument, "need 0 < rmin < rmax");
    FrequencyProfile prof;
    prof.center = center;
    prof.beta = mf.beta();
    prof.slack = slack;
    const double ratio = std::log(rmax / rmin) / static_cast<double>(nsamples - 1);
    for (std::size_t k = 0; k < nsamples; ++k) {
        const double r = k + 1 == nsamples ? rmax : rmin * std::exp(ratio * static_cast<double>(k));
        prof.radii.push_back(r);
        prof.values.push_back(almgren_frequency(mf, center, r));
        if (k > 0 && prof.values[k] < prof.values[k - 1] * (1.0 - slack)) prof.violations.push_back(k);
    }
    return prof;
}

}  // namespace seglab
