#include "seglab/checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "seglab/frequency.hpp"
#include "seglab/powerlaw.hpp"
#include "seglab/profile1d.hpp"
#include "seglab/quadrature.hpp"
#include "seglab/snapshot.hpp"

namespace seglab {
namespace {

constexpr double kPi = std::numbers::pi;

CheckResult compare(std::string name, double got, double want, double tol) {
    char buf[160];
    const double err = std::abs(got - want);
    std::snprintf(buf, sizeof buf, "got %.12g, expected %.12g, |err| %.3g <= %.1g", got, want, err, tol);
    return {std::move(name), err <= tol, buf};
}

void quadrature_checks(std::vector<CheckResult>& out, double weight_scale) {
    // Fine grid so that bilinear interpolation error stays below the disk tolerances.
    const Domain d = Domain::centered_square(1287.0 / 1280.0, 2575);
    auto rule = [&](double r) {
        PolarRule pr = PolarRule::for_radius(r, d.h());
        pr.weight_scale = weight_scale;
        return pr;
    };
    auto field = [&](auto f) { return ScalarField::from_function(d, f); };
    const Vec2 o{0.0, 0.0};

    out.push_back(compare("quadrature_disk_area", disk_integral(field([](Vec2) { return 1.0; }), o, 0.5, rule(0.5)),
                          kPi * 0.25, 1e-6));
    out.push_back(compare("quadrature_disk_r2",
                          disk_integral(field([](Vec2 p) { return p.x * p.x + p.y * p.y; }), o, 1.0, rule(1.0)),
                          kPi / 2.0, 1e-5));
    out.push_back(compare("quadrature_disk_odd", disk_integral(field([](Vec2 p) { return p.x; }), o, 0.7, rule(0.7)),
                          0.0, 1e-10));
    out.push_back(compare("quadrature_circle_length",
                          circle_integral(field([](Vec2) { return 1.0; }), o, 1.0, rule(1.0)), 2.0 * kPi, 1e-8));
    out.push_back(compare("quadrature_circle_y2", circle_integral(field([](Vec2 p) { return p.y * p.y; }), o, 1.0, rule(1.0)),
                          kPi, 1e-6));
    out.push_back(compare("quadrature_circle_odd",
                          circle_integral(field([](Vec2 p) { return p.x * p.y; }), o, 1.0, rule(1.0)), 0.0, 1e-10));
}

void frequency_checks(std::vector<CheckResult>& out) {
    const Domain d = Domain::centered_square(1.0, 801);
    auto pair = [&](std::function<double(Vec2)> w) {
        ScalarField a = ScalarField::from_function(d, [&](Vec2 p) { return std::max(w(p), 0.0); });
        ScalarField b = ScalarField::from_function(d, [&](Vec2 p) { return std::max(-w(p), 0.0); });
        return MultiField({std::move(a), std::move(b)}, 0.0);
    };
    const MultiField deg1 = pair([](Vec2 p) { return p.y; });
    const MultiField deg2 = pair([](Vec2 p) { return p.x * p.x - p.y * p.y; });
    for (double r : {0.3, 0.8}) {
        char name[64];
        std::snprintf(name, sizeof name, "frequency_degree1_r%.1f", r);
        const double n1 = almgren_frequency(deg1, {0.0, 0.0}, r);
        out.push_back(compare(name, n1, 1.0, 2e-2));
        std::snprintf(name, sizeof name, "frequency_degree2_r%.1f", r);
        const double n2 = almgren_frequency(deg2, {0.0, 0.0}, r);
        out.push_back(compare(name, n2, 2.0, 2e-2));
    }
}

void profile_checks(std::vector<CheckResult>& out) {
    const Profile1D p = solve_profile_1d(10.0, 513);
    double asym = 0.0;
    const std::size_t n = p.t.size();
    for (std::size_t k = 0; k < n; ++k) asym = std::max(asym, std::abs(p.g1[k] - p.g2[n - 1 - k]));
    out.push_back(compare("profile_reflection_symmetry", asym, 0.0, 1e-8));
    out.push_back(compare("profile_system_residual", p.report.residual, 0.0, 1e-10));
    out.push_back(compare("profile_center_difference", p.g1[n / 2] - p.g2[n / 2], 0.0, 1e-8));
}

void fit_checks(std::vector<CheckResult>& out) {
    const std::vector<std::pair<double, double>> exact{{10.0, 1.0}, {100.0, 0.1}, {1000.0, 0.01}};
    const PowerLawFit a = fit_power_law(exact);
    out.push_back(compare("fit_exponent_minus_one", a.exponent, -1.0, 1e-12));
    out.push_back(compare("fit_r2_exact", a.r2, 1.0, 1e-12));
    std::vector<std::pair<double, double>> quarter;
    for (double beta : {1e2, 1e3, 1e4, 1e5}) quarter.emplace_back(beta, 1.37 * std::pow(beta, -0.25));
    const PowerLawFit b = fit_power_law(quarter);
    out.push_back(compare("fit_exponent_quarter", b.exponent, -0.25, 1e-12));
    out.push_back(compare("fit_intercept_quarter", b.intercept, std::log(1.37), 1e-12));
}

void snapshot_checks(std::vector<CheckResult>& out) {
    const Domain d(-0.3, 0.1, 0.037, 17, 11);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<ScalarField> species;
    for (int s = 0; s < 3; ++s)
        species.push_back(ScalarField::from_function(d, [&](Vec2) { return dist(rng) * std::pow(10.0, -8 * dist(rng)); }));
    const MultiField mf(std::move(species), 1234.5678);
    std::stringstream buf;
    write_snapshot(buf, mf);
    const MultiField back = read_snapshot(buf);
    out.push_back({"snapshot_round_trip", back == mf, back == mf ? "bit-exact" : "values differ after round trip"});
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
    std::vector<CheckResult> out;
    quadrature_checks(out, options.quadrature_weight_scale);
    frequency_checks(out);
    profile_checks(out);
    fit_checks(out);
    snapshot_checks(out);
    return out;
}

}  // namespace seglab
