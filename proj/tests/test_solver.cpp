#include <doctest.h>

#include <cmath>

#include "seglab/boundary.hpp"
#include "seglab/error.hpp"
#include "seglab/profile1d.hpp"
#include "seglab/solver.hpp"
#include "seglab/stencil.hpp"

using namespace seglab;

namespace {

SolveConfig config(double beta, double tol = 1e-10) {
    SolveConfig c;
    c.beta = beta;
    c.tol = tol;
    return c;
}

BoundaryData flat() { return harmonic_limit_data(BoundaryKind::FlatLinear, {}); }

}  // namespace

TEST_CASE("boundary data kinds") {
    CHECK(parse_boundary_kind("flat-linear") == BoundaryKind::FlatLinear);
    CHECK(parse_boundary_kind("tilted-harmonic") == BoundaryKind::TiltedHarmonic);
    CHECK(parse_boundary_kind("three-species-bump") == BoundaryKind::ThreeSpeciesBump);
    CHECK(to_string(BoundaryKind::CustomSnapshot) == "custom-snapshot");
    CHECK_THROWS_AS(parse_boundary_kind("wavy"), Error);

    const BoundaryData bd = flat();
    CHECK(bd.trace(0, {0.3, 0.5}) == 0.5);
    CHECK(bd.trace(1, {0.3, 0.5}) == 0.0);
    CHECK(bd.trace(1, {0.3, -0.5}) == 0.5);
    CHECK(bd.limit_w({0.3, -0.5}) == -0.5);

    DataParams bad;
    bad.e = {1.0, 1.0};
    CHECK_THROWS_AS(harmonic_limit_data(BoundaryKind::FlatLinear, bad), Error);
    DataParams nonharmonic;
    nonharmonic.poly.cxx = 0.2;
    CHECK_THROWS_AS(harmonic_limit_data(BoundaryKind::TiltedHarmonic, nonharmonic), Error);

    DataParams bump;
    const BoundaryData b3 = harmonic_limit_data(BoundaryKind::ThreeSpeciesBump, bump);
    CHECK(b3.nspecies == 3);
    CHECK(b3.trace(2, {0.5, 1.0}) == 0.0);
    CHECK(b3.trace(2, {0.85, 1.0}) == doctest::Approx(0.05));
    CHECK(b3.trace(2, {1.0, 0.2}) == doctest::Approx(0.1));
}

TEST_CASE("flat data: converged, nonnegative, symmetric, below the harmonic extension") {
    const Domain d = Domain::centered_square(1.0, 129);
    const SolveResult r = solve_system(d, flat(), config(1e3));
    REQUIRE(r.report.converged);
    CHECK(r.report.residual <= 1e-10);
    CHECK(laplacian_residual(r.field) <= 1e-10);
    CHECK_NOTHROW(r.field.validate());
    CHECK_FALSE(r.report.under_resolved);

    // (u1, u2)(x, y) = (u2, u1)(x, -y) and u(x, y) = u(-x, y).
    double asym = 0.0;
    const std::size_t n = d.nx();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            asym = std::max(asym, std::abs(r.field.species(0)(i, j) - r.field.species(1)(i, n - 1 - j)));
            asym = std::max(asym, std::abs(r.field.species(0)(i, j) - r.field.species(0)(n - 1 - i, j)));
        }
    CHECK(asym <= 1e-8);

    // The coupling only pushes down: u_i <= discrete harmonic extension of its own data.
    const SolveResult harmonic = solve_system(d, flat(), config(0.0));
    REQUIRE(harmonic.report.converged);
    double excess = -1.0;
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t k = 0; k < d.size(); ++k)
            excess = std::max(excess, r.field.species(s).values()[k] - harmonic.field.species(s).values()[k]);
    CHECK(excess <= 1e-9);

    // u1 u2 shrinks as beta grows.
    auto max_product = [&](const MultiField& f) {
        double m = 0.0;
        for (std::size_t k = 0; k < d.size(); ++k)
            m = std::max(m, f.species(0).values()[k] * f.species(1).values()[k]);
        return m;
    };
    const SolveResult weak = solve_system(d, flat(), config(1e2));
    CHECK(max_product(r.field) < max_product(weak.field));
}

TEST_CASE("solves are deterministic and the residual history decays") {
    const Domain d = Domain::centered_square(1.0, 65);
    SolveConfig c = config(3e2);
    c.report_every = 10;
    const SolveResult a = solve_system(d, flat(), c);
    const SolveResult b = solve_system(d, flat(), c);
    CHECK(a.field == b.field);
    CHECK(a.report.to_text() == b.report.to_text());
    REQUIRE(a.report.history.size() >= 2);
    CHECK(a.report.history.back().residual < a.report.history.front().residual);
    CHECK(a.report.history.front().iteration == 10);
}

TEST_CASE("matches the discrete 1D profile exactly on a layer-aligned grid") {
    // Rows y_j map to profile nodes t = y beta^{1/4}, so the x-independent extension of the
    // discrete profile is an exact discrete 2D solution.
    const double beta = 1e3;
    const double scale = std::pow(beta, 0.25);
    const Domain d = Domain::centered_square(1.0, 257);
    const double dt = d.h() * scale;
    const Profile1D prof = solve_profile_1d(256 * dt, 513, 1e-10);
    REQUIRE(std::abs(prof.dt() - dt) < 1e-12);

    auto node = [&](double y) { return static_cast<std::size_t>(std::lround(y / d.h())) + 256; };
    BoundaryData bd;
    bd.kind = BoundaryKind::CustomSnapshot;
    bd.nspecies = 2;
    bd.trace = [&](std::size_t s, Vec2 p) {
        const std::size_t k = node(p.y);
        return (s == 0 ? prof.g1[k] : prof.g2[k]) / scale;
    };
    bd.description = "profile";
    // Start from zero so the iteration has to build the layer itself.
    const SolveResult r = solve_system(d, bd, config(beta, 1e-9), MultiField(d, 2, beta));
    REQUIRE(r.report.converged);
    double err = 0.0;
    for (std::size_t j = 0; j < d.ny(); ++j) {
        const std::size_t k = node(d.y(j));
        err = std::max(err, std::abs(r.field.species(0)(128, j) - prof.g1[k] / scale));
        err = std::max(err, std::abs(r.field.species(1)(128, j) - prof.g2[k] / scale));
    }
    CHECK(err <= 1e-8);
}

TEST_CASE("third species with zero data stays zero") {
    DataParams p;
    p.amplitude = 0.0;
    const SolveResult r =
        solve_system(Domain::centered_square(1.0, 65), harmonic_limit_data(BoundaryKind::ThreeSpeciesBump, p), config(3e2));
    REQUIRE(r.report.converged);
    double m = 0.0;
    for (double v : r.field.species(2).values()) m = std::max(m, v);
    CHECK(m == 0.0);
}

TEST_CASE("nonconvergence is reported, not thrown") {
    SolveConfig c = config(1e3);
    c.max_iters = 1;
    const SolveResult r = solve_system(Domain::centered_square(1.0, 65), flat(), c);
    CHECK_FALSE(r.report.converged);
    CHECK(r.report.iterations == 1);
    CHECK(r.report.residual > c.tol);
}

TEST_CASE("invalid inputs") {
    const Domain d = Domain::centered_square(1.0, 33);
    CHECK_THROWS_AS(solve_system(d, flat(), config(-1.0)), Error);
    BoundaryData neg = flat();
    neg.trace = [](std::size_t, Vec2) { return -0.1; };
    try {
        solve_system(d, neg, config(10.0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeBoundaryData);
    }
    SolveConfig c = config(10.0);
    c.omega = 2.5;
    CHECK_THROWS_AS(solve_system(d, flat(), c), Error);
}

TEST_CASE("under-resolution is flagged") {
    const SolveResult r = solve_system(Domain::centered_square(1.0, 17), flat(), config(1e4, 1e-8));
    CHECK(r.report.under_resolved);
}

TEST_CASE("1D profile") {
    const Profile1D p = solve_profile_1d(10.0, 1025);
    const std::size_t n = p.t.size();
    CHECK(p.report.converged);
    CHECK(p.t.front() == -p.t.back());
    double asym = 0.0;
    for (std::size_t k = 0; k < n; ++k) asym = std::max(asym, std::abs(p.g1[k] - p.g2[n - 1 - k]));
    CHECK(asym <= 1e-8);
    const auto mid = p.at(0.0);
    CHECK(std::abs(mid.first - mid.second) <= 1e-8);
    CHECK(mid.first > 0.0);
    CHECK(mid.first < 1.0);
    CHECK(mid.first == doctest::Approx(0.728).epsilon(1e-3));
    // g1'^2 + g2'^2 - g1^2 g2^2 is conserved and equals 1 at the ends; at t = 0 symmetry gives
    // 2 a^2 - m^4 = 1 with a = g1'(0), m = g1(0).
    const std::size_t c = n / 2;
    const double a = (p.g1[c + 1] - p.g1[c - 1]) / (2.0 * p.dt());
    CHECK(2.0 * a * a - std::pow(mid.first, 4) == doctest::Approx(1.0).epsilon(1e-3));
    for (std::size_t k = 0; k < n; ++k) CHECK(p.g1[k] * p.g2[k] <= mid.first * mid.first + 1e-12);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double tm = 0.5 * (p.t[k] + p.t[k + 1]);
        if (std::abs(tm) < 9.0) continue;
        const double slope = ((p.g1[k + 1] - p.g2[k + 1]) - (p.g1[k] - p.g2[k])) / p.dt();
        CHECK(std::abs(slope - 1.0) <= 1e-2);
    }
    CHECK_THROWS_AS(solve_profile_1d(3.0, 1025), Error);
    CHECK_THROWS_AS(solve_profile_1d(10.0, 100), Error);
    CHECK_THROWS_AS(solve_profile_1d(10.0, 1025, 1e-10, 5), Error);
}
