#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "seglab/error.hpp"
#include "seglab/excess.hpp"
#include "seglab/frequency.hpp"
#include "seglab/interface.hpp"
#include "seglab/measures.hpp"
#include "seglab/rescale.hpp"

using namespace seglab;
using std::numbers::pi;

namespace {

MultiField limit_pair(const Domain& d, const std::function<double(Vec2)>& w, double beta = 0.0) {
    return MultiField({ScalarField::from_function(d, [&](Vec2 p) { return std::max(w(p), 0.0); }),
                       ScalarField::from_function(d, [&](Vec2 p) { return std::max(-w(p), 0.0); })},
                      beta);
}

double tilted(Vec2 p) { return p.y + 0.1 * (p.x * p.x - p.y * p.y); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

}  // namespace

TEST_CASE("frequency of homogeneous harmonic pairs") {
    const Domain d = Domain::centered_square(1.0, 801);
    const MultiField deg1 = limit_pair(d, [](Vec2 p) { return p.y; });
    const MultiField deg2 = limit_pair(d, [](Vec2 p) { return p.x * p.x - p.y * p.y; });
    const MultiField deg3 = limit_pair(d, [](Vec2 p) { return p.x * p.x * p.x - 3.0 * p.x * p.y * p.y; });
    for (double r : {0.2, 0.5, 0.9}) {
        CHECK(std::abs(almgren_frequency(deg1, {0, 0}, r) - 1.0) <= 2e-2);
        CHECK(std::abs(almgren_frequency(deg2, {0, 0}, r) - 2.0) <= 2e-2);
    }
    const FrequencyProfile p3 = frequency_profile(deg3, {0, 0}, 0.2, 0.9, 8);
    for (double v : p3.values) CHECK(std::abs(v - 3.0) <= 2e-2 * 3.0);
    const FrequencyProfile p1 = frequency_profile(deg1, {0, 0}, 0.1, 0.9, 12);
    CHECK(p1.monotone());
    CHECK(p1.radii.size() == 12);
    CHECK(p1.radii.front() == doctest::Approx(0.1));
    CHECK(p1.radii.back() == doctest::Approx(0.9));
    CHECK(p1.radii[1] / p1.radii[0] == doctest::Approx(p1.radii[11] / p1.radii[10]));
}

TEST_CASE("frequency is scale invariant under rescaling") {
    const Domain d = Domain::centered_square(1.0, 401);
    // Smooth positive species keep interpolation error at O(h^2).
    const MultiField mf({ScalarField::from_function(d, [](Vec2 p) { return std::exp(0.3 * p.x) * (1.0 + p.y * p.y); }),
                         ScalarField::from_function(d, [](Vec2 p) { return 1.0 + 0.5 * std::sin(p.x + p.y); })},
                        50.0);
    const MultiField r = rescale_field(mf, 0.5, {0.1, 0.0});
    for (double rad : {0.4, 0.8})
        CHECK(almgren_frequency(r, {0, 0}, rad) ==
              doctest::Approx(almgren_frequency(mf, {0.1, 0.0}, 0.5 * rad)).epsilon(2e-3));
}

TEST_CASE("frequency rejects degenerate fields and oversize disks") {
    const Domain d = Domain::centered_square(1.0, 101);
    const MultiField zero(d, 2, 1.0);
    CHECK(code_of([&] { almgren_frequency(zero, {0, 0}, 0.5); }) == ErrorCode::DegenerateField);
    const MultiField one = limit_pair(d, [](Vec2 p) { return p.y; });
    CHECK(code_of([&] { almgren_frequency(one, {0, 0}, 1.0); }) == ErrorCode::DiskOverflow);
}

TEST_CASE("best-fit vector and excess examples") {
    const Domain d = Domain::centered_square(1.3, 1041);
    const ScalarField w = ScalarField::from_function(d, tilted);
    const Vec2 e0 = best_fit_vector(w, {0, 0}, 1.0);
    CHECK(std::abs(e0.x) <= 1e-8);
    CHECK(std::abs(e0.y - 1.0) <= 1e-8);
    const Vec2 e1 = best_fit_vector(w, {0.2, 0}, 1.0);
    CHECK(std::abs(e1.x - 0.04) <= 1e-6);
    CHECK(std::abs(e1.y - 1.0) <= 1e-6);

    const ScalarField lin = ScalarField::from_function(d, [](Vec2 p) { return 0.6 * p.x + 0.8 * p.y; });
    CHECK(excess(lin, {0.1, -0.2}, 0.7, {0.6, 0.8}) <= 1e-12);
    CHECK(std::abs(excess(w, {0, 0}, 1.0, {0, 1}) - 0.02 * pi) <= 1e-4);
    CHECK(std::abs(excess(w, {0, 0}, 0.5, {0, 1}) - 0.02 * pi * 0.25) <= 1e-4);
}

TEST_CASE("dyadic excess sequence of a smooth quadratic") {
    const Domain d = Domain::centered_square(1.3, 1041);
    const ScalarField w = ScalarField::from_function(d, tilted);
    const double theta = 0.3;
    const ExcessSequence s = dyadic_excess_sequence(w, {0, 0}, theta, 3, 1e4);
    REQUIRE(s.E.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(s.scales[k] == doctest::Approx(std::pow(theta, k)));
        CHECK(s.E[k] == doctest::Approx(0.02 * pi * std::pow(theta, 2.0 * k)).epsilon(2e-3));
    }
    for (std::size_t k = 1; k < 4; ++k) CHECK(s.E[k] / s.E[k - 1] == doctest::Approx(theta * theta).epsilon(5e-3));
    CHECK(s.max_drift() <= 1e-8);
    CHECK(s.drift[0] == 0.0);
    CHECK_FALSE(s.r_beta_estimate.has_value());
    CHECK(std::isnan(s.r_beta_ratio()));
    CHECK(s.alpha() == doctest::Approx(std::log(2.0) / std::abs(std::log(theta))));

    CHECK(code_of([&] { dyadic_excess_sequence(w, {0, 0}, theta, 6, 1e4); }) == ErrorCode::ScaleBelowResolution);
    CHECK_THROWS_AS(dyadic_excess_sequence(w, {0, 0}, 0.5, 2, 1e4), Error);
    CHECK_THROWS_AS(dyadic_excess_sequence(w, {0, 0}, 0.0, 2, 1e4), Error);
}

TEST_CASE("excess sequence is consistent with rescaling by theta") {
    const Domain d = Domain::centered_square(1.1, 881);
    auto f = [](Vec2 p) { return p.y + 0.2 * p.x * p.y + 0.15 * p.x * p.x * p.x - 0.1 * p.y * p.y; };
    const MultiField mf = limit_pair(d, f, 1e4);
    const double theta = 0.3;
    const Vec2 c{0.02, -0.01};
    const ExcessSequence orig = dyadic_excess_sequence(mf.difference(), c, theta, 3, mf.beta());
    const MultiField r = rescale_field(mf, theta, c, d);
    CHECK(r.beta() == doctest::Approx(1e4 * std::pow(theta, 4)));
    const ExcessSequence resc = dyadic_excess_sequence(r.difference(), {0, 0}, theta, 2, r.beta());
    for (std::size_t k = 0; k < 3; ++k) CHECK(resc.E[k] == doctest::Approx(orig.E[k + 1]).epsilon(1e-2));
}

TEST_CASE("interface of a linear field") {
    const Domain d = Domain::centered_square(1.0, 201);
    const ScalarField w = ScalarField::from_function(d, [](Vec2 p) { return p.y - 0.3 * p.x; });
    const InterfaceCurve c = extract_interface(w, Region::disk({0, 0}, 0.8), Vec2{0, 1});
    REQUIRE(c.is_graph);
    CHECK(c.components == 1);
    CHECK(c.skipped_zero_cells == 0);
    CHECK(std::abs(c.lipschitz_constant - 0.3) <= 1e-6);
    CHECK(std::abs(lipschitz_constant(c, {0, 1}) - 0.3) <= 1e-6);
    for (const Vec2& v : c.vertices) CHECK(std::abs(v.y - 0.3 * v.x) <= 1e-12);
    for (std::size_t k = 1; k < c.graph_samples.size(); ++k)
        CHECK(c.graph_samples[k].xp > c.graph_samples[k - 1].xp);
    // The default direction is the best-fit vector (-0.3, 1) / |.|, in which the line is flat.
    const InterfaceCurve fit = extract_interface(w, Region::disk({0, 0}, 0.8));
    CHECK(fit.graph_direction.x == doctest::Approx(-0.3 / std::hypot(0.3, 1.0)));
    CHECK(fit.lipschitz_constant <= 1e-9);

    std::vector<double> xp, guess;
    for (const auto& g : c.graph_samples) {
        xp.push_back(g.xp);
        guess.push_back(0.0);
    }
    const auto exact = zero_set_graph([](Vec2 p) { return p.y - 0.3 * p.x; }, c.graph_direction, xp, guess);
    CHECK(hausdorff_distance(c.vertices, exact) <= 1e-12);
}

TEST_CASE("polyline Lipschitz constants and Hausdorff distance") {
    const InterfaceCurve two = InterfaceCurve::from_polyline({{-1.0, -0.1}, {0.0, 0.0}, {1.0, 0.5}}, 0.01, {0, 1});
    CHECK(two.is_graph);
    CHECK(std::abs(two.lipschitz_constant - 0.5) <= 1e-6);
    const std::vector<Vec2> a{{-1, 0}, {1, 0}};
    const std::vector<Vec2> b{{-1, 0.1}, {0, 0.1}, {1, 0.1}};
    CHECK(hausdorff_distance(a, b) == doctest::Approx(0.1));
    CHECK(hausdorff_distance(a, a) == 0.0);
    const std::vector<Vec2> c{{-1, 0}, {0.5, 0}, {0.5, 0.4}};
    CHECK(hausdorff_distance(a, c) == doctest::Approx(0.5));
    CHECK_THROWS_AS(hausdorff_distance(a, {}), Error);
}

TEST_CASE("interface failure modes") {
    const Domain d = Domain::centered_square(1.0, 101);
    const ScalarField pos = ScalarField::from_function(d, [](Vec2 p) { return 1.0 + p.y * p.y; });
    CHECK(code_of([&] { extract_interface(pos, Region::everything()); }) == ErrorCode::NoInterface);

    const ScalarField circle = ScalarField::from_function(d, [](Vec2 p) { return p.x * p.x + p.y * p.y - 0.25; });
    const InterfaceCurve c = extract_interface(circle, Region::everything(), Vec2{0, 1});
    CHECK_FALSE(c.is_graph);
    CHECK(std::isnan(c.lipschitz_constant));
    CHECK(code_of([&] { lipschitz_constant(c, {0, 1}); }) == ErrorCode::NonGraphCurve);

    // A band where w vanishes identically is skipped and counted.
    const ScalarField band = ScalarField::from_function(
        d, [](Vec2 p) { return p.y > 0.1 ? p.y - 0.1 : (p.y < -0.1 ? p.y + 0.1 : 0.0); });
    const InterfaceCurve b = extract_interface(band, Region::everything(), Vec2{0, 1});
    CHECK(b.skipped_zero_cells > 0);
    CHECK(b.is_graph);
}

TEST_CASE("pointwise measures") {
    const Domain d = Domain::centered_square(1.0, 201);
    const ScalarField flat = ScalarField::from_function(d, [](Vec2 p) { return p.y; });
    CHECK(min_gradient_norm(flat, Region::disk({0, 0}, 0.5)) == doctest::Approx(1.0).epsilon(1e-12));

    // Brute-force oracle of the closed form |(0.2 x, 1 - 0.2 y)| over B_{1/2}.
    double oracle = INFINITY;
    for (int i = 0; i <= 2000; ++i)
        for (int j = 0; j <= 2000; ++j) {
            const double x = -0.5 + i * 5e-4, y = -0.5 + j * 5e-4;
            if (x * x + y * y <= 0.25) oracle = std::min(oracle, std::hypot(0.2 * x, 1.0 - 0.2 * y));
        }
    CHECK(oracle == doctest::Approx(0.9).epsilon(1e-6));
    const ScalarField w = ScalarField::from_function(d, tilted);
    CHECK(std::abs(min_gradient_norm(w, Region::disk({0, 0}, 0.5)) - oracle) <= 1e-3);

    const MultiField pair = limit_pair(d, [](Vec2 p) { return p.y; });
    const InterfaceCurve curve = extract_interface(pair.difference(), Region::disk({0, 0}, 0.5));
    CHECK(interface_min_sum(pair, curve).value == doctest::Approx(0.0));

    CHECK(code_of([&] { nondominant_sup(pair, Region::everything()); }) == ErrorCode::OnlyTwoSpecies);
    MultiField three(d, 3, 10.0);
    three.species(2)(100, 100) = 0.25;
    three.species(2)(150, 20) = 0.5;
    const PointValue s = nondominant_sup(three, Region::disk({0, 0}, 0.5));
    CHECK(s.value == 0.25);
    CHECK(s.at.x == doctest::Approx(0.0));
    CHECK(code_of([&] { mixed_term_integrals(pair, Region::disk({0, 0}, 1.2)); }) == ErrorCode::RegionOutsideDomain);
}

TEST_CASE("mixed terms of a limit pair vanish with h") {
    double prev_r = 0, prev_g = 0;
    for (std::size_t n : {101, 201, 401}) {
        const MultiField pair = limit_pair(Domain::centered_square(1.0, n), tilted, 100.0);
        const MixedTerms m = mixed_term_integrals(pair, Region::disk({0, 0}, 0.75));
        const double h = 2.0 / static_cast<double>(n - 1);
        CHECK(m.reaction <= 100.0 * h);
        CHECK(m.gradient <= 10.0 * h);
        if (prev_g > 0) {
            CHECK(m.gradient < 0.6 * prev_g);
            CHECK(m.reaction < 0.6 * prev_r);
        }
        prev_r = m.reaction;
        prev_g = m.gradient;
    }
}
