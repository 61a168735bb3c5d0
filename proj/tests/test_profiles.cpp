#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "momentkit/profiles.hpp"
#include "momentkit/quadrature.hpp"

using namespace momentkit;

TEST_SUITE_BEGIN("profiles");

TEST_CASE("profile integrals match their closed forms") {
    const Grid g = Grid::span(0.0, 6.0, 1e-3);
    const double a = 2.0, b = 3.0;
    for (const std::string& name : profile_names()) {
        const GridFunction f = make_profile(name, g, a, b);
        const double oracle = profile_integral(name, g, a, b);
        const double measured = integrate(f);
        INFO(name);
        if (name == "indicator" || name == "zero" || name == "one" ||
            name == "identity" || name == "ramp")
            CHECK(std::abs(measured - oracle) < 1e-10); // piecewise linear: exact
        else
            CHECK(std::abs(measured - oracle) < 1e-6); // trapezoid on smooth parts
    }
}

TEST_CASE("compact profiles carry the support hint, whole-axis ones cover the grid") {
    const Grid g = Grid::span(0.0, 6.0, 1e-2);
    for (const char* name : {"indicator", "bump", "sin", "ramp"}) {
        const GridFunction f = make_profile(name, g, 1.5, 3.0);
        REQUIRE(f.support().has_value());
        CHECK(f.support()->a == 1.5);
        CHECK(f.support()->b == 3.0);
        CHECK(f.value_at(1.2) == 0.0);
        CHECK(f.value_at(4.0) == 0.0);
    }
    const GridFunction one = make_profile("one", g, 1.5, 3.0);
    REQUIRE(one.support().has_value());
    CHECK(one.support()->a == 0.0);
    CHECK(one.support()->b == doctest::Approx(6.0));
    CHECK(one.value_at(5.9) == 1.0);
}

TEST_CASE("edge samples sit at full height") {
    const Grid g = Grid::span(0.0, 6.0, 1e-3);
    const GridFunction ind = make_profile("indicator", g, 2.0, 3.0);
    CHECK(ind[g.index_of(2.0)] == 1.0);
    CHECK(ind[g.index_of(3.0)] == 1.0);
    CHECK(ind[g.index_of(2.0) - 1] == 0.0);
    const GridFunction ramp = make_profile("ramp", g, 2.0, 3.0);
    CHECK(ramp[g.index_of(3.0)] == 1.0);
    const GridFunction sn = make_profile("sin", g, 2.0, 3.0);
    CHECK(sn[g.index_of(2.0)] == std::sin(2.0));
    CHECK(sn[g.index_of(3.0)] == std::sin(3.0));
}

TEST_CASE("unknown names and bad windows are rejected") {
    const Grid g = Grid::span(0.0, 2.0, 1e-2);
    CHECK_THROWS_AS(make_profile("box", g, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_profile("bump", g, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_profile("bump", g, 0.5, 3.5), std::invalid_argument);
}

TEST_CASE("transform oracle values at reference points") {
    const Grid g = Grid::span(0.0, 6.0, 1e-3);
    const double a = 2.0, b = 3.0;

    // indicator, n = 2, s >= b: (b^2 - a^2) / s^2
    auto v = profile_transform_value("indicator", 2, 4.0, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(5.0 / 16.0).epsilon(1e-12));

    // indicator inside the window: (s^2 - a^2) / s^2 at s = 2.5
    v = profile_transform_value("indicator", 2, 2.5, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx((6.25 - 4.0) / 6.25).epsilon(1e-12));

    // identity: n s / (n + 1)
    v = profile_transform_value("identity", 3, 1.7, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(3.0 * 1.7 / 4.0).epsilon(1e-12));

    // one: constant 1 everywhere in the window
    v = profile_transform_value("one", 7, 2.9, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(1.0).epsilon(1e-12));

    // zero: 0
    v = profile_transform_value("zero", 5, 1.0, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == 0.0);

    // sin has no closed form here
    CHECK_FALSE(profile_transform_value("sin", 4, 2.0, g, a, b).has_value());

    // below the support the average is empty
    v = profile_transform_value("bump", 4, 1.5, g, a, b);
    REQUIRE(v.has_value());
    CHECK(*v == 0.0);
}

TEST_CASE("bump transform oracle integrates the cubic exactly") {
    // T_n bump(s) for s in [a, b]: closed cubic antiderivative, hand-checked
    // against brute quadrature here once at high resolution.
    const Grid g = Grid::span(0.0, 6.0, 1e-3);
    const double a = 2.0, b = 3.0;
    const int n = 4;
    const double s = 2.75;
    const auto v = profile_transform_value("bump", n, s, g, a, b);
    REQUIRE(v.has_value());

    // Brute reference: (n/s^n) int_a^s t^(n-1) (t-a)(b-t) dt on a fine grid.
    const std::size_t m = 2000000;
    const double lo = a, hi = s, hh = (hi - lo) / m;
    long double acc = 0.0L;
    for (std::size_t i = 0; i <= m; ++i) {
        const long double t = lo + hh * i;
        const long double w = (i == 0 || i == m) ? 0.5L : 1.0L;
        acc += w * std::pow(t, n - 1) * (t - a) * (b - t);
    }
    const double brute = static_cast<double>(
        (4.0L / std::pow((long double)s, 4)) * acc * hh);
    CHECK(*v == doctest::Approx(brute).epsilon(1e-9));
}

TEST_SUITE_END();
