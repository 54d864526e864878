#include <catch2/catch_amalgamated.hpp>

#include "bonnesen/profiles.hpp"
#include "test_support.hpp"

using namespace bonn;
using testsup::ball_hull;
using testsup::cross_polytope;
using testsup::unit_cube;

TEST_CASE("profile of the cube: constant plateau") {
    ConvexBody cube = unit_cube(3);
    SectionProfile prof = build_profile(cube, Direction(Vec{0, 0, 1}));
    REQUIRE(prof.Q == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(prof.p_min == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(prof.p_max == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(prof.q_lo == Catch::Approx(0.0).margin(1e-7));
    REQUIRE(prof.q_hi == Catch::Approx(1.0).margin(1e-7));
}

TEST_CASE("profile of the octahedron: unique max at 0") {
    ConvexBody oct = cross_polytope(3);
    SectionProfile prof = build_profile(oct, Direction(Vec{0, 0, 1}));
    REQUIRE(prof.Q == Catch::Approx(2.0).epsilon(1e-9));
    REQUIRE(prof.q_lo == Catch::Approx(0.0).margin(1e-7));
    REQUIRE(prof.q_hi == Catch::Approx(0.0).margin(1e-7));
    // area formula 2*(1-|p|)^2
    REQUIRE(prof.area(0.5) == Catch::Approx(0.5).epsilon(1e-12));
    REQUIRE(prof.area(-0.25) == Catch::Approx(2.0 * 0.75 * 0.75).epsilon(1e-12));
}

TEST_CASE("profile rejects degenerate bodies") {
    ConvexBody flat = hull({Vec{0, 0, 0}, Vec{1, 0, 0}, Vec{0, 1, 0}}, 3);
    REQUIRE_THROWS_AS(build_profile(flat, Direction(Vec{0, 0, 1})), DegenerateBody);
}

TEST_CASE("profile max agrees with a dense offset scan: seed 3") {
    ConvexBody k = ball_hull(3, 30, 3);
    SectionProfile prof = build_profile(k, Direction(Vec{0, 0, 1}));
    double dense = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        double p = prof.p_min + (prof.p_max - prof.p_min) * i / 10000.0;
        dense = std::max(dense, prof.area(p));
    }
    REQUIRE(std::fabs(prof.Q - dense) / dense <= 1e-4);
    REQUIRE(prof.Q >= dense - 1e-12);
}

TEST_CASE("level bounds: cube plateau, octahedron closed form") {
    ConvexBody cube = unit_cube(3);
    SectionProfile pc = build_profile(cube, Direction(Vec{0, 0, 1}));
    for (double s : {0.25, 0.5, 1.0}) {
        auto [km, kp] = level_bounds(pc, s);
        REQUIRE(km == Catch::Approx(0.0).margin(1e-6));
        REQUIRE(kp == Catch::Approx(1.0).margin(1e-6));
    }

    ConvexBody oct = cross_polytope(3);
    SectionProfile po = build_profile(oct, Direction(Vec{0, 0, 1}));
    // solve 2*(1-|p|)^2 = 1
    double pstar = 1.0 - std::sqrt(0.5);
    auto [km, kp] = level_bounds(po, 1.0);
    REQUIRE(km == Catch::Approx(-pstar).margin(1e-6));
    REQUIRE(kp == Catch::Approx(pstar).margin(1e-6));
    auto [m2, p2] = level_bounds(po, 2.0);
    REQUIRE(m2 == Catch::Approx(0.0).margin(1e-6));
    REQUIRE(p2 == Catch::Approx(0.0).margin(1e-6));

    REQUIRE_THROWS_AS(level_bounds(po, 0.0), OutOfRange);
    REQUIRE_THROWS_AS(level_bounds(po, 2.1), OutOfRange);
}

TEST_CASE("level bound consistency on random bodies") {
    for (uint64_t seed : {8, 9}) {
        ConvexBody k = ball_hull(3, 26, seed);
        SectionProfile prof = build_profile(k, Direction(Vec{0.3, -0.5, 0.81}));
        double delta = 1e-4 * (prof.p_max - prof.p_min);
        for (double frac : {0.1, 0.35, 0.6, 0.85}) {
            double s = frac * prof.Q;
            auto [km, kp] = level_bounds(prof, s);
            REQUIRE(prof.area(km) >= s - 1e-6 * prof.Q);
            REQUIRE(prof.area(kp) >= s - 1e-6 * prof.Q);
            if (kp < prof.p_max - delta) REQUIRE(prof.area(kp + delta) < s);
            if (km > prof.p_min + delta) REQUIRE(prof.area(km - delta) < s);
        }
    }
}

TEST_CASE("unimodality: no strict local max away from the plateau") {
    for (uint64_t seed : {14, 15}) {
        ConvexBody k = ball_hull(3, 24, seed);
        SectionProfile prof = build_profile(k, Direction(Vec{0.2, 0.3, -0.93}));
        double prev = -1.0;
        bool descending = false;
        for (int i = 0; i <= 200; ++i) {
            double p = prof.p_min + (prof.p_max - prof.p_min) * i / 200.0;
            double a = prof.area(p);
            if (p < prof.q_lo || p > prof.q_hi) {
                if (descending) {
                    // once past the plateau the profile must not rise again
                    REQUIRE(a <= prev + 1e-6 * prof.Q);
                } else if (a < prev - 1e-6 * prof.Q && p > prof.q_hi) {
                    descending = true;
                }
            }
            prev = a;
        }
    }
}

TEST_CASE("max-slab sections are translates") {
    ConvexBody cube = unit_cube(3);
    SectionProfile prof = build_profile(cube, Direction(Vec{0, 0, 1}));
    REQUIRE(prof.q_hi > prof.q_lo);
    auto lo = section(cube, prof.u, prof.q_lo);
    auto hi = section(cube, prof.u, prof.q_hi);
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());
    auto t = translate_between(*lo, *hi, 1e-6);
    REQUIRE(t.has_value());
}

TEST_CASE("layer cake: cube exact, octahedron, random body") {
    ConvexBody cube = unit_cube(3);
    SectionProfile pc = build_profile(cube, Direction(Vec{0, 0, 1}));
    REQUIRE(layer_cake_volume(pc, 64) == Catch::Approx(1.0).margin(1e-6));
    REQUIRE_THROWS_AS(layer_cake_volume(pc, 8), OutOfRange);

    ConvexBody oct = cross_polytope(3);
    SectionProfile po = build_profile(oct, Direction(Vec{0, 0, 1}));
    double lv = layer_cake_volume(po, 4096);
    REQUIRE(std::fabs(lv - 4.0 / 3.0) / (4.0 / 3.0) <= 1e-3);

    ConvexBody k = ball_hull(3, 30, 5);
    SectionProfile pk = build_profile(k, Direction(Vec{0, 0, 1}));
    double lvk = layer_cake_volume(pk, 8192);
    REQUIRE(std::fabs(lvk - k.volume) / k.volume <= 5e-3);
}

TEST_CASE("layer cake agrees with direct offset integration (test oracle)") {
    // p-integration cross-check: integral of area(p) dp by midpoint rule
    ConvexBody k = ball_hull(3, 28, 23);
    SectionProfile prof = build_profile(k, Direction(Vec{0.1, 0.2, 0.97}));
    double direct = 0.0;
    const int n = 20000;
    double h = (prof.p_max - prof.p_min) / n;
    for (int i = 0; i < n; ++i) direct += prof.area(prof.p_min + (i + 0.5) * h) * h;
    double lc = layer_cake_volume(prof, 8192);
    REQUIRE(std::fabs(lc - direct) / direct <= 5e-3);
    REQUIRE(std::fabs(direct - k.volume) / k.volume <= 1e-3);
}

TEST_CASE("profile in d=2") {
    // sections of the unit square along e2 are horizontal chords
    ConvexBody sq = unit_cube(2);
    SectionProfile prof = build_profile(sq, Direction(Vec{0.0, 1.0}));
    REQUIRE(prof.Q == Catch::Approx(1.0));
    REQUIRE(layer_cake_volume(prof, 64) == Catch::Approx(1.0).margin(1e-9));
}
