#include <catch2/catch_amalgamated.hpp>

#include "bonnesen/measure.hpp"
#include "bonnesen/oracle.hpp"
#include "test_support.hpp"

using namespace bonn;
using testsup::ball_hull;
using testsup::ball_points;
using testsup::cross_polytope;
using testsup::standard_simplex;
using testsup::unit_cube;

TEST_CASE("hull drops interior points of the cube") {
    std::vector<Vec> pts;
    for (int mask = 0; mask < 8; ++mask)
        pts.push_back(Vec{static_cast<double>(mask & 1), static_cast<double>((mask >> 1) & 1),
                          static_cast<double>((mask >> 2) & 1)});
    pts.push_back(Vec{0.5, 0.5, 0.5});
    ConvexBody k = hull(pts, 3);
    REQUIRE(k.vertices.size() == 8);
    REQUIRE(k.intrinsic_dim == 3);
    REQUIRE(k.facets.size() == 6);
}

TEST_CASE("triangle hull in the plane") {
    ConvexBody k = hull({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}}, 2);
    REQUIRE(k.vertices.size() == 3);
    REQUIRE(k.facets.size() == 3);
    REQUIRE(k.volume == Catch::Approx(0.5));
}

TEST_CASE("hull vertices are extreme: ball cloud, seed 7") {
    // oracle: a reported vertex must lie strictly outside the hull of the rest
    auto pts = ball_points(3, 50, 7);
    ConvexBody k = hull(pts, 3);
    REQUIRE(k.vertices.size() >= 4);
    for (size_t i = 0; i < k.vertices.size(); ++i) {
        std::vector<Vec> rest;
        for (size_t j = 0; j < k.vertices.size(); ++j)
            if (j != i) rest.push_back(k.vertices[j]);
        REQUIRE(distance_to_hull(rest, k.vertices[i]) > 1e-9);
    }
}

TEST_CASE("hull rejects unsupported dimensions and mixed input") {
    REQUIRE_THROWS_AS(hull({Vec{0.0}}, 1), Unsupported);
    REQUIRE_THROWS_AS(hull({Vec{0.0, 0.0}, Vec{0.0, 0.0, 0.0}}, 2), DimensionMismatch);
}

TEST_CASE("hull idempotence on random bodies") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        ConvexBody k = ball_hull(3, 25, seed);
        ConvexBody k2 = hull(k.vertices, 3);
        REQUIRE(k2.vertices.size() == k.vertices.size());
        for (const Vec& v : k.vertices) {
            bool found = false;
            for (const Vec& w : k2.vertices)
                if (dist(v, w) <= 1e-9) found = true;
            REQUIRE(found);
        }
        REQUIRE(k2.volume == Catch::Approx(k.volume).epsilon(1e-12));
    }
}

TEST_CASE("vertex invariants: facets contain all vertices") {
    for (uint64_t seed : {11, 12, 13}) {
        ConvexBody k = ball_hull(3, 30, seed);
        double eps = 1e-9 * coordinate_scale(k);
        for (const Halfspace& f : k.facets) {
            REQUIRE(norm(f.normal) == Catch::Approx(1.0).margin(1e-12));
            int supporting = 0;
            for (const Vec& v : k.vertices) {
                REQUIRE(dot(f.normal, v) <= f.offset + eps);
                if (dot(f.normal, v) >= f.offset - 1e-7) ++supporting;
            }
            REQUIRE(supporting >= k.intrinsic_dim);
        }
    }
}

TEST_CASE("4d hull: cross-polytope and cube") {
    ConvexBody c4 = unit_cube(4);
    REQUIRE(c4.vertices.size() == 16);
    REQUIRE(c4.volume == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(c4.facets.size() == 8);

    ConvexBody x4 = cross_polytope(4);
    REQUIRE(x4.vertices.size() == 8);
    // vol of d-cross-polytope = 2^d / d!
    REQUIRE(x4.volume == Catch::Approx(16.0 / 24.0).epsilon(1e-12));
    REQUIRE(x4.facets.size() == 16);
}

TEST_CASE("degenerate hulls keep intrinsic data") {
    // flat square in R^3
    std::vector<Vec> pts = {Vec{0, 0, 0.25}, Vec{1, 0, 0.25}, Vec{0, 1, 0.25}, Vec{1, 1, 0.25}};
    ConvexBody k = hull(pts, 3);
    REQUIRE(k.intrinsic_dim == 2);
    REQUIRE(k.volume == 0.0);
    REQUIRE(k.intrinsic_volume == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(k.facets.empty());
    REQUIRE(k.vertices.size() == 4);

    // segment
    ConvexBody s = hull({Vec{0, 0, 0}, Vec{0.5, 0.5, 0.5}, Vec{1, 1, 1}}, 3);
    REQUIRE(s.intrinsic_dim == 1);
    REQUIRE(s.vertices.size() == 2);
    REQUIRE(s.intrinsic_volume == Catch::Approx(std::sqrt(3.0)).epsilon(1e-12));

    // point
    ConvexBody p = hull({Vec{2, 3, 4}}, 3);
    REQUIRE(p.intrinsic_dim == 0);
    REQUIRE(p.vertices.size() == 1);
}

TEST_CASE("volume: canonical bodies") {
    REQUIRE(unit_cube(3).volume == Catch::Approx(1.0).epsilon(1e-12));
    for (int d = 2; d <= 4; ++d) {
        double fact = 1.0;
        for (int i = 2; i <= d; ++i) fact *= i;
        REQUIRE(standard_simplex(d).volume == Catch::Approx(1.0 / fact).epsilon(1e-12));
    }
    REQUIRE(cross_polytope(3).volume == Catch::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("volume agrees with the grid oracle: seed 11") {
    ConvexBody k = ball_hull(3, 30, 11);
    double gv = grid_volume(k, 200);
    REQUIRE(std::fabs(k.volume - gv) / k.volume <= 0.02);
}

TEST_CASE("mass centroid is affine-equivariant") {
    ConvexBody k = ball_hull(3, 20, 17);
    Vec t{0.3, -1.2, 2.0};
    ConvexBody kt = hull([&] {
        std::vector<Vec> pts;
        for (const Vec& v : k.vertices) pts.push_back(2.0 * v + t);
        return pts;
    }(), 3);
    Vec expect = 2.0 * k.centroid + t;
    REQUIRE(dist(kt.centroid, expect) <= 1e-9);
}
