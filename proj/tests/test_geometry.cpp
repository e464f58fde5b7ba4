#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "jungmeb/geometry.hpp"
#include "test_support.hpp"

using namespace jungmeb;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0, 0}, {1, 0, 0}) == 1.0);
    CHECK(distance({1, 1, 1}, {1, -1, -1}) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(distance({0.3, -4.0, 2.5}, {0.3, -4.0, 2.5}) == 0.0);
}

TEST_CASE("diameter returns the widest pair") {
    SUBCASE("small triangle") {
        PointSet ps(std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0.5, 0.5, 0}});
        const auto d = diameter(ps);
        CHECK(d.value == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(d.first == 0);
        CHECK(d.second == 1);
    }
    SUBCASE("regular tetrahedron ties break to the smallest pair") {
        PointSet ps(std::vector<Point3>{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
        const auto d = diameter(ps);
        CHECK(d.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
        CHECK(d.first == 0);
        CHECK(d.second == 1);
    }
    SUBCASE("single point") {
        PointSet ps(std::vector<Point3>{{3, 4, 5}});
        const auto d = diameter(ps);
        CHECK(d.value == 0.0);
        CHECK(d.first == 0);
        CHECK(d.second == 0);
    }
    SUBCASE("pair attains the maximum over a full rescan") {
        testutil::Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Point3> pts;
            const int n = 2 + static_cast<int>(rng.raw() % 30);
            for (int i = 0; i < n; ++i)
                pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)});
            PointSet ps(pts);
            const auto d = diameter(ps);
            CHECK(distance(ps.point(d.first), ps.point(d.second)) ==
                  doctest::Approx(d.value).epsilon(1e-15));
            for (int i = 0; i < ps.size(); ++i)
                for (int j = i + 1; j < ps.size(); ++j)
                    CHECK(distance(ps.point(i), ps.point(j)) <= d.value * (1 + 1e-15));
        }
    }
}

TEST_CASE("sphere_through puts the support on the frontier") {
    const Tolerance tol;

    SUBCASE("two points make a diametral sphere") {
        const Sphere s = sphere_through(std::array<Point3, 2>{{{1, 0, 0}, {-1, 0, 0}}});
        CHECK(s.center == Point3{0, 0, 0});
        CHECK(s.radius == 1.0);
    }
    SUBCASE("two-point radius is exactly half the distance") {
        testutil::Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const Point3 a{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
            const Point3 b{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
            const Sphere s = sphere_through(std::array{a, b});
            CHECK(s.radius == 0.5 * distance(a, b));
        }
    }
    SUBCASE("unit corner tetrahedron") {
        const Sphere s = sphere_through(
            std::array<Point3, 4>{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
        CHECK(s.center.x == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(s.center.y == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(s.center.z == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(s.radius == doctest::Approx(std::sqrt(0.75)).epsilon(1e-13));
    }
    SUBCASE("equilateral triangle of side 1 has circumradius 1/sqrt(3)") {
        const Sphere s = sphere_through(std::array<Point3, 3>{
            {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0}}});
        CHECK(s.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    }
    SUBCASE("collinear triple is degenerate") {
        CHECK_THROWS_AS(
            sphere_through(std::array<Point3, 3>{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}}),
            DegenerateSupport);
    }
    SUBCASE("coplanar quadruple is degenerate") {
        CHECK_THROWS_AS(sphere_through(std::array<Point3, 4>{
                            {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}}),
                        DegenerateSupport);
    }
    SUBCASE("unsupported sizes are rejected") {
        CHECK_THROWS_AS(sphere_through(std::array<Point3, 1>{{{0, 0, 0}}}),
                        std::invalid_argument);
    }
    SUBCASE("three-point center lies in the triangle plane") {
        testutil::Rng rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            const Point3 a{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
            const Point3 b{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
            const Point3 c{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
            Sphere s;
            try {
                s = sphere_through(std::array{a, b, c});
            } catch (const DegenerateSupport&) {
                continue;
            }
            const Vec3 n = cross(b - a, c - a);
            const double plane_dist = std::abs(dot(s.center - a, n)) / norm(n);
            CHECK(plane_dist <= 1e-12 * s.radius);
        }
    }
    SUBCASE("well-conditioned supports land on the frontier within 1e-12 relative") {
        // rotated copies of well-separated templates on a random sphere
        const std::array<Vec3, 4> tetra{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
        testutil::Rng rng(17);
        for (int trial = 0; trial < 60; ++trial) {
            const auto rot = testutil::random_rotation(rng);
            const Point3 center{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const double radius = rng.uniform(0.2, 5.0);
            const int k = 2 + static_cast<int>(rng.raw() % 3);
            std::vector<Point3> support;
            for (int i = 0; i < k; ++i)
                support.push_back(center +
                                  (radius / std::sqrt(3.0)) * rot.apply(tetra[static_cast<std::size_t>(i)]));
            const Sphere s = sphere_through(support);
            for (const Point3& p : support)
                CHECK(std::abs(distance(s.center, p) - s.radius) <= 1e-12 * std::max(1.0, s.radius));
        }
    }
    (void)tol;
}

TEST_CASE("contains and on_frontier predicates") {
    const Sphere unit{{0, 0, 0}, 1.0};
    const Tolerance tol;

    CHECK(contains(unit, {0, 0, 0}, tol));
    CHECK(contains(unit, {1, 0, 0}, tol));
    CHECK_FALSE(contains(unit, {1.1, 0, 0}, tol));

    CHECK(on_frontier(unit, {1, 0, 0}, tol));
    CHECK_FALSE(on_frontier(unit, {0, 0, 0}, tol));
    CHECK(on_frontier(unit, {1.0 + 1e-12, 0, 0}, tol));

    SUBCASE("contains is monotone in eps") {
        testutil::Rng rng(19);
        for (int trial = 0; trial < 200; ++trial) {
            const Point3 p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
            const Tolerance tight(1e-10);
            const Tolerance loose(1e-6);
            if (contains(unit, p, tight)) CHECK(contains(unit, p, loose));
        }
    }
}

TEST_CASE("initial_sphere is mean-centered with the anchor on the frontier") {
    const Tolerance tol;
    SUBCASE("symmetric pair") {
        PointSet ps(std::vector<Point3>{{1, 0, 0}, {-1, 0, 0}});
        const auto r = initial_sphere(ps);
        CHECK(r.sphere.center == Point3{0, 0, 0});
        CHECK(r.sphere.radius == 1.0);
        CHECK(r.anchor == 0);
    }
    SUBCASE("single point") {
        PointSet ps(std::vector<Point3>{{2, 3, 4}});
        const auto r = initial_sphere(ps);
        CHECK(r.sphere.radius == 0.0);
        CHECK(r.anchor == 0);
    }
    SUBCASE("right triangle with a distance tie") {
        PointSet ps(std::vector<Point3>{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
        const auto r = initial_sphere(ps);
        CHECK(r.sphere.center.x == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(r.sphere.center.y == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(r.sphere.radius == doctest::Approx(std::sqrt(20.0) / 3.0).epsilon(1e-14));
        CHECK(r.anchor == 1);  // tie with index 2 broken by the smaller index
    }
    SUBCASE("contains every point and the anchor is on the frontier") {
        testutil::Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Point3> pts;
            const int n = 1 + static_cast<int>(rng.raw() % 40);
            for (int i = 0; i < n; ++i)
                pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)});
            PointSet ps(pts);
            const auto r = initial_sphere(ps);
            for (int i = 0; i < ps.size(); ++i) CHECK(contains(r.sphere, ps.point(i), tol));
            CHECK(on_frontier(r.sphere, ps.point(r.anchor), tol));
        }
    }
}

TEST_CASE("PointSet deduplicates exactly and validates input") {
    SUBCASE("first occurrence wins, original indices kept") {
        PointSet ps(std::vector<Point3>{{5, 5, 5}, {5, 5, 5}, {1, 0, 0}});
        REQUIRE(ps.size() == 2);
        CHECK(ps.point(0) == Point3{5, 5, 5});
        CHECK(ps.point(1) == Point3{1, 0, 0});
        CHECK(ps.original_index(0) == 0);
        CHECK(ps.original_index(1) == 2);
    }
    SUBCASE("negative zero coincides with zero") {
        PointSet ps(std::vector<Point3>{{0, 0, 0}, {-0.0, 0, 0}});
        CHECK(ps.size() == 1);
    }
    SUBCASE("empty input is rejected") {
        CHECK_THROWS_AS(PointSet(std::vector<Point3>{}), EmptyInput);
    }
    SUBCASE("non-finite coordinates are rejected") {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(PointSet(std::vector<Point3>{{0, nan, 0}}), NonFiniteCoordinate);
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(PointSet(std::vector<Point3>{{inf, 0, 0}}), NonFiniteCoordinate);
    }
}

TEST_CASE("Tolerance validates its range") {
    CHECK(Tolerance().eps() == 1e-9);
    CHECK(Tolerance(1e-6).eps() == 1e-6);
    CHECK_THROWS_AS(Tolerance(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance(-1e-9), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance(1e-3), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance(0.5), std::invalid_argument);
}
