#include "geochrom/error.hpp"
#include "geochrom/geometry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace geochrom;

TEST_CASE("orientation signs and argument swaps")
{
    const Point p{0, 0}, q{4, 0}, r{1, 3};
    CHECK(orientation(p, q, r) == Orientation::CounterClockwise);
    CHECK(orientation(q, p, r) == Orientation::Clockwise);
    CHECK(orientation(p, r, q) == Orientation::Clockwise);
    CHECK(orientation(p, q, Point{8, 0}) == Orientation::Collinear);
    CHECK(orientation(q, p, Point{8, 0}) == Orientation::Collinear);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> c(-kCoordinateLimit, kCoordinateLimit);
    for (int i = 0; i < 2000; ++i) {
        const Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
        const int o = static_cast<int>(orientation(a, b, d));
        CHECK(static_cast<int>(orientation(b, a, d)) == -o);
        CHECK(static_cast<int>(orientation(a, d, b)) == -o);
        CHECK(static_cast<int>(orientation(d, b, a)) == -o);
        CHECK(static_cast<int>(orientation(b, d, a)) == o);
    }
}

TEST_CASE("orientation is exact at the coordinate limit")
{
    const std::int64_t L = kCoordinateLimit;
    CHECK(orientation({-L, -L}, {L, L}, {L, -L}) == Orientation::Clockwise);
    CHECK(orientation({-L, -L}, {L, L}, {L - 1, L - 1}) == Orientation::Collinear);
    CHECK(orientation({-L, -L}, {L, L}, {L - 1, L}) == Orientation::CounterClockwise);
}

TEST_CASE("coordinate range is enforced")
{
    CHECK_NOTHROW(make_point(kCoordinateLimit, -kCoordinateLimit));
    CHECK_THROWS_AS(make_point(kCoordinateLimit + 1, 0), Error);
    try {
        make_point(0, -kCoordinateLimit - 1);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CoordinateOutOfRange);
    }
    CHECK(in_range({0, 0}));
    CHECK_FALSE(in_range({0, kCoordinateLimit + 1}));
}

TEST_CASE("segments_cross on hand-made cases")
{
    CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {3, 0}, {0, 3}));  // stops short
    CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}));  // collinear overlap
    CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {1, 0}, {1, 5}));  // T-junction
    CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {0, 1}, {2, 1}));  // parallel
    try {
        segments_cross({0, 0}, {2, 2}, {2, 2}, {3, 0});
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SharedEndpoint);
    }
}

TEST_CASE("segments_cross agrees with the rational oracle")
{
    std::mt19937_64 rng(11);
    for (std::int64_t range : {5, 40, 1'000'000'000}) {
        std::uniform_int_distribution<std::int64_t> c(-range, range);
        int agreements = 0;
        for (int i = 0; i < 20000; ++i) {
            const Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)}, q{c(rng), c(rng)};
            if (a == b || a == p || a == q || b == p || b == q || p == q)
                continue;
            REQUIRE(segments_cross(a, b, p, q) == oracle::rational_cross(a, b, p, q));
            REQUIRE(segments_cross_unchecked(a, b, p, q) == segments_cross(a, b, p, q));
            ++agreements;
        }
        CHECK(agreements > 15000);
    }
}

TEST_CASE("general position")
{
    const std::vector<Point> good{{0, 0}, {3, 1}, {1, 4}, {5, 5}};
    const std::vector<Point> collinear{{0, 0}, {1, 1}, {2, 2}, {5, 0}};
    const std::vector<Point> repeated{{0, 0}, {1, 3}, {0, 0}};
    CHECK(is_general_position(good));
    CHECK_FALSE(is_general_position(collinear));
    CHECK_FALSE(is_general_position(repeated));
}

TEST_CASE("convex crossing rule")
{
    CHECK(convex_crossing_rule(4, 1, 3, 2, 4));
    CHECK(convex_crossing_rule(4, 4, 2, 3, 1));
    CHECK_FALSE(convex_crossing_rule(4, 1, 2, 3, 4));
    CHECK_FALSE(convex_crossing_rule(4, 1, 4, 2, 3));
    CHECK(convex_crossing_rule(7, 1, 6, 2, 7));
    CHECK_THROWS_AS(convex_crossing_rule(3, 1, 2, 3, 1), Error);
    CHECK_THROWS_AS(convex_crossing_rule(5, 0, 2, 3, 4), Error);
    try {
        convex_crossing_rule(5, 1, 3, 3, 5);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SharedEndpoint);
    }
}

TEST_CASE("regular polygons are in convex general position")
{
    for (int n = 3; n <= 40; ++n) {
        const auto pts = regular_polygon(n);
        REQUIRE(static_cast<int>(pts.size()) == n);
        CHECK(is_general_position(pts));
        for (int i = 0; i < n; ++i)
            CHECK(orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == Orientation::CounterClockwise);
    }
}

TEST_CASE("arc points stay on the requested arc")
{
    const auto pts = arc_points(5, 0.25 * 3.14159265358979, 0.5 * 3.14159265358979, 1'000'000);
    REQUIRE(pts.size() == 5);
    for (const auto& p : pts) {
        CHECK(p.y > 700'000);
        CHECK(p.x >= -710'000);
        CHECK(p.x <= 710'000);
    }
    CHECK(is_general_position(std::vector<Point>(pts.begin(), pts.end())));
}
