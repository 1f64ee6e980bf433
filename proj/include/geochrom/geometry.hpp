#pragma once

// Exact integer predicates for straight-line drawings.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace geochrom {

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Throws CoordinateOutOfRange unless |x|,|y| <= 2^30.
Point make_point(std::int64_t x, std::int64_t y);
bool in_range(const Point& p) noexcept;

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of the doubled signed area of (p, q, r).
Orientation orientation(const Point& p, const Point& q, const Point& r) noexcept;

/// Proper crossing of the open segments (a1,a2) and (b1,b2). Collinear
/// touching or overlap yields false. Throws SharedEndpoint when the
/// four endpoints are not pairwise distinct.
bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

/// Same predicate without the endpoint check; for hot loops whose callers
/// already guarantee disjointness.
bool segments_cross_unchecked(const Point& a1, const Point& a2, const Point& b1,
                              const Point& b2) noexcept;

/// Pairwise distinct and no three collinear.
bool is_general_position(std::span<const Point> points);

/// Crossing rule for a convex clique labelled 1..n around its hull: two
/// disjoint chords cross iff their endpoints alternate.
bool convex_crossing_rule(int n, int a1, int a2, int b1, int b2);

/// Vertices of a regular n-gon, radius 10^6 (grown until the rounded
/// points are in general position), listed counter-clockwise.
std::vector<Point> regular_polygon(int n);

/// Points placed at `count` equally spaced angles on a circle, starting at
/// `start_angle` and spanning `sweep` radians inclusive of both ends.
std::vector<Point> arc_points(int count, double start_angle, double sweep, std::int64_t radius);

} // namespace geochrom
