#include "geochrom/geometry.hpp"

#include "geochrom/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace geochrom {

bool in_range(const Point& p) noexcept
{
    return p.x >= -kCoordinateLimit && p.x <= kCoordinateLimit && p.y >= -kCoordinateLimit
        && p.y <= kCoordinateLimit;
}

Point make_point(std::int64_t x, std::int64_t y)
{
    Point p{x, y};
    if (!in_range(p))
        throw Error(ErrorCode::CoordinateOutOfRange,
                    "coordinate (" + std::to_string(x) + "," + std::to_string(y)
                        + ") exceeds 2^30 in magnitude");
    return p;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) noexcept
{
    // Differences reach 2^31, products 2^62; the final subtraction needs 128 bits.
    const __int128 det = static_cast<__int128>(q.x - p.x) * (r.y - p.y)
        - static_cast<__int128>(q.y - p.y) * (r.x - p.x);
    if (det > 0)
        return Orientation::CounterClockwise;
    if (det < 0)
        return Orientation::Clockwise;
    return Orientation::Collinear;
}

bool segments_cross_unchecked(const Point& a1, const Point& a2, const Point& b1,
                              const Point& b2) noexcept
{
    const auto o1 = orientation(a1, a2, b1);
    const auto o2 = orientation(a1, a2, b2);
    const auto o3 = orientation(b1, b2, a1);
    const auto o4 = orientation(b1, b2, a2);
    if (o1 == Orientation::Collinear || o2 == Orientation::Collinear
        || o3 == Orientation::Collinear || o4 == Orientation::Collinear)
        return false;
    return o1 != o2 && o3 != o4;
}

bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2)
{
    if (a1 == a2 || b1 == b2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
        throw Error(ErrorCode::SharedEndpoint, "segments must have four distinct endpoints");
    return segments_cross_unchecked(a1, a2, b1, b2);
}

bool is_general_position(std::span<const Point> points)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j])
                return false;
            for (std::size_t k = j + 1; k < n; ++k)
                if (orientation(points[i], points[j], points[k]) == Orientation::Collinear)
                    return false;
        }
    return true;
}

bool convex_crossing_rule(int n, int a1, int a2, int b1, int b2)
{
    if (n < 4)
        throw Error(ErrorCode::InvalidInput, "convex crossing rule needs n >= 4");
    for (int label : {a1, a2, b1, b2})
        if (label < 1 || label > n)
            throw Error(ErrorCode::InvalidInput, "label outside 1..n");
    if (a1 == a2 || b1 == b2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
        throw Error(ErrorCode::SharedEndpoint, "edges must be disjoint");
    if (a1 > a2)
        std::swap(a1, a2);
    if (b1 > b2)
        std::swap(b1, b2);
    if (b1 < a1) {
        std::swap(a1, b1);
        std::swap(a2, b2);
    }
    return a1 < b1 && b1 < a2 && a2 < b2;
}

std::vector<Point> arc_points(int count, double start_angle, double sweep, std::int64_t radius)
{
    std::vector<Point> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        const double angle = start_angle + sweep * t;
        out.push_back(make_point(std::llround(radius * std::cos(angle)),
                                 std::llround(radius * std::sin(angle))));
    }
    return out;
}

std::vector<Point> regular_polygon(int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidInput, "polygon needs at least one vertex");
    for (std::int64_t radius = 1'000'000;; ++radius) {
        std::vector<Point> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double angle = 2.0 * std::numbers::pi * i / n;
            pts.push_back(make_point(std::llround(radius * std::cos(angle)),
                                     std::llround(radius * std::sin(angle))));
        }
        if (is_general_position(pts))
            return pts;
    }
}

} // namespace geochrom
