#include "geochrom/generators.hpp"

#include "geochrom/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace geochrom {

namespace {

void expect(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorCode::Internal, std::string("figure transcription check failed: ") + what);
}

std::vector<Crossing> crossings_from(std::initializer_list<std::pair<Edge, Edge>> pairs)
{
    std::vector<Crossing> out;
    for (const auto& [e, f] : pairs)
        out.push_back(make_crossing(make_edge(e.a, e.b), make_edge(f.a, f.b)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> complete_edges(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({i, j});
    return es;
}

bool all_incident_crossed(const GeometricGraph& g, int v)
{
    for (int w : g.graph().neighbors(v)) {
        const Edge e = make_edge(v, w);
        const bool crossed = std::any_of(g.crossings().begin(), g.crossings().end(),
                                         [&](const Crossing& c) { return c.e1 == e || c.e2 == e; });
        if (!crossed)
            return false;
    }
    return !g.graph().neighbors(v).empty();
}

bool has_fully_crossed_vertex(const GeometricGraph& g)
{
    for (int v = 0; v < g.size(); ++v)
        if (all_incident_crossed(g, v))
            return true;
    return false;
}

GeometricGraph figure1(bool left)
{
    std::vector<Point> pts = left
        ? std::vector<Point>{{0, -3}, {0, 19}, {20, 3}, {-20, 3}, {-12, -20}, {12, -20}}
        : std::vector<Point>{{61, 20}, {80, 10}, {80, -10}, {61, -20}, {40, -10}, {40, 10}};
    return GeometricGraph(std::move(pts), complete_edges(6));
}

// Figure 2 and Figure 6 share one shape: triangle a,b,c crossed by the
// 2-path x-z-y. Ids a=0, b=1, c=2, x=3, y=4, z=5.
GeometricGraph triangle_and_two_path(std::vector<Point> pts)
{
    GeometricGraph g(std::move(pts), {{0, 1}, {1, 2}, {0, 2}, {3, 5}, {4, 5}});
    expect(g.crossings()
               == crossings_from({{{0, 1}, {3, 5}}, {{0, 2}, {3, 5}}, {{0, 1}, {4, 5}},
                                  {{1, 2}, {4, 5}}}),
           "2-path must cross the triangle in four places");
    return g;
}

} // namespace

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::StarCrossing: return "star";
    case Family::Separation: return "separation";
    case Family::Figure1Left: return "figure1-left";
    case Family::Figure1Right: return "figure1-right";
    case Family::Figure2Left: return "figure2-left";
    case Family::Figure2Right: return "figure2-right";
    case Family::Figure3Left: return "figure3-left";
    case Family::Figure3Right: return "figure3-right";
    case Family::Figure6: return "figure6";
    case Family::ConvexClique: return "convex";
    case Family::Random: return "random";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s)
{
    for (int i = 0; i <= static_cast<int>(Family::Random); ++i) {
        const auto f = static_cast<Family>(i);
        if (to_string(f) == s)
            return f;
    }
    return std::nullopt;
}

StarCrossing star_crossing(int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidInput, "star needs k >= 1");
    if (k == 1) {
        auto pts = regular_polygon(4);
        return {GeometricGraph(std::move(pts), complete_edges(4)), VertexMap{4, {0, 1, 2, 3}}};
    }

    constexpr std::int64_t radius = 1'000'000;
    for (std::int64_t tilt = 1;; ++tilt) {
        std::vector<Point> pts{{0, 0}};
        const auto leaves = arc_points(k, std::numbers::pi / 4, std::numbers::pi / 2, radius);
        pts.insert(pts.end(), leaves.begin(), leaves.end());
        pts.push_back({-radius, radius / 2});
        pts.push_back({radius, radius / 2 + tilt});
        if (!is_general_position(pts))
            continue;

        std::vector<Edge> edges;
        std::vector<Crossing> expected;
        const Edge bar{k + 1, k + 2};
        for (int i = 1; i <= k; ++i) {
            edges.push_back({0, i});
            expected.push_back(make_crossing({0, i}, bar));
        }
        edges.push_back(bar);
        std::sort(expected.begin(), expected.end());
        GeometricGraph g(std::move(pts), std::move(edges));
        expect(g.crossings() == expected, "star spokes must all cross the bar");

        // Hull labels 1..4 are ids 0..3: spokes onto {1,3}, bar onto {2,4}.
        VertexMap beta{4, std::vector<int>(k + 3, 2)};
        beta.images[0] = 0;
        beta.images[k + 1] = 1;
        beta.images[k + 2] = 3;
        return {std::move(g), std::move(beta)};
    }
}

GeometricGraph separation_family(int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidInput, "separation family needs n >= 1");
    const int m = n + 1;
    auto id = [](int label) { return label - 1; };
    std::vector<Edge> edges{{id(1), id(m + 1)}, {id(1), id(2 * m + 1)}, {id(m + 1), id(2 * m + 1)}};
    for (int i = 2; i <= m; ++i) {
        edges.push_back({id(i), id(m + i)});
        edges.push_back({id(i), id(2 * m + i)});
    }
    return GeometricGraph(regular_polygon(3 * m), std::move(edges));
}

GeometricGraph figure_graph(Family which)
{
    switch (which) {
    case Family::Figure1Left:
    case Family::Figure1Right: {
        auto left = figure1(true);
        auto right = figure1(false);
        expect(has_fully_crossed_vertex(left), "left K6 has a vertex with every edge crossed");
        expect(!has_fully_crossed_vertex(right), "right K6 has no fully crossed vertex");
        expect(right.crossings().size() > left.crossings().size(), "right K6 has more crossings");
        return which == Family::Figure1Left ? left : right;
    }
    case Family::Figure2Left: {
        // Odd path 0-1-2-3 crossed edge by edge by the segment {4,5}.
        GeometricGraph g({{-28, -9}, {-12, -2}, {-28, 2}, {-12, 9}, {-20, -12}, {-20, 12}},
                         {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
        expect(g.crossings()
                   == crossings_from({{{0, 1}, {4, 5}}, {{1, 2}, {4, 5}}, {{2, 3}, {4, 5}}}),
               "segment must cross each path edge");
        return g;
    }
    case Family::Figure2Right:
        return triangle_and_two_path({{0, 0}, {20, 0}, {10, 15}, {0, 10}, {20, 10}, {10, -10}});
    case Family::Figure6:
        return triangle_and_two_path({{-10, 0}, {10, 0}, {0, 15}, {-10, 10}, {10, 10}, {0, -8}});
    case Family::Figure3Left: {
        // Grid drawing scaled by 10; rows bent along parabolas so that no
        // three vertices are collinear.
        // 0:(0,0) 1:(1,0) 2:(0,1) 3:(1,1) 4:(2,1) 5:(3,1) 6:(4,1) 7:(3,0) 8:(4,0)
        GeometricGraph g({{0, 0}, {10, 1}, {0, 10}, {10, 11}, {20, 14}, {30, 19}, {40, 26},
                          {30, 9}, {40, 16}},
                         {{0, 3}, {3, 4}, {4, 5}, {5, 8}, {2, 1}, {7, 6}});
        expect(g.crossings() == crossings_from({{{0, 3}, {1, 2}}, {{5, 8}, {6, 7}}}),
               "two crossings expected");
        expect(min_pairwise_crossing_distance(g) == 2, "crossings at distance 2");
        return g;
    }
    case Family::Figure3Right: {
        // 0:(6,0) 1:(7,0) 2:(8,0) 3:(9,0) 4:(6,1) 5:(7,1) 6:(8,1) 7:(9,1)
        GeometricGraph g({{0, 0}, {10, 1}, {20, 4}, {30, 9}, {0, 10}, {10, 11}, {20, 14}, {30, 19}},
                         {{0, 5}, {5, 6}, {6, 3}, {4, 1}, {7, 2}});
        expect(g.crossings() == crossings_from({{{0, 5}, {1, 4}}, {{3, 6}, {2, 7}}}),
               "two crossings expected");
        expect(min_pairwise_crossing_distance(g) == 1, "crossings at distance 1");
        return g;
    }
    default:
        throw Error(ErrorCode::UnknownFigure,
                    "no figure drawing for family '" + std::string(to_string(which)) + "'");
    }
}

Coloring figure6_coloring() { return Coloring{5, {1, 2, 3, 5, 5, 4}}; }

GeometricGraph random_geometric_graph(const RandomGraphParams& params)
{
    if (params.vertex_count < 0 || params.vertex_count > 64)
        throw Error(ErrorCode::InvalidInput, "random graphs support 0..64 vertices");
    if (params.coordinate_range < 1 || params.coordinate_range > kCoordinateLimit)
        throw Error(ErrorCode::InvalidInput, "coordinate range out of bounds");
    if (params.edge_probability < 0.0 || params.edge_probability > 1.0)
        throw Error(ErrorCode::InvalidInput, "edge probability must lie in [0,1]");
    if (params.min_crossing_distance < 0 || params.min_crossing_distance > 2)
        throw Error(ErrorCode::InvalidInput, "crossing distance threshold must be 0, 1 or 2");

    // Engine output is fixed by the standard; distributions are not, so the
    // draws below are done by hand.
    std::mt19937_64 rng(params.seed);
    auto below = [&](std::uint64_t bound) { return rng() % bound; };
    auto bernoulli = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

    if (params.clusters < 0 || params.cross_factor < 0.0 || params.cross_factor > 1.0)
        throw Error(ErrorCode::InvalidInput, "bad cluster parameters");

    const int n = params.vertex_count;
    const int k = params.clusters;
    const auto range = static_cast<std::uint64_t>(params.coordinate_range);
    // Cluster boxes are a fraction of the full range; centres keep them inside.
    const std::uint64_t box = k > 0 ? std::max<std::uint64_t>(range / (3 * static_cast<std::uint64_t>(k)), 2) : range;
    std::vector<Point> corner(std::max(k, 1), Point{0, 0});
    if (k > 0)
        for (auto& c : corner)
            c = {static_cast<std::int64_t>(below(range - box + 1)), static_cast<std::int64_t>(below(range - box + 1))};
    auto cluster_of = [k](int v) { return k > 0 ? v % k : 0; };

    std::vector<Point> pts;
    long draws = 0;
    const long draw_limit = static_cast<long>(params.max_attempts) * std::max(n, 1);
    while (static_cast<int>(pts.size()) < n) {
        if (++draws > draw_limit)
            throw Error(ErrorCode::Exhausted, "could not place the vertices in general position");
        const Point& c = corner[cluster_of(static_cast<int>(pts.size()))];
        const Point p{c.x + static_cast<std::int64_t>(below(box)), c.y + static_cast<std::int64_t>(below(box))};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            ok = pts[i] != p;
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                ok = orientation(pts[i], pts[j], p) != Orientation::Collinear;
        }
        if (ok)
            pts.push_back(p);
    }

    std::vector<Edge> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli(cluster_of(i) == cluster_of(j) ? params.edge_probability
                                                         : params.edge_probability * params.cross_factor))
                candidates.push_back({i, j});
    if (params.min_crossing_distance == 0)
        return GeometricGraph(std::move(pts), std::move(candidates));

    // Visit candidates in random order and drop each one that would bring two
    // crossings closer than the threshold.
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[below(i)]);
    std::vector<Edge> kept;
    for (const Edge& e : candidates) {
        kept.push_back(e);
        if (min_pairwise_crossing_distance(GeometricGraph(pts, kept)) < params.min_crossing_distance)
            kept.pop_back();
    }
    return GeometricGraph(std::move(pts), std::move(kept));
}

} // namespace geochrom
