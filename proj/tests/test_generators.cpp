#include "geochrom/catalog.hpp"
#include "geochrom/error.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/homomorphism.hpp"
#include "geochrom/json_io.hpp"

#include <algorithm>
#include <doctest.h>

using namespace geochrom;

TEST_CASE("star crossing family")
{
    for (int k = 1; k <= 10; ++k) {
        const auto s = star_crossing(k);
        CHECK(s.graph.crossings().size() == static_cast<std::size_t>(k));
        CHECK(is_geometric_hom(s.graph, convex_clique(4), s.map));
        if (k > 1) {
            for (const auto& c : s.graph.crossings()) {
                CHECK(c.e2 == Edge{k + 1, k + 2});
                CHECK(c.e1.a == 0);
            }
            CHECK(s.map.images[0] == 0);
            CHECK(s.map.images[1] == 2);
            CHECK(s.map.images[k + 1] == 1);
            CHECK(s.map.images[k + 2] == 3);
        }
    }
    CHECK(star_crossing(1).graph == convex_clique(4));
    CHECK_THROWS_AS(star_crossing(0), Error);
}

TEST_CASE("separation family")
{
    const auto g1 = separation_family(1);
    CHECK(g1.size() == 6);
    CHECK(g1.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}});
    const auto g2 = separation_family(2);
    CHECK(g2.size() == 9);
    // Labels 2..3 carry 2-paths; label i is id i-1.
    CHECK(g2.edges().size() == 3 + 2 * 2);
    const auto& cs = g2.crossings();
    CHECK(std::find(cs.begin(), cs.end(), make_crossing({1, 4}, {0, 3})) != cs.end());
    for (int n = 1; n <= 5; ++n) {
        const auto g = separation_family(n);
        CHECK(g.size() == 3 * (n + 1));
        for (const auto& c : g.crossings())
            CHECK(convex_crossing_rule(g.size(), c.e1.a + 1, c.e1.b + 1, c.e2.a + 1, c.e2.b + 1));
    }
    CHECK_THROWS_AS(separation_family(0), Error);
}

TEST_CASE("figure drawings")
{
    for (auto f : {Family::Figure1Left, Family::Figure1Right, Family::Figure2Left, Family::Figure2Right,
                   Family::Figure3Left, Family::Figure3Right, Family::Figure6}) {
        const auto g = figure_graph(f);
        CHECK(is_general_position(g.positions()));
    }
    const auto left = figure_graph(Family::Figure1Left);
    const auto right = figure_graph(Family::Figure1Right);
    CHECK(left.edges().size() == 15);
    CHECK(right.edges().size() == 15);
    CHECK(right.crossings().size() > left.crossings().size());
    CHECK(figure_graph(Family::Figure6).crossings().size() == 4);
    CHECK(is_pseudo_coloring(figure_graph(Family::Figure6), figure6_coloring()));
    CHECK(figure6_coloring().n == 5);
    try {
        figure_graph(Family::Random);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownFigure);
    }
}

TEST_CASE("family names round trip")
{
    for (int i = 0; i <= static_cast<int>(Family::Random); ++i) {
        const auto f = static_cast<Family>(i);
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_FALSE(parse_family("figure9").has_value());
}

TEST_CASE("random graphs")
{
    RandomGraphParams p;
    p.vertex_count = 10;
    p.edge_probability = 0.3;
    p.seed = 99;
    CHECK(dump_line(graph_to_json(random_geometric_graph(p))) == dump_line(graph_to_json(random_geometric_graph(p))));
    p.seed = 100;
    const auto other = random_geometric_graph(p);
    p.seed = 99;
    CHECK_FALSE(random_geometric_graph(p) == other);

    p.edge_probability = 0.0;
    CHECK(random_geometric_graph(p).crossings().empty());

    for (int clusters : {0, 3}) {
        for (int dist : {1, 2}) {
            std::size_t most = 0;
            for (std::uint64_t seed = 1; seed <= 30; ++seed) {
                p.edge_probability = clusters ? 0.8 : 0.5;
                p.clusters = clusters;
                p.min_crossing_distance = dist;
                p.seed = seed;
                const auto g = random_geometric_graph(p);
                CHECK(min_pairwise_crossing_distance(g) >= dist);
                most = std::max(most, g.crossings().size());
            }
            MESSAGE("clusters " << clusters << ", distance " << dist << ": most crossings " << most);
            CHECK(most >= 1);
            if (clusters)
                CHECK(most >= 2);
        }
    }
    p.clusters = 0;
    p.min_crossing_distance = 0;

    // At most 8 points of a 4 x 4 grid avoid collinear triples.
    p.vertex_count = 12;
    p.coordinate_range = 4;
    p.max_attempts = 50;
    try {
        random_geometric_graph(p);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Exhausted);
    }
    p.vertex_count = 65;
    CHECK_THROWS_AS(random_geometric_graph(p), Error);
    p.vertex_count = 8;
    p.min_crossing_distance = 3;
    CHECK_THROWS_AS(random_geometric_graph(p), Error);
}
