#include "geochrom/catalog.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/homomorphism.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace geochrom;

TEST_CASE("chromatic number on small fixed graphs")
{
    CHECK(chromatic_number(Graph(5, {})).n == 1);
    CHECK(chromatic_number(Graph(0, {})).n == 0);
    CHECK(chromatic_number(Graph(2, {{0, 1}})).n == 2);
    CHECK(chromatic_number(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).n == 3);
    CHECK(chromatic_number(convex_clique(7).graph()).n == 7);
    // Grötzsch graph: triangle-free with chromatic number 4.
    const Graph mycielski(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 1}, {5, 4}, {6, 0}, {6, 2},
                               {7, 1}, {7, 3}, {8, 2}, {8, 4}, {9, 3}, {9, 0}, {10, 5}, {10, 6},
                               {10, 7}, {10, 8}, {10, 9}});
    CHECK(chromatic_number(mycielski).n == 4);
}

TEST_CASE("chromatic number matches exhaustive search")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 8;
        const Graph g(n, oracle::random_edges(rng, n, 0.15 + 0.1 * (trial % 7)));
        const auto r = chromatic_number(g);
        CHECK(r.n == oracle::brute_chromatic(n, g.edges()));
        CHECK(r.witness.n == r.n);
        CHECK(is_proper_coloring(g, r.witness));
    }
}

TEST_CASE("figure and family chromatic numbers")
{
    CHECK(chromatic_number(figure_graph(Family::Figure6).graph()).n == 3);
    const auto sep2 = separation_family(2);
    CHECK(chromatic_number(sep2.graph()).n == oracle::brute_chromatic(sep2.size(), sep2.edges()));
    CHECK(chromatic_number(sep2.graph()).n == 3);
}

TEST_CASE("proper and pseudo coloring checks")
{
    const auto g = figure_graph(Family::Figure6);
    CHECK(is_pseudo_coloring(g, figure6_coloring()));
    CHECK(is_proper_coloring(g.graph(), figure6_coloring()));
    Coloring bad = figure6_coloring();
    bad.colors[5] = 5; // z now matches x, which shares a crossing with it
    CHECK_FALSE(is_pseudo_coloring(g, bad));
    CHECK_FALSE(is_proper_coloring(g.graph(), Coloring{2, {1, 1, 2, 1, 1, 2}}));
    CHECK_FALSE(is_proper_coloring(g.graph(), Coloring{3, {1, 2, 4, 1, 1, 2}})); // out of range
    CHECK_FALSE(is_proper_coloring(g.graph(), Coloring{3, {1, 2, 3}}));          // wrong length
}

TEST_CASE("pseudo-geochromatic number matches exhaustive search")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + trial % 5;
        const auto g = oracle::random_graph(rng, n, 0.5, 60);
        const auto r = pseudo_geochromatic_number(g);
        CHECK(r.n == oracle::brute_pseudo(n, g.edges(), g.crossings()));
        CHECK(is_pseudo_coloring(g, r.witness));
        CHECK(is_proper_coloring(g.graph(), r.witness));
        if (!g.crossings().empty())
            CHECK(r.n >= 4);
        else
            CHECK(r.n == chromatic_number(g.graph()).n);
    }
}

TEST_CASE("Figure 6 pseudo-geochromatic number")
{
    const auto r = pseudo_geochromatic_number(figure_graph(Family::Figure6));
    CHECK(r.n == 5);
}
