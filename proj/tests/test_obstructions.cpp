#include "geochrom/catalog.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/homomorphism.hpp"
#include "geochrom/obstructions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace geochrom;

TEST_CASE("rule letters")
{
    CHECK(rule_letters(kRuleAdjacent) == "A");
    CHECK(rule_letters(kRuleAdjacent | kRuleCrossing | kRuleOddCycle) == "ABD");
    CHECK(rule_letters(0).empty());
}

TEST_CASE("rules A and B")
{
    const auto g = convex_clique(4);
    const auto d = non_identifiable_pairs(g);
    CHECK(d.provenance.size() == 6);
    CHECK(d.provenance.at({0, 2}) == (kRuleAdjacent | kRuleCrossing | kRuleOddPath));
    const GeometricGraph two_edges({{0, 0}, {10, 10}, {0, 10}, {10, 0}}, {{0, 1}, {2, 3}});
    const auto d2 = non_identifiable_pairs(two_edges);
    CHECK((d2.provenance.at({0, 2}) & kRuleCrossing) != 0);
    CHECK((d2.provenance.at({0, 2}) & kRuleAdjacent) == 0);
    CHECK(d2.forced(3, 1));
}

TEST_CASE("rule C: odd path crossed edge by edge")
{
    const auto g = figure_graph(Family::Figure2Left);
    const auto d = non_identifiable_pairs(g);
    REQUIRE(d.forced(0, 3));
    CHECK(d.provenance.at({0, 3}) == kRuleOddPath);
    // Path ends at even distance along the path are not forced.
    CHECK_FALSE(d.forced(0, 2));
    CHECK_FALSE(d.forced(1, 3));
    // A short cap misses the 3-path.
    CHECK_FALSE(non_identifiable_pairs(g, 1).forced(0, 3));
}

TEST_CASE("rule D: 2-path crossing an odd cycle")
{
    const auto g = figure_graph(Family::Figure2Right);
    const auto d = non_identifiable_pairs(g);
    REQUIRE(d.forced(3, 4));
    CHECK(d.provenance.at({3, 4}) == kRuleOddCycle);
    CHECK(geochromatic_lower_bound(g) == 6);
}

TEST_CASE("Figure 6 lower bound")
{
    const auto g = figure_graph(Family::Figure6);
    CHECK(geochromatic_lower_bound(g) == 6);
    CHECK(non_identifiable_pairs(g).provenance.size() == 15);
}

TEST_CASE("parallel and serial rules agree")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = oracle::random_graph(rng, 6 + trial % 8, 0.35, 80);
        for (int cap : {1, 3, 7}) {
            const auto p = non_identifiable_pairs(g, cap);
            const auto s = non_identifiable_pairs_serial(g, cap);
            CHECK(p.provenance == s.provenance);
        }
    }
}

TEST_CASE("lower bound never exceeds the exhaustive geochromatic number")
{
    std::mt19937_64 rng(52);
    std::vector<CliqueCatalog> cats;
    for (int n = 4; n <= 5; ++n)
        cats.push_back(enumerate_clique_structures(n, n));
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(rng, 5, 0.5, 40);
        const int lb = geochromatic_lower_bound(g);
        CHECK(lb >= chromatic_number(g.graph()).n);
        for (const auto& cat : cats)
            for (const auto& e : cat.entries)
                if (oracle::brute_hom_exists(g, e.witness))
                    CHECK(lb <= cat.n);
    }
}
