#include "geochrom/catalog.hpp"
#include "geochrom/error.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/json_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

using namespace geochrom;

TEST_CASE("small catalogs")
{
    const auto k3 = enumerate_clique_structures(3, 3);
    CHECK(k3.converged);
    CHECK(k3.entries.size() == 1);
    const auto k4 = enumerate_clique_structures(4, 4);
    CHECK(k4.converged);
    REQUIRE(k4.entries.size() == 2);
    CHECK(k4.entries[0].structure == crossing_structure(convex_clique(4)));
    CHECK(k4.entries[0].structure.crossings().size() == 1);
    CHECK(k4.entries[1].structure.crossings().empty());
    const auto k5 = enumerate_clique_structures(5, 5);
    CHECK(k5.converged);
    CHECK(k5.entries.size() == 3);
    CHECK(k5.entries[0].structure == crossing_structure(convex_clique(5)));
    CHECK_THROWS_AS(enumerate_clique_structures(8, 8), Error);
    CHECK_THROWS_AS(enumerate_clique_structures(2, 2), Error);
}

TEST_CASE("catalog entries are pairwise non-isomorphic and well formed")
{
    const auto k5 = enumerate_clique_structures(5, 5);
    for (std::size_t i = 0; i < k5.entries.size(); ++i) {
        const auto& e = k5.entries[i];
        CHECK(crossing_structure(e.witness) == e.structure);
        CHECK(e.witness.edges().size() == 10);
        for (std::size_t j = i + 1; j < k5.entries.size(); ++j)
            CHECK_FALSE(oracle::brute_isomorphic(5, e.structure.edges(), e.structure.crossings(),
                                                 k5.entries[j].structure.edges(),
                                                 k5.entries[j].structure.crossings()));
    }
    // K5 drawings have 1, 3 or 5 crossings.
    std::vector<std::size_t> counts;
    for (const auto& e : k5.entries)
        counts.push_back(e.structure.crossings().size());
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("raw pattern of a convex quadrilateral")
{
    const std::vector<Point> square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    const auto p = raw_pattern(square);
    CHECK(p != RawPattern{0, 0});
    const std::vector<Point> triangle{{0, 0}, {10, 0}, {5, 10}, {5, 3}};
    CHECK(raw_pattern(triangle) == RawPattern{0, 0});
}

TEST_CASE("parallel grid enumeration matches the serial reference")
{
    for (int n : {4, 5, 6})
        CHECK(grid_patterns(n, 5) == grid_patterns_serial(n, 5));
}

TEST_CASE("catalog JSON round trip and tamper detection")
{
    const auto k5 = enumerate_clique_structures(5, 5);
    const auto j = catalog_to_json(k5);
    const auto back = catalog_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.entries.size() == k5.entries.size());
    for (std::size_t i = 0; i < back.entries.size(); ++i) {
        CHECK(back.entries[i].structure == k5.entries[i].structure);
        CHECK(back.entries[i].witness == k5.entries[i].witness);
    }
    CHECK(back.converged == k5.converged);
    CHECK(back.grid_bound == k5.grid_bound);
    auto bad = nlohmann::json::parse(j.dump());
    bad["entries"][0]["canonical"] = bad["entries"][1]["canonical"];
    CHECK_THROWS_AS(catalog_from_json(bad), Error);
}

TEST_CASE("catalog store")
{
    CatalogStore store("/nonexistent-dir");
    CHECK(store.get(1).entries.size() == 1);
    CHECK(store.get(3).entries.size() == 1);
    CHECK(store.get(2).entries[0].structure.edges().size() == 1);
    try {
        store.get(4);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CatalogMissing);
    }
    store.put(enumerate_clique_structures(4, 4));
    CHECK(store.available(4));
    CHECK(store.get(4).entries.size() == 2);
}

TEST_CASE("shipped catalogs load and hold the expected drawings")
{
    CatalogStore store(GEOCHROM_CATALOG_DIR);
    CHECK(store.get(4).entries.size() == 2);
    CHECK(store.get(5).entries.size() == 3);
    const auto& k6 = store.get(6);
    CHECK(k6.converged);
    CHECK(k6.find(crossing_structure(convex_clique(6))) == 0);
    CHECK(k6.find(crossing_structure(figure_graph(Family::Figure1Left))) >= 0);
    CHECK(k6.find(crossing_structure(figure_graph(Family::Figure1Right))) >= 0);
    // Every drawing of six random points falls into the catalog.
    std::mt19937_64 rng(61);
    for (int i = 0; i < 300; ++i) {
        const GeometricGraph g(oracle::random_points(rng, 6, 20 + (i % 3) * 500), convex_clique(6).edges());
        CHECK(k6.find(crossing_structure(g)) >= 0);
    }
}

TEST_CASE("shipped K7 catalog")
{
    CatalogStore store(GEOCHROM_CATALOG_DIR);
    const auto& k7 = store.get(7);
    CHECK(k7.converged);
    CHECK(k7.find(crossing_structure(convex_clique(7))) == 0);
    std::set<std::vector<std::uint8_t>> forms;
    for (const auto& e : k7.entries)
        forms.insert(e.structure.canonical_form());
    CHECK(forms.size() == k7.entries.size());
    std::mt19937_64 rng(71);
    for (int i = 0; i < 300; ++i) {
        const GeometricGraph g(oracle::random_points(rng, 7, 20 + (i % 3) * 500), convex_clique(7).edges());
        CHECK(k7.find(crossing_structure(g)) >= 0);
    }
}
