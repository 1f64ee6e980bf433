#pragma once

#include "geochrom/geometric_graph.hpp"

#include <optional>
#include <vector>

namespace geochrom {

class CatalogStore;
struct DistinctnessGraph;

/// Candidate map from source vertex ids to target vertex ids.
struct VertexMap {
    int target_size = 0;
    std::vector<int> images;

    int source_size() const noexcept { return static_cast<int>(images.size()); }
    int operator[](int v) const noexcept { return images[v]; }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Colors in 1..n, one per vertex.
struct Coloring {
    int n = 0;
    std::vector<int> colors;

    int operator[](int v) const noexcept { return colors[v]; }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Endpoint colors differ on every edge and all values lie in 1..n.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Every crossing's four vertices carry four distinct colors.
bool is_pseudo_coloring(const GeometricGraph& g, const Coloring& c);

bool is_graph_hom(const Graph& source, const Graph& target, const VertexMap& f);

/// Adjacency is preserved and every crossing of the source lands on a pair of
/// disjoint target edges that cross.
bool is_geometric_hom(const GeometricGraph& source, const CrossingStructure& target,
                      const VertexMap& f);
bool is_geometric_hom(const GeometricGraph& source, const GeometricGraph& target,
                      const VertexMap& f);

struct ColoringResult {
    int n = 0;
    Coloring witness;
};

/// Exact chromatic number by DSATUR branch and bound.
ColoringResult chromatic_number(const Graph& g);

/// Fewest colors that are proper and give every crossing four distinct colors.
ColoringResult pseudo_geochromatic_number(const GeometricGraph& g);

/// Backtracking search for a geometric homomorphism into `target`. Pairs in
/// `forced` must receive distinct images.
std::optional<VertexMap> find_geometric_hom(const GeometricGraph& source,
                                            const CrossingStructure& target,
                                            const DistinctnessGraph& forced);

/// As above, computing the forced pairs with the default path cap.
std::optional<VertexMap> find_geometric_hom(const GeometricGraph& source,
                                            const CrossingStructure& target);

struct GeochromaticResult {
    bool resolved = false;
    int value = 0;          // X when resolved
    int searched_to = 0;
    int lower_bound = 0;
    /// Every catalog consulted below the hit (or up to searched_to when
    /// unresolved) was converged. A hit is exact only when this holds.
    bool exhaustive = true;
    int catalog_index = -1;
    CrossingStructure target;
    GeometricGraph target_witness;
    VertexMap witness;
};

/// Smallest n <= max_n such that the source maps onto some cataloged drawing
/// of K_n. Sizes below the obstruction lower bound are skipped without
/// consulting the catalog. Within a size the convex drawing is tried first.
GeochromaticResult geochromatic_number(const GeometricGraph& g, int max_n, CatalogStore& catalogs);

} // namespace geochrom
