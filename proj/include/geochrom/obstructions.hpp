#pragma once

#include "geochrom/geometric_graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace geochrom {

/// Reasons a pair of vertices can never share an image under a geometric
/// homomorphism.
enum RuleTag : std::uint8_t {
    kRuleAdjacent = 1,      // A: the pair is an edge
    kRuleCrossing = 2,      // B: both lie in one crossing
    kRuleOddPath = 4,       // C: odd path whose edges are all crossed by one edge
    kRuleOddCycle = 8,      // D: 2-path whose edges cross every edge of an odd cycle
};

std::string rule_letters(std::uint8_t rules);

struct DistinctnessGraph {
    int n = 0;
    int path_cap = 0;
    std::map<Edge, std::uint8_t> provenance;

    bool forced(int u, int v) const { return provenance.contains(make_edge(u, v)); }
    std::vector<Edge> forced_pairs() const;
    Graph as_graph() const;
};

inline constexpr int kDefaultPathCap = 7;

/// Rules A-D. Rule C enumerates simple paths of odd length up to path_cap;
/// rule D tests the crossed edge set for an odd cycle. Rules C and D run
/// OpenMP-parallel over edges and 2-paths.
DistinctnessGraph non_identifiable_pairs(const GeometricGraph& g, int path_cap = kDefaultPathCap);

/// Serial reference for non_identifiable_pairs.
DistinctnessGraph non_identifiable_pairs_serial(const GeometricGraph& g,
                                                int path_cap = kDefaultPathCap);

/// Chromatic number of the distinctness graph; never exceeds X.
int geochromatic_lower_bound(const GeometricGraph& g, int path_cap = kDefaultPathCap);

} // namespace geochrom
