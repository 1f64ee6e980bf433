#pragma once

#include "geochrom/geometric_graph.hpp"
#include "geochrom/homomorphism.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace geochrom {

enum class Family {
    StarCrossing,
    Separation,
    Figure1Left,
    Figure1Right,
    Figure2Left,
    Figure2Right,
    Figure3Left,
    Figure3Right,
    Figure6,
    ConvexClique,
    Random,
};

std::string_view to_string(Family f);
/// CLI spelling: star, separation, figure1-left, ..., figure6, convex, random.
std::optional<Family> parse_family(std::string_view s);

struct StarCrossing {
    GeometricGraph graph;
    VertexMap map; // into convex_clique(4)
};

/// k spokes of a star crossed by one segment; k = 1 gives the convex K4.
StarCrossing star_crossing(int k);

/// Triangle {1, m+1, 2m+1} plus the 2-paths {i, m+i}, {i, 2m+i} for
/// i = 2..m, with m = n+1 and the 3m vertices on a circle in label order.
/// Label i is vertex id i-1.
GeometricGraph separation_family(int n);

/// Transcribed figure drawings. Throws UnknownFigure for non-figure
/// families. Each figure's crossing pattern is checked on construction.
GeometricGraph figure_graph(Family which);

/// The pseudo-coloring printed on the Figure 6 drawing.
Coloring figure6_coloring();

struct RandomGraphParams {
    int vertex_count = 8;
    double edge_probability = 0.3;
    int min_crossing_distance = 0; // 0, 1 or 2
    std::uint64_t seed = 1;
    std::int64_t coordinate_range = 1000;
    int max_attempts = 20000;
    /// 0 draws points uniformly. Otherwise vertices are dealt round-robin to
    /// this many clusters with random centres, and pairs in different
    /// clusters become edges with probability edge_probability * cross_factor.
    int clusters = 0;
    double cross_factor = 0.15;
};

/// Random points in general position and a Bernoulli edge set. With a
/// distance threshold, candidate edges are visited in random order and each
/// one that would bring two crossings closer than the threshold is rejected.
/// Deterministic for a fixed seed. Throws Exhausted when the points cannot be
/// placed within max_attempts draws per vertex.
GeometricGraph random_geometric_graph(const RandomGraphParams& params);

} // namespace geochrom
