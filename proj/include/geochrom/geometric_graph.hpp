#pragma once

#include "geochrom/geometry.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace geochrom {

/// Undirected edge, normalized so that a < b.
struct Edge {
    int a = 0;
    int b = 0;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

    constexpr bool touches(int v) const noexcept { return a == v || b == v; }
    constexpr bool shares_vertex(const Edge& o) const noexcept
    {
        return touches(o.a) || touches(o.b);
    }
};

constexpr Edge make_edge(int u, int v) noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Unordered pair of disjoint edges, normalized so that e1 < e2.
struct Crossing {
    Edge e1;
    Edge e2;

    friend constexpr bool operator==(const Crossing&, const Crossing&) = default;
    friend constexpr auto operator<=>(const Crossing&, const Crossing&) = default;

    std::array<int, 4> vertices() const noexcept { return {e1.a, e1.b, e2.a, e2.b}; }
    constexpr bool touches(int v) const noexcept { return e1.touches(v) || e2.touches(v); }
};

constexpr Crossing make_crossing(Edge e, Edge f) noexcept
{
    return e < f ? Crossing{e, f} : Crossing{f, e};
}

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Sorts the edges; throws InvalidGraph on loops, duplicates or bad ids.
    Graph(int vertex_count, std::vector<Edge> edges);

    int size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool adjacent(int u, int v) const noexcept { return adjacency_[u * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const noexcept { return neighbors_[v]; }

    /// Breadth-first distances from a set of sources; unreachable vertices get
    /// kInfiniteDistance.
    std::vector<int> distances_from(std::span<const int> sources) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> adjacency_;
    std::vector<std::vector<int>> neighbors_;
};

/// Straight-line drawing of a simple graph on points in general position.
/// Crossings are derived at construction and cached.
class GeometricGraph {
public:
    GeometricGraph() = default;
    /// Vertex v sits at positions[v]. Throws InvalidGraph when the points are
    /// not in general position or the edge list is malformed.
    GeometricGraph(std::vector<Point> positions, std::vector<Edge> edges);

    int size() const noexcept { return graph_.size(); }
    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
    const std::vector<Point>& positions() const noexcept { return positions_; }
    const Point& position(int v) const noexcept { return positions_[v]; }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

    friend bool operator==(const GeometricGraph& a, const GeometricGraph& b)
    {
        return a.positions_ == b.positions_ && a.edges() == b.edges();
    }

private:
    Graph graph_;
    std::vector<Point> positions_;
    std::vector<Crossing> crossings_;
};

/// All crossing pairs among `edges`, sorted. OpenMP-parallel over the first
/// edge of each pair.
std::vector<Crossing> find_crossings(std::span<const Point> positions, std::span<const Edge> edges);

/// Serial reference for find_crossings.
std::vector<Crossing> find_crossings_serial(std::span<const Point> positions,
                                            std::span<const Edge> edges);

inline const std::vector<Crossing>& crossings_of(const GeometricGraph& g) { return g.crossings(); }

/// Minimum graph-path distance between a vertex of c1 and a vertex of c2.
int crossing_distance(const Graph& g, const Crossing& c1, const Crossing& c2);

/// Minimum crossing_distance over distinct crossing pairs; kInfiniteDistance
/// when there are fewer than two crossings.
int min_pairwise_crossing_distance(const GeometricGraph& g);

/// Number of crossings each vertex takes part in.
std::vector<int> crossing_degrees(int vertex_count, std::span<const Crossing> crossings);

/// Coordinate-free record of a drawing: adjacency plus crossing pairs, with a
/// canonical form that is equal exactly for isomorphic records.
class CrossingStructure {
public:
    CrossingStructure() = default;
    /// Throws InvalidGraph when a crossing uses a missing edge or two edges
    /// that share a vertex.
    CrossingStructure(int vertex_count, std::vector<Edge> edges, std::vector<Crossing> crossings);

    int size() const noexcept { return graph_.size(); }
    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    bool adjacent(int u, int v) const noexcept { return graph_.adjacent(u, v); }

    /// True iff {a,b} and {c,d} are edges that cross. Arguments need not be
    /// normalized.
    bool cross(int a, int b, int c, int d) const noexcept;

    const std::vector<std::uint8_t>& canonical_form() const noexcept { return canonical_; }
    std::string canonical_hex() const;

    friend bool operator==(const CrossingStructure& a, const CrossingStructure& b)
    {
        return a.canonical_ == b.canonical_;
    }

private:
    Graph graph_;
    std::vector<Crossing> crossings_;
    std::vector<int> edge_index_;   // n*n, -1 when absent
    std::vector<char> edge_crosses_; // |E|*|E|
    std::vector<std::uint8_t> canonical_;
};

CrossingStructure crossing_structure(const GeometricGraph& g);

/// Lexicographically least serialization (n, sorted edges, sorted crossings)
/// over all relabelings, found by individualization and refinement. Every
/// integer is written as two big-endian bytes.
std::vector<std::uint8_t> canonical_form(int vertex_count, std::span<const Edge> edges,
                                         std::span<const Crossing> crossings);

std::string to_hex(std::span<const std::uint8_t> bytes);

} // namespace geochrom
