#include "geochrom/geometric_graph.hpp"

#include "geochrom/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace geochrom {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    if (n_ < 0)
        throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    for (auto& e : edges_) {
        if (e.a < 0 || e.b < 0 || e.a >= n_ || e.b >= n_)
            throw Error(ErrorCode::InvalidGraph,
                        "edge [" + std::to_string(e.a) + "," + std::to_string(e.b)
                            + "] references a missing vertex");
        if (e.a == e.b)
            throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(e.a));
        e = make_edge(e.a, e.b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error(ErrorCode::InvalidGraph, "duplicate edge");

    adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
    neighbors_.assign(n_, {});
    for (const auto& e : edges_) {
        adjacency_[e.a * n_ + e.b] = adjacency_[e.b * n_ + e.a] = 1;
        neighbors_[e.a].push_back(e.b);
        neighbors_[e.b].push_back(e.a);
    }
    for (auto& nb : neighbors_)
        std::sort(nb.begin(), nb.end());
}

std::vector<int> Graph::distances_from(std::span<const int> sources) const
{
    std::vector<int> dist(n_, kInfiniteDistance);
    std::deque<int> queue;
    for (int s : sources)
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : neighbors_[v])
            if (dist[w] == kInfiniteDistance) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

GeometricGraph::GeometricGraph(std::vector<Point> positions, std::vector<Edge> edges)
    : graph_(static_cast<int>(positions.size()), std::move(edges)), positions_(std::move(positions))
{
    for (const auto& p : positions_)
        if (!in_range(p))
            throw Error(ErrorCode::CoordinateOutOfRange, "vertex coordinate exceeds 2^30");
    if (!is_general_position(positions_))
        throw Error(ErrorCode::InvalidGraph, "vertices are not in general position");
    crossings_ = find_crossings(positions_, graph_.edges());
}

std::vector<Crossing> find_crossings_serial(std::span<const Point> positions,
                                            std::span<const Edge> edges)
{
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            if (e.shares_vertex(f))
                continue;
            if (segments_cross(positions[e.a], positions[e.b], positions[f.a], positions[f.b]))
                out.push_back(make_crossing(e, f));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Crossing> find_crossings(std::span<const Point> positions, std::span<const Edge> edges)
{
    const auto m = static_cast<long>(edges.size());
    std::vector<std::vector<Crossing>> per_edge(m);

#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < m; ++i) {
        const Edge& e = edges[i];
        for (long j = i + 1; j < m; ++j) {
            const Edge& f = edges[j];
            if (e.shares_vertex(f))
                continue;
            if (segments_cross_unchecked(positions[e.a], positions[e.b], positions[f.a],
                                         positions[f.b]))
                per_edge[i].push_back(make_crossing(e, f));
        }
    }

    std::vector<Crossing> out;
    for (auto& chunk : per_edge)
        out.insert(out.end(), chunk.begin(), chunk.end());
    std::sort(out.begin(), out.end());
    return out;
}

int crossing_distance(const Graph& g, const Crossing& c1, const Crossing& c2)
{
    const auto sources = c1.vertices();
    const auto dist = g.distances_from(sources);
    int best = kInfiniteDistance;
    for (int v : c2.vertices())
        best = std::min(best, dist[v]);
    return best;
}

int min_pairwise_crossing_distance(const GeometricGraph& g)
{
    const auto& cs = g.crossings();
    int best = kInfiniteDistance;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto sources = cs[i].vertices();
        const auto dist = g.graph().distances_from(sources);
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (int v : cs[j].vertices())
                best = std::min(best, dist[v]);
    }
    return best;
}

std::vector<int> crossing_degrees(int vertex_count, std::span<const Crossing> crossings)
{
    std::vector<int> deg(vertex_count, 0);
    for (const auto& c : crossings)
        for (int v : c.vertices())
            ++deg[v];
    return deg;
}

CrossingStructure::CrossingStructure(int vertex_count, std::vector<Edge> edges,
                                     std::vector<Crossing> crossings)
    : graph_(vertex_count, std::move(edges)), crossings_(std::move(crossings))
{
    const int n = graph_.size();
    const auto& es = graph_.edges();
    edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < es.size(); ++i) {
        edge_index_[es[i].a * n + es[i].b] = static_cast<int>(i);
        edge_index_[es[i].b * n + es[i].a] = static_cast<int>(i);
    }
    edge_crosses_.assign(es.size() * es.size(), 0);
    for (auto& c : crossings_) {
        c = make_crossing(make_edge(c.e1.a, c.e1.b), make_edge(c.e2.a, c.e2.b));
        for (const Edge& e : {c.e1, c.e2})
            if (e.a < 0 || e.b >= n || e.a == e.b || edge_index_[e.a * n + e.b] < 0)
                throw Error(ErrorCode::InvalidGraph, "crossing references a missing edge");
        if (c.e1.shares_vertex(c.e2))
            throw Error(ErrorCode::InvalidGraph, "crossing edges share a vertex");
        const int i = edge_index_[c.e1.a * n + c.e1.b];
        const int j = edge_index_[c.e2.a * n + c.e2.b];
        edge_crosses_[i * es.size() + j] = edge_crosses_[j * es.size() + i] = 1;
    }
    std::sort(crossings_.begin(), crossings_.end());
    if (std::adjacent_find(crossings_.begin(), crossings_.end()) != crossings_.end())
        throw Error(ErrorCode::InvalidGraph, "duplicate crossing");
    canonical_ = geochrom::canonical_form(n, graph_.edges(), crossings_);
}

bool CrossingStructure::cross(int a, int b, int c, int d) const noexcept
{
    const int n = graph_.size();
    const int i = edge_index_[a * n + b];
    const int j = edge_index_[c * n + d];
    if (i < 0 || j < 0)
        return false;
    return edge_crosses_[i * graph_.edges().size() + j] != 0;
}

std::string CrossingStructure::canonical_hex() const { return to_hex(canonical_); }

CrossingStructure crossing_structure(const GeometricGraph& g)
{
    return CrossingStructure(g.size(), g.edges(), g.crossings());
}

std::string to_hex(std::span<const std::uint8_t> bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

} // namespace geochrom
