#include "geochrom/obstructions.hpp"

#include "geochrom/homomorphism.hpp"

#include <algorithm>
#include <deque>

namespace geochrom {

namespace {

// Edges crossed by each edge, indexed like g.edges().
std::vector<std::vector<Edge>> crossed_by(const GeometricGraph& g)
{
    const auto& es = g.edges();
    std::vector<std::vector<Edge>> out(es.size());
    auto index = [&](const Edge& e) {
        return std::lower_bound(es.begin(), es.end(), e) - es.begin();
    };
    for (const auto& c : g.crossings()) {
        out[index(c.e1)].push_back(c.e2);
        out[index(c.e2)].push_back(c.e1);
    }
    return out;
}

// Endpoint pairs of simple paths of odd length <= cap inside `edges`.
std::vector<Edge> odd_path_pairs(int n, const std::vector<Edge>& edges, int cap)
{
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<Edge> pairs;
    std::vector<char> on_path(n, 0);
    auto dfs = [&](auto&& self, int start, int v, int length) -> void {
        if (length % 2 == 1)
            pairs.push_back(make_edge(start, v));
        if (length == cap)
            return;
        for (int w : adj[v])
            if (!on_path[w]) {
                on_path[w] = 1;
                self(self, start, w, length + 1);
                on_path[w] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        if (adj[s].empty())
            continue;
        on_path[s] = 1;
        dfs(dfs, s, s, 0);
        on_path[s] = 0;
    }
    return pairs;
}

bool has_odd_cycle(int n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0 || adj[s].empty())
            continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return true;
                }
            }
        }
    }
    return false;
}

struct TwoPath {
    int u, w, v;
};

std::vector<TwoPath> two_paths(const Graph& g)
{
    std::vector<TwoPath> out;
    for (int w = 0; w < g.size(); ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                out.push_back({nb[i], w, nb[j]});
    }
    return out;
}

std::vector<Edge> union_of(const std::vector<Edge>& a, const std::vector<Edge>& b)
{
    std::vector<Edge> q = a;
    q.insert(q.end(), b.begin(), b.end());
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

void add_simple_rules(const GeometricGraph& g, DistinctnessGraph& out)
{
    for (const auto& e : g.edges())
        out.provenance[e] |= kRuleAdjacent;
    for (const auto& c : g.crossings()) {
        const auto vs = c.vertices();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                out.provenance[make_edge(vs[i], vs[j])] |= kRuleCrossing;
    }
}

std::size_t edge_index(const GeometricGraph& g, const Edge& e)
{
    const auto& es = g.edges();
    return std::lower_bound(es.begin(), es.end(), e) - es.begin();
}

} // namespace

std::string rule_letters(std::uint8_t rules)
{
    std::string s;
    if (rules & kRuleAdjacent)
        s += 'A';
    if (rules & kRuleCrossing)
        s += 'B';
    if (rules & kRuleOddPath)
        s += 'C';
    if (rules & kRuleOddCycle)
        s += 'D';
    return s;
}

std::vector<Edge> DistinctnessGraph::forced_pairs() const
{
    std::vector<Edge> out;
    out.reserve(provenance.size());
    for (const auto& [pair, rules] : provenance)
        out.push_back(pair);
    return out;
}

Graph DistinctnessGraph::as_graph() const { return Graph(n, forced_pairs()); }

DistinctnessGraph non_identifiable_pairs_serial(const GeometricGraph& g, int path_cap)
{
    DistinctnessGraph out{g.size(), path_cap, {}};
    add_simple_rules(g, out);

    const auto crossed = crossed_by(g);
    for (const auto& p_e : crossed)
        for (const auto& pair : odd_path_pairs(g.size(), p_e, path_cap))
            out.provenance[pair] |= kRuleOddPath;

    for (const auto& p : two_paths(g.graph())) {
        const auto q = union_of(crossed[edge_index(g, make_edge(p.u, p.w))],
                                crossed[edge_index(g, make_edge(p.w, p.v))]);
        if (has_odd_cycle(g.size(), q))
            out.provenance[make_edge(p.u, p.v)] |= kRuleOddCycle;
    }
    return out;
}

DistinctnessGraph non_identifiable_pairs(const GeometricGraph& g, int path_cap)
{
    DistinctnessGraph out{g.size(), path_cap, {}};
    add_simple_rules(g, out);

    const auto crossed = crossed_by(g);
    const long m = static_cast<long>(crossed.size());
    std::vector<std::vector<Edge>> rule_c(m);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < m; ++i)
        rule_c[i] = odd_path_pairs(g.size(), crossed[i], path_cap);

    const auto paths = two_paths(g.graph());
    const long k = static_cast<long>(paths.size());
    std::vector<char> rule_d(k, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < k; ++i) {
        const auto& p = paths[i];
        const auto q = union_of(crossed[edge_index(g, make_edge(p.u, p.w))],
                                crossed[edge_index(g, make_edge(p.w, p.v))]);
        rule_d[i] = has_odd_cycle(g.size(), q);
    }

    for (const auto& pairs : rule_c)
        for (const auto& pair : pairs)
            out.provenance[pair] |= kRuleOddPath;
    for (long i = 0; i < k; ++i)
        if (rule_d[i])
            out.provenance[make_edge(paths[i].u, paths[i].v)] |= kRuleOddCycle;
    return out;
}

int geochromatic_lower_bound(const GeometricGraph& g, int path_cap)
{
    return chromatic_number(non_identifiable_pairs(g, path_cap).as_graph()).n;
}

} // namespace geochrom
