#include "geochrom/geometric_graph.hpp"

#include <algorithm>
#include <map>

namespace geochrom {

namespace {

struct CrossingIncidence {
    int partner;    // other endpoint of the vertex's own edge
    int other_a;    // endpoints of the edge it crosses
    int other_b;
};

class Canonicalizer {
public:
    Canonicalizer(int n, std::span<const Edge> edges, std::span<const Crossing> crossings)
        : n_(n), edges_(edges.begin(), edges.end()), crossings_(crossings.begin(), crossings.end()),
          neighbors_(n), incidences_(n)
    {
        for (const auto& e : edges_) {
            neighbors_[e.a].push_back(e.b);
            neighbors_[e.b].push_back(e.a);
        }
        for (const auto& c : crossings_) {
            incidences_[c.e1.a].push_back({c.e1.b, c.e2.a, c.e2.b});
            incidences_[c.e1.b].push_back({c.e1.a, c.e2.a, c.e2.b});
            incidences_[c.e2.a].push_back({c.e2.b, c.e1.a, c.e1.b});
            incidences_[c.e2.b].push_back({c.e2.a, c.e1.a, c.e1.b});
        }
    }

    std::vector<int> run()
    {
        search(std::vector<int>(n_, 0));
        return best_;
    }

private:
    bool isolated(int v) const { return neighbors_[v].empty(); }

    // Ranks vertices by (current color, neighbour colors, crossing
    // incidence colors) until the partition stops splitting.
    std::vector<int> refine(std::vector<int> colors) const
    {
        int classes = count_classes(colors);
        for (;;) {
            std::vector<std::vector<int>> sig(n_);
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.push_back(colors[v]);
                std::vector<int> nb;
                for (int w : neighbors_[v])
                    nb.push_back(colors[w]);
                std::sort(nb.begin(), nb.end());
                s.push_back(static_cast<int>(nb.size()));
                s.insert(s.end(), nb.begin(), nb.end());
                std::vector<std::array<int, 3>> inc;
                for (const auto& ci : incidences_[v]) {
                    const int ca = colors[ci.other_a];
                    const int cb = colors[ci.other_b];
                    inc.push_back({colors[ci.partner], std::min(ca, cb), std::max(ca, cb)});
                }
                std::sort(inc.begin(), inc.end());
                s.push_back(static_cast<int>(inc.size()));
                for (const auto& t : inc)
                    s.insert(s.end(), t.begin(), t.end());
            }
            std::vector<std::vector<int>> distinct = sig;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int v = 0; v < n_; ++v)
                colors[v] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            const int now = static_cast<int>(distinct.size());
            if (now == classes)
                return colors;
            classes = now;
        }
    }

    static int count_classes(const std::vector<int>& colors)
    {
        std::vector<int> c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    std::vector<int> serialize(const std::vector<int>& label) const
    {
        std::vector<int> out;
        out.reserve(3 + 2 * edges_.size() + 4 * crossings_.size());
        out.push_back(n_);
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_)
            es.push_back(make_edge(label[e.a], label[e.b]));
        std::sort(es.begin(), es.end());
        out.push_back(static_cast<int>(es.size()));
        for (const auto& e : es) {
            out.push_back(e.a);
            out.push_back(e.b);
        }
        std::vector<Crossing> cs;
        cs.reserve(crossings_.size());
        for (const auto& c : crossings_)
            cs.push_back(make_crossing(make_edge(label[c.e1.a], label[c.e1.b]),
                                       make_edge(label[c.e2.a], label[c.e2.b])));
        std::sort(cs.begin(), cs.end());
        out.push_back(static_cast<int>(cs.size()));
        for (const auto& c : cs) {
            out.push_back(c.e1.a);
            out.push_back(c.e1.b);
            out.push_back(c.e2.a);
            out.push_back(c.e2.b);
        }
        return out;
    }

    void search(std::vector<int> colors)
    {
        colors = refine(std::move(colors));

        // Lowest-colored non-singleton cell.
        std::vector<int> cell_size(n_, 0);
        for (int c : colors)
            ++cell_size[c];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (cell_size[c] > 1) {
                target = c;
                break;
            }

        if (target < 0) {
            auto s = serialize(colors);
            if (best_.empty() || s < best_)
                best_ = std::move(s);
            return;
        }

        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (colors[v] == target)
                cell.push_back(v);
        // Isolated vertices in one cell are interchangeable.
        if (isolated(cell.front()))
            cell.resize(1);

        for (int v : cell) {
            std::vector<int> next(n_);
            for (int w = 0; w < n_; ++w)
                next[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
            search(std::move(next));
        }
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<CrossingIncidence>> incidences_;
    std::vector<int> best_;
};

} // namespace

std::vector<std::uint8_t> canonical_form(int vertex_count, std::span<const Edge> edges,
                                         std::span<const Crossing> crossings)
{
    const auto ints = Canonicalizer(vertex_count, edges, crossings).run();
    std::vector<std::uint8_t> bytes;
    bytes.reserve(ints.size() * 2);
    for (int v : ints) {
        bytes.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
        bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    return bytes;
}

} // namespace geochrom
