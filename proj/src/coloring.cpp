#include "geochrom/homomorphism.hpp"

#include <algorithm>

namespace geochrom {

namespace {

// DSATUR branch and bound. Colors are 0-based internally.
class ExactColoring {
public:
    explicit ExactColoring(const Graph& g) : g_(g), n_(g.size()) {}

    ColoringResult solve()
    {
        if (n_ == 0)
            return {0, Coloring{0, {}}};
        best_ = greedy_dsatur();
        best_count_ = 1 + *std::max_element(best_.begin(), best_.end());
        lower_ = greedy_clique();
        if (lower_ < best_count_) {
            colors_.assign(n_, -1);
            color_users_.assign(n_, std::vector<int>(n_ + 1, 0));
            branch(0, 0);
        }
        Coloring c{best_count_, {}};
        for (int v : best_)
            c.colors.push_back(v + 1);
        return {best_count_, std::move(c)};
    }

private:
    std::vector<int> greedy_dsatur() const
    {
        std::vector<int> color(n_, -1);
        for (int step = 0; step < n_; ++step) {
            const int v = pick(color, nullptr);
            std::vector<char> used(n_ + 1, 0);
            for (int w : g_.neighbors(v))
                if (color[w] >= 0)
                    used[color[w]] = 1;
            int c = 0;
            while (used[c])
                ++c;
            color[v] = c;
        }
        return color;
    }

    int greedy_clique() const
    {
        int best = 1;
        for (int start = 0; start < n_; ++start) {
            std::vector<int> clique{start};
            std::vector<int> cand = g_.neighbors(start);
            std::sort(cand.begin(), cand.end(), [&](int a, int b) {
                const auto da = g_.neighbors(a).size();
                const auto db = g_.neighbors(b).size();
                return da != db ? da > db : a < b;
            });
            for (int v : cand)
                if (std::all_of(clique.begin(), clique.end(),
                                [&](int u) { return g_.adjacent(u, v); }))
                    clique.push_back(v);
            best = std::max(best, static_cast<int>(clique.size()));
        }
        return best;
    }

    int saturation(const std::vector<int>& color, int v) const
    {
        std::vector<char> seen(n_ + 1, 0);
        int s = 0;
        for (int w : g_.neighbors(v))
            if (color[w] >= 0 && !seen[color[w]]) {
                seen[color[w]] = 1;
                ++s;
            }
        return s;
    }

    // Max saturation, then max uncolored degree, then lowest id.
    int pick(const std::vector<int>& color, const std::vector<std::vector<int>>* users) const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color[v] >= 0)
                continue;
            int sat = 0;
            if (users) {
                for (int c = 0; c < n_; ++c)
                    sat += (*users)[v][c] > 0;
            } else {
                sat = saturation(color, v);
            }
            int deg = 0;
            for (int w : g_.neighbors(v))
                deg += color[w] < 0;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void branch(int colored, int used)
    {
        if (best_count_ <= lower_)
            return;
        if (colored == n_) {
            best_ = colors_;
            best_count_ = used;
            return;
        }
        const int v = pick(colors_, &color_users_);
        const int limit = std::min(used + 1, best_count_ - 1);
        for (int c = 0; c < limit; ++c) {
            if (color_users_[v][c] > 0)
                continue;
            colors_[v] = c;
            for (int w : g_.neighbors(v))
                ++color_users_[w][c];
            branch(colored + 1, std::max(used, c + 1));
            for (int w : g_.neighbors(v))
                --color_users_[w][c];
            colors_[v] = -1;
            if (best_count_ <= lower_)
                return;
        }
    }

    const Graph& g_;
    int n_;
    int lower_ = 0;
    std::vector<int> best_;
    int best_count_ = 0;
    std::vector<int> colors_;
    std::vector<std::vector<int>> color_users_;
};

} // namespace

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.size())
        return false;
    for (int col : c.colors)
        if (col < 1 || col > c.n)
            return false;
    for (const auto& e : g.edges())
        if (c.colors[e.a] == c.colors[e.b])
            return false;
    return true;
}

bool is_pseudo_coloring(const GeometricGraph& g, const Coloring& c)
{
    if (!is_proper_coloring(g.graph(), c))
        return false;
    for (const auto& cr : g.crossings()) {
        const auto vs = cr.vertices();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (c.colors[vs[i]] == c.colors[vs[j]])
                    return false;
    }
    return true;
}

ColoringResult chromatic_number(const Graph& g) { return ExactColoring(g).solve(); }

ColoringResult pseudo_geochromatic_number(const GeometricGraph& g)
{
    // Each crossing quadruple becomes six pairwise constraints.
    std::vector<Edge> pairs = g.edges();
    for (const auto& cr : g.crossings()) {
        const auto vs = cr.vertices();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                pairs.push_back(make_edge(vs[i], vs[j]));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return chromatic_number(Graph(g.size(), std::move(pairs)));
}

} // namespace geochrom
