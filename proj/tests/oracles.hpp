#pragma once

// Independent reference implementations used only by tests. None of them
// calls into the code under test beyond plain data types.

#include "geochrom/geometric_graph.hpp"
#include "geochrom/homomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using geochrom::Crossing;
using geochrom::Edge;
using geochrom::Point;

/// Proper crossing via the exact rational parameters of the two lines:
/// p + t(r-p) = q + u(s-q) with 0 < t,u < 1, computed over __int128.
inline bool rational_cross(Point p, Point r, Point q, Point s)
{
    using I = __int128;
    const I rx = r.x - p.x, ry = r.y - p.y, sx = s.x - q.x, sy = s.y - q.y;
    I den = rx * sy - ry * sx;
    if (den == 0)
        return false;
    const I qpx = q.x - p.x, qpy = q.y - p.y;
    I tn = qpx * sy - qpy * sx;
    I un = qpx * ry - qpy * rx;
    if (den < 0) {
        den = -den;
        tn = -tn;
        un = -un;
    }
    return 0 < tn && tn < den && 0 < un && un < den;
}

inline std::vector<Crossing> brute_crossings(const std::vector<Point>& pts, const std::vector<Edge>& es)
{
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge e = es[i], f = es[j];
            if (e.shares_vertex(f))
                continue;
            if (rational_cross(pts[e.a], pts[e.b], pts[f.a], pts[f.b]))
                out.push_back(geochrom::make_crossing(e, f));
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tries all k^n assignments for k = 1, 2, ... and returns the least k whose
/// assignment satisfies `ok` on every listed pair.
inline int brute_min_colors(int n, const std::vector<std::pair<int, int>>& distinct)
{
    if (n == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool good = true;
            for (auto [a, b] : distinct)
                if (c[a] == c[b]) {
                    good = false;
                    break;
                }
            if (good)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
}

inline int brute_chromatic(int n, const std::vector<Edge>& es)
{
    std::vector<std::pair<int, int>> d;
    for (const Edge& e : es)
        d.emplace_back(e.a, e.b);
    return brute_min_colors(n, d);
}

inline int brute_pseudo(int n, const std::vector<Edge>& es, const std::vector<Crossing>& cs)
{
    std::vector<std::pair<int, int>> d;
    for (const Edge& e : es)
        d.emplace_back(e.a, e.b);
    for (const Crossing& c : cs) {
        const auto v = c.vertices();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                d.emplace_back(v[i], v[j]);
    }
    return brute_min_colors(n, d);
}

/// Geometric homomorphism check straight from coordinates.
inline bool brute_is_geometric_hom(const geochrom::GeometricGraph& src, const geochrom::GeometricGraph& dst,
                                   const std::vector<int>& f)
{
    for (const Edge& e : src.edges())
        if (f[e.a] == f[e.b] || !dst.graph().adjacent(f[e.a], f[e.b]))
            return false;
    for (const Crossing& c : src.crossings()) {
        const int a = f[c.e1.a], b = f[c.e1.b], x = f[c.e2.a], y = f[c.e2.b];
        if (a == x || a == y || b == x || b == y)
            return false;
        const auto& P = dst.positions();
        if (!rational_cross(P[a], P[b], P[x], P[y]))
            return false;
    }
    return true;
}

/// Enumerates every map V(src) -> V(dst) and calls `visit` on each geometric
/// homomorphism; stops early when `visit` returns false.
inline void for_each_geometric_hom(const geochrom::GeometricGraph& src, const geochrom::GeometricGraph& dst,
                                   const std::function<bool(const std::vector<int>&)>& visit)
{
    const int n = src.size(), m = dst.size();
    std::vector<int> f(n, 0);
    if (n == 0) {
        visit(f);
        return;
    }
    while (true) {
        if (brute_is_geometric_hom(src, dst, f) && !visit(f))
            return;
        int i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            return;
    }
}

inline bool brute_hom_exists(const geochrom::GeometricGraph& src, const geochrom::GeometricGraph& dst)
{
    bool found = false;
    for_each_geometric_hom(src, dst, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

/// Relabels (edges, crossings) by `perm` and returns them sorted.
inline std::pair<std::vector<Edge>, std::vector<Crossing>>
relabel(const std::vector<Edge>& es, const std::vector<Crossing>& cs, const std::vector<int>& perm)
{
    std::vector<Edge> e2;
    for (const Edge& e : es)
        e2.push_back(geochrom::make_edge(perm[e.a], perm[e.b]));
    std::vector<Crossing> c2;
    for (const Crossing& c : cs)
        c2.push_back(geochrom::make_crossing(geochrom::make_edge(perm[c.e1.a], perm[c.e1.b]),
                                             geochrom::make_edge(perm[c.e2.a], perm[c.e2.b])));
    std::sort(e2.begin(), e2.end());
    std::sort(c2.begin(), c2.end());
    return {e2, c2};
}

/// Isomorphism of (edges, crossings) records by trying all permutations.
inline bool brute_isomorphic(int n, const std::vector<Edge>& e1, const std::vector<Crossing>& c1,
                             const std::vector<Edge>& e2, const std::vector<Crossing>& c2)
{
    if (e1.size() != e2.size() || c1.size() != c2.size())
        return false;
    std::vector<Edge> se2 = e2;
    std::vector<Crossing> sc2 = c2;
    std::sort(se2.begin(), se2.end());
    std::sort(sc2.begin(), sc2.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto [re, rc] = relabel(e1, c1, perm);
        if (re == se2 && rc == sc2)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Random points in general position inside [0, range)^2.
inline std::vector<Point> random_points(std::mt19937_64& rng, int n, std::int64_t range)
{
    std::uniform_int_distribution<std::int64_t> coord(0, range - 1);
    while (true) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({coord(rng), coord(rng)});
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                if (pts[i] == pts[j])
                    ok = false;
                for (int k = j + 1; k < n && ok; ++k) {
                    const auto a = pts[i], b = pts[j], c = pts[k];
                    if ((b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x))
                        ok = false;
                }
            }
        if (ok)
            return pts;
    }
}

inline std::vector<Edge> random_edges(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                es.push_back({i, j});
    return es;
}

inline geochrom::GeometricGraph random_graph(std::mt19937_64& rng, int n, double p, std::int64_t range = 200)
{
    return geochrom::GeometricGraph(random_points(rng, n, range), random_edges(rng, n, p));
}

} // namespace oracle
