#include "geochrom/homomorphism.hpp"

#include "geochrom/catalog.hpp"
#include "geochrom/error.hpp"
#include "geochrom/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace geochrom {

namespace {

bool map_in_range(const VertexMap& f, int source_size, int target_size)
{
    if (f.source_size() != source_size || f.target_size != target_size)
        return false;
    return std::all_of(f.images.begin(), f.images.end(),
                       [&](int t) { return t >= 0 && t < target_size; });
}

template <typename Target>
bool preserves_crossings(const GeometricGraph& source, const Target& target, const VertexMap& f)
{
    for (const auto& c : source.crossings()) {
        const int a = f[c.e1.a], b = f[c.e1.b], x = f[c.e2.a], y = f[c.e2.b];
        if (a == x || a == y || b == x || b == y)
            return false;
        if (!target.cross(a, b, x, y))
            return false;
    }
    return true;
}

class HomSearch {
public:
    HomSearch(const GeometricGraph& source, const CrossingStructure& target,
              const DistinctnessGraph& forced)
        : source_(source), target_(target), n_(source.size()), position_(n_, -1),
          images_(n_, -1)
    {
        const auto cdeg = crossing_degrees(n_, source.crossings());
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return cdeg[a] > cdeg[b]; });
        for (int i = 0; i < n_; ++i)
            position_[order_[i]] = i;

        earlier_neighbors_.resize(n_);
        earlier_forced_.resize(n_);
        completed_crossings_.resize(n_);
        for (int v = 0; v < n_; ++v)
            for (int w : source.graph().neighbors(v))
                if (position_[w] < position_[v])
                    earlier_neighbors_[v].push_back(w);
        for (const auto& [pair, rules] : forced.provenance) {
            if (source.graph().adjacent(pair.a, pair.b))
                continue;
            const int later = position_[pair.a] > position_[pair.b] ? pair.a : pair.b;
            const int other = later == pair.a ? pair.b : pair.a;
            earlier_forced_[later].push_back(other);
        }
        for (const auto& c : source.crossings()) {
            const auto vs = c.vertices();
            const int last = *std::max_element(vs.begin(), vs.end(), [&](int a, int b) {
                return position_[a] < position_[b];
            });
            completed_crossings_[last].push_back(c);
        }
    }

    std::optional<VertexMap> run()
    {
        if (assign(0))
            return VertexMap{target_.size(), images_};
        return std::nullopt;
    }

private:
    bool consistent(int v, int t) const
    {
        for (int w : earlier_neighbors_[v])
            if (!target_.adjacent(t, images_[w]))
                return false;
        for (int w : earlier_forced_[v])
            if (images_[w] == t)
                return false;
        for (const auto& c : completed_crossings_[v]) {
            const int a = images_[c.e1.a], b = images_[c.e1.b];
            const int x = images_[c.e2.a], y = images_[c.e2.b];
            if (a == x || a == y || b == x || b == y || !target_.cross(a, b, x, y))
                return false;
        }
        return true;
    }

    bool assign(int depth)
    {
        if (depth == n_)
            return true;
        const int v = order_[depth];
        for (int t = 0; t < target_.size(); ++t) {
            images_[v] = t;
            if (consistent(v, t) && assign(depth + 1))
                return true;
        }
        images_[v] = -1;
        return false;
    }

    const GeometricGraph& source_;
    const CrossingStructure& target_;
    int n_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> images_;
    std::vector<std::vector<int>> earlier_neighbors_;
    std::vector<std::vector<int>> earlier_forced_;
    std::vector<std::vector<Crossing>> completed_crossings_;
};

} // namespace

bool is_graph_hom(const Graph& source, const Graph& target, const VertexMap& f)
{
    if (!map_in_range(f, source.size(), target.size()))
        return false;
    for (const auto& e : source.edges())
        if (f[e.a] == f[e.b] || !target.adjacent(f[e.a], f[e.b]))
            return false;
    return true;
}

bool is_geometric_hom(const GeometricGraph& source, const CrossingStructure& target,
                      const VertexMap& f)
{
    return is_graph_hom(source.graph(), target.graph(), f) && preserves_crossings(source, target, f);
}

bool is_geometric_hom(const GeometricGraph& source, const GeometricGraph& target,
                      const VertexMap& f)
{
    if (!is_graph_hom(source.graph(), target.graph(), f))
        return false;
    struct GeometricTarget {
        const GeometricGraph& g;
        bool cross(int a, int b, int x, int y) const
        {
            if (!g.graph().adjacent(a, b) || !g.graph().adjacent(x, y))
                return false;
            return segments_cross(g.position(a), g.position(b), g.position(x), g.position(y));
        }
    };
    return preserves_crossings(source, GeometricTarget{target}, f);
}

std::optional<VertexMap> find_geometric_hom(const GeometricGraph& source,
                                            const CrossingStructure& target,
                                            const DistinctnessGraph& forced)
{
    auto found = HomSearch(source, target, forced).run();
    if (found && !is_geometric_hom(source, target, *found))
        throw Error(ErrorCode::Internal, "homomorphism search produced an invalid map");
    return found;
}

std::optional<VertexMap> find_geometric_hom(const GeometricGraph& source,
                                            const CrossingStructure& target)
{
    return find_geometric_hom(source, target, non_identifiable_pairs(source));
}

GeochromaticResult geochromatic_number(const GeometricGraph& g, int max_n, CatalogStore& catalogs)
{
    if (max_n < 1 || max_n > kMaxCatalogSize)
        throw Error(ErrorCode::SizeUnsupported, "max_n must lie in 1..7");

    const auto forced = non_identifiable_pairs(g);
    GeochromaticResult result;
    result.lower_bound = std::max(1, chromatic_number(forced.as_graph()).n);
    result.searched_to = max_n;

    for (int n = result.lower_bound; n <= max_n; ++n) {
        const CliqueCatalog& catalog = catalogs.get(n);
        const auto& entries = catalog.entries;
        const long count = static_cast<long>(entries.size());
        std::vector<std::optional<VertexMap>> found(count);
        std::atomic<long> first_hit{count};

        // Probes are independent; the lowest hit index wins so the witness
        // does not depend on scheduling.
        if (count > 0)
            found[0] = find_geometric_hom(g, entries[0].structure, forced);
        if (count > 0 && found[0]) {
            first_hit = 0;
        } else if (count > 1) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 1; i < count; ++i) {
                if (i > first_hit.load())
                    continue;
                found[i] = find_geometric_hom(g, entries[i].structure, forced);
                if (found[i]) {
                    long cur = first_hit.load();
                    while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        }

        const long hit = first_hit.load();
        if (hit < count) {
            result.resolved = true;
            result.value = n;
            result.searched_to = n;
            result.catalog_index = static_cast<int>(hit);
            result.target = entries[hit].structure;
            result.target_witness = entries[hit].witness;
            result.witness = *found[hit];
            return result;
        }
        result.exhaustive = result.exhaustive && catalog.converged;
    }
    return result;
}

} // namespace geochrom
