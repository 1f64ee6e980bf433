#include "geochrom/catalog.hpp"

#include "geochrom/error.hpp"
#include "geochrom/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>

namespace geochrom {

namespace {

std::vector<Edge> complete_edges(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({i, j});
    return es;
}

// Orientation signs for sorted index triples of up to kMaxCatalogSize points.
class OrientationTable {
public:
    void set(int i, int j, int k, int s) noexcept
    {
        if (k < kMaxCatalogSize)
            sign_[i][j][k] = static_cast<signed char>(s);
    }

    int get(int a, int b, int c) const noexcept
    {
        int parity = 0;
        if (a > b) {
            std::swap(a, b);
            parity ^= 1;
        }
        if (b > c) {
            std::swap(b, c);
            parity ^= 1;
        }
        if (a > b) {
            std::swap(a, b);
            parity ^= 1;
        }
        const int s = sign_[a][b][c];
        return parity ? -s : s;
    }

    bool cross(int a, int b, int c, int d) const noexcept
    {
        return get(a, b, c) != get(a, b, d) && get(c, d, a) != get(c, d, b);
    }

    RawPattern pattern(int n) const noexcept
    {
        RawPattern key{0, 0};
        int slot = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l, ++slot) {
                        std::uint64_t state = 0;
                        if (cross(i, j, k, l))
                            state = 1;
                        else if (cross(i, k, j, l))
                            state = 2;
                        else if (cross(i, l, j, k))
                            state = 3;
                        key[slot / 32] |= state << (2 * (slot % 32));
                    }
        return key;
    }

private:
    signed char sign_[kMaxCatalogSize][kMaxCatalogSize][kMaxCatalogSize] = {};
};

using PatternMap = std::map<RawPattern, std::vector<Point>>;

template <class Key>
void keep_least(std::map<Key, std::vector<Point>>& into, const Key& key, const std::vector<Point>& pts)
{
    auto [it, inserted] = into.try_emplace(key, pts);
    if (!inserted && pts < it->second)
        it->second = pts;
}

class GridWalker {
public:
    GridWalker(int n, int g) : n_(n), g_(g), chosen_(n) {}

    // Enumerates subsets whose two lowest grid indices are `first` < `second`.
    void walk_from(int first, int second, PatternMap& out)
    {
        out_ = &out;
        chosen_[0] = point(first);
        chosen_[1] = point(second);
        extend(2, second + 1);
    }

private:
    Point point(int index) const { return {index % g_, index / g_}; }

    void extend(int depth, int next)
    {
        if (depth == n_) {
            leaf();
            return;
        }
        const int cells = g_ * g_;
        for (int idx = next; idx <= cells - (n_ - depth); ++idx) {
            const Point p = point(idx);
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i)
                for (int j = i + 1; j < depth; ++j) {
                    const int s = static_cast<int>(orientation(chosen_[i], chosen_[j], p));
                    if (s == 0) {
                        ok = false;
                        break;
                    }
                    table_.set(i, j, depth, s);
                }
            if (!ok)
                continue;
            chosen_[depth] = p;
            extend(depth + 1, idx + 1);
        }
    }

    void leaf()
    {
        if (std::none_of(chosen_.begin(), chosen_.end(), [](const Point& p) { return p.x == 0; }))
            return;
        keep_least(*out_, table_.pattern(n_), chosen_);
    }

    int n_;
    int g_;
    std::vector<Point> chosen_;
    OrientationTable table_;
    PatternMap* out_ = nullptr;
};

std::vector<std::pair<int, int>> seed_pairs(int n, int g)
{
    std::vector<std::pair<int, int>> seeds;
    const int cells = g * g;
    for (int first = 0; first < g; ++first)
        for (int second = first + 1; second <= cells - (n - 1); ++second)
            seeds.emplace_back(first, second);
    return seeds;
}

void check_size(int n)
{
    if (n < 3 || n > kMaxCatalogSize)
        throw Error(ErrorCode::SizeUnsupported,
                    "clique catalogs cover sizes 3..7, got " + std::to_string(n));
}

CliqueCatalog trivial_catalog(int n)
{
    CliqueCatalog cat;
    cat.n = n;
    cat.converged = true;
    std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}};
    pts.resize(n);
    GeometricGraph witness(pts, complete_edges(n));
    cat.entries.push_back({crossing_structure(witness), witness});
    return cat;
}

} // namespace

GeometricGraph convex_clique(int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidInput, "convex clique needs n >= 1");
    return GeometricGraph(regular_polygon(n), complete_edges(n));
}

int CliqueCatalog::find(const CrossingStructure& s) const
{
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].structure == s)
            return static_cast<int>(i);
    return -1;
}

RawPattern raw_pattern(std::span<const Point> points)
{
    const int n = static_cast<int>(points.size());
    check_size(n);
    OrientationTable table;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                table.set(i, j, k, static_cast<int>(orientation(points[i], points[j], points[k])));
    return table.pattern(n);
}

std::map<RawPattern, std::vector<Point>> grid_patterns_serial(int n, int g)
{
    check_size(n);
    PatternMap out;
    GridWalker walker(n, g);
    for (const auto& [first, second] : seed_pairs(n, g))
        walker.walk_from(first, second, out);
    return out;
}

std::map<RawPattern, std::vector<Point>> grid_patterns(int n, int g)
{
    check_size(n);
    const auto seeds = seed_pairs(n, g);
    const long count = static_cast<long>(seeds.size());
    PatternMap merged;

#pragma omp parallel
    {
        PatternMap local;
        GridWalker walker(n, g);
#pragma omp for schedule(dynamic, 1) nowait
        for (long s = 0; s < count; ++s)
            walker.walk_from(seeds[s].first, seeds[s].second, local);
#pragma omp critical(geochrom_grid_merge)
        for (const auto& [key, pts] : local)
            keep_least(merged, key, pts);
    }
    return merged;
}

CliqueCatalog catalog_from_patterns(int n, const std::map<RawPattern, std::vector<Point>>& patterns)
{
    check_size(n);
    const auto edges = complete_edges(n);
    std::map<std::vector<std::uint8_t>, std::vector<Point>> by_canonical;
    for (const auto& [key, pts] : patterns) {
        GeometricGraph witness(pts, edges);
        auto canon = crossing_structure(witness).canonical_form();
        keep_least(by_canonical, canon, pts);
    }

    CliqueCatalog cat;
    cat.n = n;
    const auto convex = crossing_structure(convex_clique(n)).canonical_form();
    auto convex_it = by_canonical.find(convex);
    auto push = [&](const std::vector<Point>& pts) {
        GeometricGraph witness(pts, edges);
        cat.entries.push_back({crossing_structure(witness), witness});
    };
    if (convex_it != by_canonical.end())
        push(convex_it->second);
    for (auto it = by_canonical.begin(); it != by_canonical.end(); ++it)
        if (it != convex_it)
            push(it->second);
    return cat;
}

CliqueCatalog enumerate_clique_structures(int n, int grid_start, int grid_limit)
{
    check_size(n);
    int previous = -1;
    CliqueCatalog last;
    for (int g = std::max(grid_start, 2); g <= grid_limit; ++g) {
        last = catalog_from_patterns(n, grid_patterns(n, g));
        last.grid_bound = g;
        const int count = static_cast<int>(last.entries.size());
        if (count == previous && count > 0) {
            last.converged = true;
            return last;
        }
        previous = count;
    }
    last.converged = false;
    return last;
}

const CliqueCatalog& CatalogStore::get(int n)
{
    if (auto it = cache_.find(n); it != cache_.end())
        return it->second;
    if (n >= 1 && n <= 3)
        return cache_[n] = trivial_catalog(n);
    const auto path = dir_ / ("k" + std::to_string(n) + ".catalog.json");
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::CatalogMissing, "no catalog for K" + std::to_string(n) + " at "
                                                   + path.string());
    auto cat = catalog_from_json(nlohmann::json::parse(in));
    if (cat.n != n)
        throw Error(ErrorCode::InvalidInput, path.string() + " holds a catalog for another size");
    return cache_[n] = std::move(cat);
}

void CatalogStore::put(CliqueCatalog catalog)
{
    const int n = catalog.n;
    cache_[n] = std::move(catalog);
}

bool CatalogStore::available(int n) const
{
    if (cache_.contains(n) || (n >= 1 && n <= 3))
        return true;
    return std::filesystem::exists(dir_ / ("k" + std::to_string(n) + ".catalog.json"));
}

} // namespace geochrom
