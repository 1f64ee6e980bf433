#pragma once

#include "geochrom/geometric_graph.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

namespace geochrom {

/// Complete graph on the regular n-gon; label i sits at id i-1 in hull order.
GeometricGraph convex_clique(int n);

struct CatalogEntry {
    CrossingStructure structure;
    GeometricGraph witness;
};

/// Distinct crossing structures of straight-line drawings of K_n. The
/// convex drawing, when n >= 4, is entry 0.
struct CliqueCatalog {
    int n = 0;
    int grid_bound = 0;
    bool converged = false;
    std::vector<CatalogEntry> entries;

    /// Index of the entry whose canonical form matches, or -1.
    int find(const CrossingStructure& s) const;
};

inline constexpr int kMaxCatalogSize = 7;

/// Labeled crossing pattern of an n-point set: two bits per 4-subset in
/// lexicographic order (0 = not convex, 1..3 = which pairing crosses).
using RawPattern = std::array<std::uint64_t, 2>;

/// Raw patterns of every general-position n-subset of the g x g grid whose
/// lowest point lies on row 0 and which touches column 0, each with the
/// lexicographically least point list realizing it. OpenMP-parallel over the
/// first two points.
std::map<RawPattern, std::vector<Point>> grid_patterns(int n, int g);

/// Serial reference for grid_patterns.
std::map<RawPattern, std::vector<Point>> grid_patterns_serial(int n, int g);

/// Raw pattern of one labeled point set (general position assumed).
RawPattern raw_pattern(std::span<const Point> points);

/// Deduplicates raw patterns by canonical form into a catalog for size n.
CliqueCatalog catalog_from_patterns(int n, const std::map<RawPattern, std::vector<Point>>& patterns);

/// Grows the grid from grid_start until two consecutive sizes give the same
/// structure count (converged), or grid_limit is passed (not converged).
CliqueCatalog enumerate_clique_structures(int n, int grid_start, int grid_limit = 12);

/// Catalogs by size. Sizes 1..3 are built in; larger sizes are read from
/// `<dir>/k<n>.catalog.json` on first use.
class CatalogStore {
public:
    CatalogStore() = default;
    explicit CatalogStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Throws CatalogMissing when the file does not exist.
    const CliqueCatalog& get(int n);
    void put(CliqueCatalog catalog);
    bool available(int n) const;

private:
    std::filesystem::path dir_;
    std::map<int, CliqueCatalog> cache_;
};

} // namespace geochrom
