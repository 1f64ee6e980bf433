#pragma once

// Turning a proper coloring into a geometric homomorphism onto a convex
// clique, one crossing at a time.

#include "geochrom/geometric_graph.hpp"
#include "geochrom/homomorphism.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace geochrom {

enum class LiftMethod { Dist2, Indep2n, Indep3n, SmallChi };

std::string_view to_string(LiftMethod m);
/// Accepts "dist2", "indep2n", "indep3n", "smallchi".
std::optional<LiftMethod> parse_lift_method(std::string_view s);

/// How a crossing was handled. Case1 and Case2 have no lettered subcase:
/// Case1 means the colored edges already cross; Case2 is the incident case of
/// the small-chromatic-number lift.
enum class CaseTag { Case1, Case1a, Case1b, Case2, Case2a, Case2b, Case3 };

std::string_view to_string(CaseTag t);

struct CaseEntry {
    Crossing crossing;
    CaseTag tag;
};

struct LiftReport {
    LiftMethod method = LiftMethod::Dist2;
    int n_source = 0;
    int target_size = 0;
    /// Images are ids of convex_clique(target_size): hull label L is id L-1.
    VertexMap beta;
    /// One entry per crossing, ascending by lowest vertex id.
    std::vector<CaseEntry> case_log;
};

/// Target K_{n+2}. Requires pairwise crossing distance >= 2.
LiftReport lift_dist2(const GeometricGraph& g, const Coloring& alpha);

/// Target K_{2n}. Requires independent crossings and no crossing whose two
/// edges receive the same color pair.
LiftReport lift_independent_noncollapsing(const GeometricGraph& g, const Coloring& alpha);

/// Target K_{3n}. Requires independent crossings.
LiftReport lift_independent(const GeometricGraph& g, const Coloring& alpha);

/// Target K_{2n} for n in {2,3}. Colors c are placed on odd hull labels 2c-1.
LiftReport lift_small_chi(const GeometricGraph& g, const Coloring& alpha);

/// Proper n-coloring in which the two edges of every crossing get different
/// color pairs, or nullopt when none exists.
std::optional<Coloring> find_noncollapsing_hom(const GeometricGraph& g, int n);

} // namespace geochrom
