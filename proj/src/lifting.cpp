#include "geochrom/lifting.hpp"

#include "geochrom/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace geochrom {

namespace {

void require_proper(const GeometricGraph& g, const Coloring& alpha)
{
    if (alpha.n < 1 || !is_proper_coloring(g.graph(), alpha))
        throw Error(ErrorCode::NotProperColoring, "alpha is not a proper coloring with colors 1..n");
}

void require_distance(const GeometricGraph& g, int at_least)
{
    if (min_pairwise_crossing_distance(g) >= at_least)
        return;
    if (at_least >= 2)
        throw Error(ErrorCode::DistanceTooSmall, "some pair of crossings is at distance < 2");
    throw Error(ErrorCode::CrossingsNotIndependent, "some pair of crossings shares a vertex");
}

std::vector<Crossing> by_lowest_vertex(const GeometricGraph& g)
{
    auto cs = g.crossings();
    auto low = [](const Crossing& c) {
        const auto vs = c.vertices();
        return *std::min_element(vs.begin(), vs.end());
    };
    std::stable_sort(cs.begin(), cs.end(),
                     [&](const Crossing& a, const Crossing& b) { return low(a) < low(b); });
    return cs;
}

// Vertices of one crossing named as in the case analysis: e1 = {u,v},
// e2 = {x,y}.
struct Named {
    CaseTag tag;
    int u = -1, v = -1, x = -1, y = -1;
};

// Orders an edge's endpoints by color, ties by id.
std::pair<int, int> by_color(const Coloring& alpha, const Edge& e)
{
    if (alpha[e.a] < alpha[e.b] || (alpha[e.a] == alpha[e.b] && e.a < e.b))
        return {e.a, e.b};
    return {e.b, e.a};
}

bool alternate(int a1, int a2, int b1, int b2)
{
    if (a1 > a2)
        std::swap(a1, a2);
    if (b1 > b2)
        std::swap(b1, b2);
    if (b1 < a1) {
        std::swap(a1, b1);
        std::swap(a2, b2);
    }
    return a1 < b1 && b1 < a2 && a2 < b2;
}

// Normalizes a crossing onto exactly one case of the convex-clique
// analysis, where the extra hull labels follow 1..n.
Named classify(const Coloring& alpha, const Crossing& c)
{
    auto [p_lo, p_hi] = by_color(alpha, c.e1);
    auto [q_lo, q_hi] = by_color(alpha, c.e2);
    const int a1 = alpha[p_lo], a2 = alpha[p_hi], b1 = alpha[q_lo], b2 = alpha[q_hi];

    if (a1 == b1 && a2 == b2)
        return {CaseTag::Case3, p_lo, p_hi, q_hi, q_lo};

    const bool shares = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
    if (!shares) {
        if (alternate(a1, a2, b1, b2))
            return {CaseTag::Case1};
        // Make e1 the edge holding the smallest color.
        if (b1 < a1) {
            std::swap(p_lo, q_lo);
            std::swap(p_hi, q_hi);
        }
        const int lo1 = alpha[p_lo], hi1 = alpha[p_hi], lo2 = alpha[q_lo];
        if (hi1 < lo2) // separated: u < v < x < y
            return {CaseTag::Case1a, p_lo, p_hi, q_lo, q_hi};
        (void)lo1;
        // nested: y < u < v < x with e2 = {x,y} outside
        return {CaseTag::Case1b, q_lo, q_hi, p_hi, p_lo};
    }

    // One shared color: v on e1 and x on e2 carry it.
    const int shared = (a1 == b1 || a1 == b2) ? a1 : a2;
    const int p_shared = alpha[p_lo] == shared ? p_lo : p_hi;
    const int p_other = p_shared == p_lo ? p_hi : p_lo;
    const int q_shared = alpha[q_lo] == shared ? q_lo : q_hi;
    const int q_other = q_shared == q_lo ? q_hi : q_lo;
    int ea_shared = p_shared, ea_other = p_other, eb_shared = q_shared, eb_other = q_other;
    if (alpha[eb_other] < alpha[ea_other]) {
        std::swap(ea_shared, eb_shared);
        std::swap(ea_other, eb_other);
    }
    const int a = alpha[ea_other], b = alpha[eb_other];
    if (a < shared && shared < b)
        return {CaseTag::Case2a, ea_other, ea_shared, eb_shared, eb_other};
    // Shared color is extreme; lift the shared vertex on the edge whose other
    // end carries the middle color.
    if (shared > b)
        return {CaseTag::Case2b, eb_other, eb_shared, ea_shared, ea_other};
    return {CaseTag::Case2b, ea_other, ea_shared, eb_shared, eb_other};
}

void confirm_crossing(int target_size, const std::vector<int>& label, const Crossing& c)
{
    if (!convex_crossing_rule(target_size, label[c.e1.a], label[c.e1.b], label[c.e2.a],
                              label[c.e2.b]))
        throw Error(ErrorCode::Internal, "lifted crossing does not cross in the convex clique");
}

LiftReport finish(LiftMethod method, const GeometricGraph& g, const Coloring& alpha,
                  int target_size, std::vector<int> label, std::vector<CaseEntry> log)
{
    for (const auto& e : g.edges())
        if (label[e.a] == label[e.b])
            throw Error(ErrorCode::Internal, "lift identified two adjacent vertices");
    LiftReport r;
    r.method = method;
    r.n_source = alpha.n;
    r.target_size = target_size;
    r.beta.target_size = target_size;
    for (int l : label)
        r.beta.images.push_back(l - 1);
    r.case_log = std::move(log);
    return r;
}

// Shared driver for the additive lifts. `extra(vertex, rank)` gives the new
// label of the rank-th lifted vertex (rank 1 or 2) in the case's chain.
template <typename Lift, typename Identical>
LiftReport lift_by_cases(LiftMethod method, const GeometricGraph& g, const Coloring& alpha,
                         int target_size, Lift lift, Identical identical)
{
    std::vector<int> label = alpha.colors;
    std::vector<CaseEntry> log;
    for (const auto& c : by_lowest_vertex(g)) {
        const Named k = classify(alpha, c);
        switch (k.tag) {
        case CaseTag::Case1:
            break;
        case CaseTag::Case1a:
            label[k.v] = lift(k.v, 1);
            label[k.x] = lift(k.x, 2);
            break;
        case CaseTag::Case1b:
        case CaseTag::Case2b:
            label[k.v] = lift(k.v, 1);
            break;
        case CaseTag::Case2a:
            label[k.v] = lift(k.v, 1);
            label[k.y] = lift(k.y, 2);
            break;
        case CaseTag::Case3:
            identical(k, label);
            break;
        case CaseTag::Case2:
            throw Error(ErrorCode::Internal, "unexpected case");
        }
        confirm_crossing(target_size, label, c);
        log.push_back({c, k.tag});
    }
    return finish(method, g, alpha, target_size, std::move(label), std::move(log));
}

} // namespace

std::string_view to_string(LiftMethod m)
{
    switch (m) {
    case LiftMethod::Dist2: return "dist2";
    case LiftMethod::Indep2n: return "indep2n";
    case LiftMethod::Indep3n: return "indep3n";
    case LiftMethod::SmallChi: return "smallchi";
    }
    return "?";
}

std::optional<LiftMethod> parse_lift_method(std::string_view s)
{
    for (auto m : {LiftMethod::Dist2, LiftMethod::Indep2n, LiftMethod::Indep3n, LiftMethod::SmallChi})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::string_view to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::Case1: return "1";
    case CaseTag::Case1a: return "1a";
    case CaseTag::Case1b: return "1b";
    case CaseTag::Case2: return "2";
    case CaseTag::Case2a: return "2a";
    case CaseTag::Case2b: return "2b";
    case CaseTag::Case3: return "3";
    }
    return "?";
}

LiftReport lift_dist2(const GeometricGraph& g, const Coloring& alpha)
{
    require_proper(g, alpha);
    require_distance(g, 2);
    const int n = alpha.n;
    return lift_by_cases(
        LiftMethod::Dist2, g, alpha, n + 2, [n](int, int rank) { return n + rank; },
        [n](const Named& k, std::vector<int>& label) {
            label[k.v] = n + 1;
            label[k.y] = n + 2;
        });
}

LiftReport lift_independent_noncollapsing(const GeometricGraph& g, const Coloring& alpha)
{
    require_proper(g, alpha);
    require_distance(g, 1);
    for (const auto& c : g.crossings())
        if (classify(alpha, c).tag == CaseTag::Case3)
            throw Error(ErrorCode::CollapsedCrossingPair,
                        "alpha sends both edges of a crossing to the same edge");
    const int n = alpha.n;
    return lift_by_cases(
        LiftMethod::Indep2n, g, alpha, 2 * n, [&](int w, int) { return alpha[w] + n; },
        [](const Named&, std::vector<int>&) {});
}

LiftReport lift_independent(const GeometricGraph& g, const Coloring& alpha)
{
    require_proper(g, alpha);
    require_distance(g, 1);
    const int n = alpha.n;
    return lift_by_cases(
        LiftMethod::Indep3n, g, alpha, 3 * n, [&](int w, int) { return alpha[w] + n; },
        [&](const Named& k, std::vector<int>& label) {
            label[k.x] = alpha[k.x] + n;
            label[k.u] = alpha[k.u] + 2 * n;
        });
}

LiftReport lift_small_chi(const GeometricGraph& g, const Coloring& alpha)
{
    if (alpha.n != 2 && alpha.n != 3)
        throw Error(ErrorCode::ChiOutOfRange, "small-chromatic lift needs 2 or 3 colors");
    require_proper(g, alpha);
    require_distance(g, 1);

    const int size = 2 * alpha.n;
    std::vector<int> label(g.size());
    for (int v = 0; v < g.size(); ++v)
        label[v] = 2 * alpha[v] - 1;
    auto step_back = [size](int l) { return l == 1 ? size : l - 1; };
    auto back_distance = [size](int from, int to) { return ((from - to) % size + size) % size; };

    std::vector<CaseEntry> log;
    for (const auto& c : by_lowest_vertex(g)) {
        const int a1 = label[c.e1.a], a2 = label[c.e1.b];
        const int b1 = label[c.e2.a], b2 = label[c.e2.b];
        CaseTag tag;
        if (std::minmax(a1, a2) == std::minmax(b1, b2)) {
            // Both ends of e2 step back one hull position.
            label[c.e2.a] = step_back(b1);
            label[c.e2.b] = step_back(b2);
            tag = CaseTag::Case3;
        } else {
            const int shared = (a1 == b1 || a1 == b2) ? a1 : a2;
            const int p_shared = a1 == shared ? c.e1.a : c.e1.b;
            const int p_other = p_shared == c.e1.a ? c.e1.b : c.e1.a;
            const int q_shared = b1 == shared ? c.e2.a : c.e2.b;
            const int q_other = q_shared == c.e2.a ? c.e2.b : c.e2.a;
            // Keep the edge whose other end is met first walking backwards
            // from the shared label; step the other edge's shared end back.
            if (back_distance(shared, label[p_other]) < back_distance(shared, label[q_other]))
                label[q_shared] = step_back(shared);
            else
                label[p_shared] = step_back(shared);
            tag = CaseTag::Case2;
        }
        confirm_crossing(size, label, c);
        log.push_back({c, tag});
    }
    return finish(LiftMethod::SmallChi, g, alpha, size, std::move(label), std::move(log));
}

std::optional<Coloring> find_noncollapsing_hom(const GeometricGraph& g, int n)
{
    const int size = g.size();
    if (n < 1)
        return size == 0 ? std::optional<Coloring>(Coloring{n, {}}) : std::nullopt;

    const auto cdeg = crossing_degrees(size, g.crossings());
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (cdeg[a] != cdeg[b])
            return cdeg[a] > cdeg[b];
        return g.graph().neighbors(a).size() > g.graph().neighbors(b).size();
    });
    std::vector<int> pos(size);
    for (int i = 0; i < size; ++i)
        pos[order[i]] = i;
    std::vector<std::vector<Crossing>> completes(size);
    for (const auto& c : g.crossings()) {
        const auto vs = c.vertices();
        completes[*std::max_element(vs.begin(), vs.end(),
                                    [&](int a, int b) { return pos[a] < pos[b]; })]
            .push_back(c);
    }

    std::vector<int> color(size, 0);
    auto ok = [&](int v) {
        for (int w : g.graph().neighbors(v))
            if (color[w] == color[v])
                return false;
        for (const auto& c : completes[v])
            if (std::minmax(color[c.e1.a], color[c.e1.b]) == std::minmax(color[c.e2.a], color[c.e2.b]))
                return false;
        return true;
    };
    auto search = [&](auto&& self, int depth, int used) -> bool {
        if (depth == size)
            return true;
        const int v = order[depth];
        for (int c = 1; c <= std::min(n, used + 1); ++c) {
            color[v] = c;
            if (ok(v) && self(self, depth + 1, std::max(used, c)))
                return true;
        }
        color[v] = 0;
        return false;
    };
    if (!search(search, 0, 0))
        return std::nullopt;
    return Coloring{n, color};
}

} // namespace geochrom
