#include "geochrom/cli.hpp"

#include "geochrom/catalog.hpp"
#include "geochrom/error.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/homomorphism.hpp"
#include "geochrom/json_io.hpp"
#include "geochrom/lifting.hpp"
#include "geochrom/obstructions.hpp"
#include "geochrom/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

#ifndef GEOCHROM_DEFAULT_CATALOG_DIR
#define GEOCHROM_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace geochrom::cli {

namespace {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::CoordinateOutOfRange:
    case ErrorCode::SharedEndpoint:
    case ErrorCode::InvalidGraph:
    case ErrorCode::InvalidInput:
    case ErrorCode::SizeUnsupported:
    case ErrorCode::CatalogMissing:
    case ErrorCode::NotProperColoring:
    case ErrorCode::UnknownFigure:
        return kExitInvalid;
    default:
        return kExitNegative;
    }
}

void report_error(std::ostream& err, std::string_view code, std::string_view message)
{
    ordered_json j;
    j["error"] = std::string(code);
    j["message"] = std::string(message);
    err << dump_line(j);
}

/// Graph given inline or as a path relative to `base`.
GeometricGraph graph_ref(const nlohmann::json& j, const fs::path& base)
{
    if (j.is_string())
        return read_graph_file(base / j.get<std::string>());
    return graph_from_json(j);
}

struct Options {
    std::string graph;
    std::string graph2;
    std::string map_file;
    int max_n = kMaxCatalogSize;
    std::string catalog_dir = GEOCHROM_DEFAULT_CATALOG_DIR;
    std::string method;
    int path_cap = kDefaultPathCap;
    std::string family;
    int k = 3;
    int n = 1;
    std::uint64_t seed = 1;
    int vertices = 8;
    double p = 0.3;
    int dist = 0;
    int clusters = 0;
    std::string out;
    std::string map_out;
    std::string coloring_out;
    int grid_start = 0;
    int grid_limit = 12;
};

void emit(std::ostream& out, const Options& o, const ordered_json& j)
{
    if (o.out.empty())
        out << dump_line(j);
    else
        write_text_file(o.out, dump_line(j));
}

int cmd_chi(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    const auto r = chromatic_number(g.graph());
    ordered_json j;
    j["chi"] = r.n;
    j["coloring"] = coloring_to_json(r.witness);
    out << dump_line(j);
    return kExitOk;
}

int cmd_px(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    const auto r = pseudo_geochromatic_number(g);
    ordered_json j;
    j["px"] = r.n;
    j["coloring"] = coloring_to_json(r.witness);
    out << dump_line(j);
    return kExitOk;
}

int cmd_x(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    CatalogStore store(o.catalog_dir);
    const auto r = geochromatic_number(g, o.max_n, store);
    ordered_json j;
    if (!r.resolved) {
        j["status"] = "unresolved";
        j["searched_to"] = r.searched_to;
        j["lower_bound"] = r.lower_bound;
        j["exhaustive"] = r.exhaustive;
        out << dump_line(j);
        return kExitNegative;
    }
    j["x"] = r.value;
    j["lower_bound"] = r.lower_bound;
    j["exhaustive"] = r.exhaustive;
    j["catalog_index"] = r.catalog_index;
    j["canonical"] = r.target.canonical_hex();
    j["target"] = graph_to_json(r.target_witness);
    j["map"] = r.witness.images;
    out << dump_line(j);
    return kExitOk;
}

int cmd_lift(const Options& o, std::ostream& out)
{
    const auto method = parse_lift_method(o.method);
    if (!method)
        throw Error(ErrorCode::InvalidInput, "unknown lift method '" + o.method + "'");
    const auto g = read_graph_file(o.graph);
    Coloring alpha = chromatic_number(g.graph()).witness;
    LiftReport report;
    switch (*method) {
    case LiftMethod::Dist2: report = lift_dist2(g, alpha); break;
    case LiftMethod::Indep3n: report = lift_independent(g, alpha); break;
    case LiftMethod::SmallChi: report = lift_small_chi(g, alpha); break;
    case LiftMethod::Indep2n: {
        // With all vertices distinct no crossing can collapse, so this ends.
        for (int n = alpha.n;; ++n)
            if (auto c = find_noncollapsing_hom(g, n)) {
                alpha = *c;
                break;
            }
        report = lift_independent_noncollapsing(g, alpha);
        break;
    }
    }
    auto j = lift_report_to_json(report);
    j["alpha"] = coloring_to_json(alpha);
    out << dump_line(j);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    GeometricGraph source, target;
    std::vector<int> images;
    if (o.graph2.empty()) {
        const auto doc = read_json_file(o.graph);
        if (!doc.is_object() || !doc.contains("source") || !doc.contains("target"))
            throw Error(ErrorCode::InvalidInput, "homomorphism JSON needs 'source', 'target' and 'map'");
        const fs::path base = fs::path(o.graph).parent_path();
        source = graph_ref(doc["source"], base);
        target = graph_ref(doc["target"], base);
        images = map_from_json(doc);
    } else {
        if (o.map_file.empty())
            throw Error(ErrorCode::InvalidInput, "verify takes a homomorphism file or three files");
        source = read_graph_file(o.graph);
        target = read_graph_file(o.graph2);
        images = map_from_json(read_json_file(o.map_file));
    }
    if (static_cast<int>(images.size()) != source.size())
        throw Error(ErrorCode::InvalidInput, "map length must equal the source vertex count");
    for (int t : images)
        if (t < 0 || t >= target.size())
            throw Error(ErrorCode::InvalidInput, "map image out of target range");
    const VertexMap f{target.size(), images};
    const bool graph_hom = is_graph_hom(source.graph(), target.graph(), f);
    const bool geo_hom = graph_hom && is_geometric_hom(source, target, f);
    ordered_json j;
    j["graph_hom"] = graph_hom;
    j["geometric_hom"] = geo_hom;
    out << dump_line(j);
    return geo_hom ? kExitOk : kExitNegative;
}

int cmd_bound(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    const auto d = non_identifiable_pairs(g, o.path_cap);
    const int lb = std::max(1, chromatic_number(d.as_graph()).n);
    out << dump_line(lower_bound_to_json(lb, d));
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    const auto family = parse_family(o.family);
    if (!family)
        throw Error(ErrorCode::UnknownFigure, "unknown family '" + o.family + "'");
    std::optional<VertexMap> bundled_map;
    std::optional<Coloring> bundled_coloring;
    GeometricGraph g;
    switch (*family) {
    case Family::StarCrossing: {
        auto s = star_crossing(o.k);
        g = std::move(s.graph);
        bundled_map = std::move(s.map);
        break;
    }
    case Family::Separation: g = separation_family(o.n); break;
    case Family::ConvexClique:
        if (o.n < 1 || o.n > 64)
            throw Error(ErrorCode::InvalidInput, "convex clique size must lie in 1..64");
        g = convex_clique(o.n);
        break;
    case Family::Random: {
        RandomGraphParams params;
        params.vertex_count = o.vertices;
        params.edge_probability = o.p;
        params.min_crossing_distance = o.dist;
        params.seed = o.seed;
        params.clusters = o.clusters;
        g = random_geometric_graph(params);
        break;
    }
    case Family::Figure6:
        g = figure_graph(*family);
        bundled_coloring = figure6_coloring();
        break;
    default: g = figure_graph(*family); break;
    }
    emit(out, o, graph_to_json(g));
    if (!o.map_out.empty()) {
        if (!bundled_map)
            throw Error(ErrorCode::InvalidInput, "this family has no bundled map");
        write_text_file(o.map_out, dump_line(map_to_json(*bundled_map)));
    }
    if (!o.coloring_out.empty()) {
        if (!bundled_coloring)
            throw Error(ErrorCode::InvalidInput, "this family has no bundled coloring");
        ordered_json j;
        j["coloring"] = coloring_to_json(*bundled_coloring);
        write_text_file(o.coloring_out, dump_line(j));
    }
    return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out)
{
    const int grid_start = o.grid_start > 0 ? o.grid_start : o.n;
    const auto catalog = enumerate_clique_structures(o.n, grid_start, o.grid_limit);
    const fs::path dir = o.out.empty() ? fs::path(o.catalog_dir) : fs::path(o.out);
    fs::create_directories(dir);
    const fs::path file = dir / ("k" + std::to_string(o.n) + ".catalog.json");
    const auto cj = catalog_to_json(catalog);
    std::string text = "{\"n\":" + cj["n"].dump() + ",\"grid_bound\":" + cj["grid_bound"].dump()
                       + ",\"converged\":" + cj["converged"].dump() + ",\"entries\":[\n";
    for (std::size_t i = 0; i < cj["entries"].size(); ++i)
        text += cj["entries"][i].dump() + (i + 1 < cj["entries"].size() ? ",\n" : "\n");
    write_text_file(file, text + "]}\n");
    ordered_json j;
    j["n"] = catalog.n;
    j["structures"] = catalog.entries.size();
    j["grid_bound"] = catalog.grid_bound;
    j["converged"] = catalog.converged;
    j["file"] = file.string();
    out << dump_line(j);
    return catalog.converged ? kExitOk : kExitNegative;
}

int cmd_render(const Options& o)
{
    const auto g = read_graph_file(o.graph);
    if (o.out.empty())
        throw Error(ErrorCode::InvalidInput, "render needs -o");
    write_text_file(o.out, render_svg(g));
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact geochromatic computations on geometric graphs", "geochrom"};
    app.require_subcommand(1);

    auto* chi = app.add_subcommand("chi", "chromatic number with a witness coloring");
    chi->add_option("graph", o.graph, "graph JSON")->required();

    auto* x = app.add_subcommand("x", "geochromatic number via cataloged drawings of K_n");
    x->add_option("graph", o.graph, "graph JSON")->required();
    x->add_option("--max-n", o.max_n, "largest clique size to search")->check(CLI::Range(1, kMaxCatalogSize));
    x->add_option("--catalog", o.catalog_dir, "directory holding k<n>.catalog.json");

    auto* px = app.add_subcommand("px", "pseudo-geochromatic number with a witness coloring");
    px->add_option("graph", o.graph, "graph JSON")->required();

    auto* lift = app.add_subcommand("lift", "lift a coloring to a geometric homomorphism");
    lift->add_option("--method", o.method, "dist2, indep2n, indep3n or smallchi")->required();
    lift->add_option("graph", o.graph, "graph JSON")->required();

    auto* verify = app.add_subcommand("verify", "check a map as graph and geometric homomorphism");
    verify->add_option("source", o.graph, "source graph JSON, or a homomorphism JSON")->required();
    verify->add_option("target", o.graph2, "target graph JSON");
    verify->add_option("map", o.map_file, "map JSON");

    auto* bound = app.add_subcommand("bound", "obstruction bounds");
    auto* lower = bound->add_subcommand("lower", "lower bound from non-identifiable pairs");
    bound->require_subcommand(1);
    lower->add_option("graph", o.graph, "graph JSON")->required();
    lower->add_option("--path-cap", o.path_cap, "longest odd path considered")->check(CLI::Range(1, 63));

    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("family", o.family, "star, separation, figure1-left, ..., convex, random")->required();
    gen->add_option("--k", o.k, "star spokes");
    gen->add_option("--n", o.n, "family size parameter");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--vertices", o.vertices, "random vertex count");
    gen->add_option("--p", o.p, "random edge probability");
    gen->add_option("--dist", o.dist, "minimum crossing distance")->check(CLI::Range(0, 2));
    gen->add_option("--clusters", o.clusters, "random point clusters (0 = uniform)")->check(CLI::Range(0, 64));
    gen->add_option("-o,--out", o.out, "output file (default stdout)");
    gen->add_option("--map-out", o.map_out, "write the bundled map (star)");
    gen->add_option("--coloring-out", o.coloring_out, "write the bundled coloring (figure6)");

    auto* catalog = app.add_subcommand("catalog", "enumerate crossing structures of K_n");
    catalog->add_option("--n", o.n, "clique size")->required()->check(CLI::Range(3, kMaxCatalogSize));
    catalog->add_option("--out", o.out, "output directory");
    catalog->add_option("--grid-start", o.grid_start, "first grid size (default n)");
    catalog->add_option("--grid-limit", o.grid_limit, "largest grid size");

    auto* render = app.add_subcommand("render", "draw a graph as SVG");
    render->add_option("graph", o.graph, "graph JSON")->required();
    render->add_option("-o,--out", o.out, "SVG file")->required();

    std::vector<const char*> argv{"geochrom"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "InvalidInput", e.what());
        return kExitInvalid;
    }

    try {
        if (chi->parsed()) return cmd_chi(o, out);
        if (x->parsed()) return cmd_x(o, out);
        if (px->parsed()) return cmd_px(o, out);
        if (lift->parsed()) return cmd_lift(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (lower->parsed()) return cmd_bound(o, out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (catalog->parsed()) return cmd_catalog(o, out);
        if (render->parsed()) return cmd_render(o);
    } catch (const Error& e) {
        report_error(err, to_string(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report_error(err, "Internal", e.what());
        return kExitNegative;
    }
    return kExitInvalid;
}

} // namespace geochrom::cli
