#include "geochrom/json_io.hpp"

#include "geochrom/error.hpp"
#include "geochrom/lifting.hpp"
#include "geochrom/obstructions.hpp"

#include <fstream>
#include <sstream>

namespace geochrom {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::int64_t integer_field(const nlohmann::json& obj, const char* key)
{
    if (!obj.contains(key) || !obj[key].is_number_integer())
        invalid(std::string("field '") + key + "' must be an integer");
    return obj[key].get<std::int64_t>();
}

} // namespace

ordered_json graph_to_json(const GeometricGraph& g)
{
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < g.size(); ++v) {
        ordered_json vj;
        vj["id"] = v;
        vj["x"] = g.position(v).x;
        vj["y"] = g.position(v).y;
        j["vertices"].push_back(std::move(vj));
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({e.a, e.b});
    return j;
}

GeometricGraph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        invalid("graph JSON needs a 'vertices' array");
    if (!j.contains("edges") || !j["edges"].is_array())
        invalid("graph JSON needs an 'edges' array");

    const auto& vs = j["vertices"];
    const auto n = vs.size();
    std::vector<Point> pts(n);
    std::vector<char> seen(n, 0);
    for (const auto& vj : vs) {
        if (!vj.is_object())
            invalid("each vertex must be an object");
        const auto id = integer_field(vj, "id");
        if (id < 0 || id >= static_cast<std::int64_t>(n) || seen[id])
            invalid("vertex ids must be exactly 0..n-1");
        seen[id] = 1;
        pts[id] = make_point(integer_field(vj, "x"), integer_field(vj, "y"));
    }

    std::vector<Edge> edges;
    for (const auto& ej : j["edges"]) {
        if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer()
            || !ej[1].is_number_integer())
            invalid("each edge must be a pair of integer ids");
        const auto a = ej[0].get<std::int64_t>();
        const auto b = ej[1].get<std::int64_t>();
        if (a < 0 || b < 0 || a >= static_cast<std::int64_t>(n) || b >= static_cast<std::int64_t>(n))
            invalid("edge references a missing vertex");
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return GeometricGraph(std::move(pts), std::move(edges));
}

ordered_json catalog_to_json(const CliqueCatalog& c)
{
    ordered_json j;
    j["n"] = c.n;
    j["grid_bound"] = c.grid_bound;
    j["converged"] = c.converged;
    j["entries"] = ordered_json::array();
    for (const auto& e : c.entries) {
        ordered_json ej;
        ej["witness"] = graph_to_json(e.witness);
        ej["canonical"] = e.structure.canonical_hex();
        j["entries"].push_back(std::move(ej));
    }
    return j;
}

CliqueCatalog catalog_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        invalid("catalog JSON needs an 'entries' array");
    CliqueCatalog c;
    c.n = static_cast<int>(integer_field(j, "n"));
    c.grid_bound = static_cast<int>(integer_field(j, "grid_bound"));
    if (!j.contains("converged") || !j["converged"].is_boolean())
        invalid("catalog JSON needs a boolean 'converged'");
    c.converged = j["converged"].get<bool>();
    for (const auto& ej : j["entries"]) {
        if (!ej.is_object() || !ej.contains("witness"))
            invalid("catalog entry needs a witness");
        auto witness = graph_from_json(ej["witness"]);
        if (witness.size() != c.n
            || witness.edges().size() != static_cast<std::size_t>(c.n * (c.n - 1) / 2))
            invalid("catalog witness is not a complete graph on n vertices");
        auto s = crossing_structure(witness);
        if (ej.contains("canonical") && ej["canonical"].get<std::string>() != s.canonical_hex())
            invalid("catalog canonical form does not match its witness");
        c.entries.push_back({std::move(s), std::move(witness)});
    }
    return c;
}

ordered_json map_to_json(const VertexMap& f)
{
    ordered_json j;
    j["map"] = f.images;
    return j;
}

std::vector<int> map_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
        invalid("homomorphism JSON needs a 'map' array");
    std::vector<int> images;
    for (const auto& t : j["map"]) {
        if (!t.is_number_integer())
            invalid("map entries must be integers");
        images.push_back(t.get<int>());
    }
    return images;
}

ordered_json coloring_to_json(const Coloring& c) { return ordered_json(c.colors); }

ordered_json lift_report_to_json(const LiftReport& r)
{
    ordered_json j;
    j["method"] = std::string(to_string(r.method));
    j["n_source"] = r.n_source;
    j["target_size"] = r.target_size;
    j["map"] = r.beta.images;
    j["cases"] = ordered_json::array();
    for (const auto& entry : r.case_log) {
        ordered_json cj;
        cj["crossing"] = {{entry.crossing.e1.a, entry.crossing.e1.b},
                          {entry.crossing.e2.a, entry.crossing.e2.b}};
        cj["case"] = std::string(to_string(entry.tag));
        j["cases"].push_back(std::move(cj));
    }
    return j;
}

ordered_json lower_bound_to_json(int lower_bound, const DistinctnessGraph& d)
{
    ordered_json j;
    j["lower_bound"] = lower_bound;
    j["path_cap"] = d.path_cap;
    j["pairs"] = ordered_json::array();
    for (const auto& [pair, rules] : d.provenance) {
        ordered_json pj;
        pj["pair"] = {pair.a, pair.b};
        ordered_json tags = ordered_json::array();
        for (char c : rule_letters(rules))
            tags.push_back(std::string(1, c));
        pj["rules"] = std::move(tags);
        j["pairs"].push_back(std::move(pj));
    }
    return j;
}

nlohmann::json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        invalid("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(path.string() + ": " + e.what());
    }
}

GeometricGraph read_graph_file(const std::filesystem::path& path)
{
    return graph_from_json(read_json_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        invalid("cannot write " + path.string());
    out << text;
}

std::string dump_line(const ordered_json& j) { return j.dump() + "\n"; }

} // namespace geochrom
