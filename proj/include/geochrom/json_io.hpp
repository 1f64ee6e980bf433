#pragma once

#include "geochrom/catalog.hpp"
#include "geochrom/geometric_graph.hpp"
#include "geochrom/homomorphism.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace geochrom {

struct LiftReport;
struct DistinctnessGraph;

using ordered_json = nlohmann::ordered_json;

/// {"vertices":[{"id":0,"x":..,"y":..},..],"edges":[[a,b],..]}; vertices by
/// id, edges as [min,max] in lexicographic order.
ordered_json graph_to_json(const GeometricGraph& g);
/// Validates the schema; throws InvalidInput or InvalidGraph.
GeometricGraph graph_from_json(const nlohmann::json& j);

ordered_json catalog_to_json(const CliqueCatalog& c);
/// Re-derives each witness structure and rejects a stored canonical string
/// that disagrees.
CliqueCatalog catalog_from_json(const nlohmann::json& j);

ordered_json map_to_json(const VertexMap& f);
/// Reads the "map" array of a homomorphism document.
std::vector<int> map_from_json(const nlohmann::json& j);

ordered_json coloring_to_json(const Coloring& c);
ordered_json lift_report_to_json(const LiftReport& r);
ordered_json lower_bound_to_json(int lower_bound, const DistinctnessGraph& d);

nlohmann::json read_json_file(const std::filesystem::path& path);
GeometricGraph read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Compact dump followed by a newline.
std::string dump_line(const ordered_json& j);

} // namespace geochrom
