#pragma once

#include "geochrom/geometric_graph.hpp"

#include <string>

namespace geochrom {

/// Standalone SVG: edges as lines, vertices as labelled circles, crossing
/// points as small red squares. The y axis points up.
std::string render_svg(const GeometricGraph& g);

} // namespace geochrom
