#pragma once

#include <string>

#include "nca/io.hpp"

namespace nca {

/// SVG 1.1 drawing of a snapshot (see snapshot_to_json): point area grows
/// with weight, matched segments solid, revoked segments dashed, region
/// split lines faint. Line inputs draw edges as arcs above the axis.
std::string render_svg(const Json& snapshot);

}  // namespace nca
