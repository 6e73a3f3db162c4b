#pragma once

#include <string>

#include "braidwire/wiring.hpp"

namespace braidwire::tools {

// Deterministic SVG 1.1 drawing of a diagram. One column per element of the
// macro expansion, one row per strand position. Strand segments carry the
// colour of their component; TN and X expansions are framed by a bracket or
// a grid block.
std::string render_svg(const WiringDiagram& d);

}  // namespace braidwire::tools
