#pragma once

// Text and SVG drawings of an affine diagram cut open along the line
// between node n and node n+1.

#include <string>

#include "afftl/diagram.hpp"

namespace afftl {

enum class RenderFormat { ascii, svg };

// ASCII: arcs hang from the node rows with `+---+`, straight strands are
// `|`, strands that change column are tagged with a letter at both ends,
// `<` and `>` mark edges running through the cut, and each long horizontal
// edge is a full-width `<====>` line. An edge list with universal-cover
// positions follows the picture.
std::string render(const AffineDiagram& d, RenderFormat format);

}  // namespace afftl
