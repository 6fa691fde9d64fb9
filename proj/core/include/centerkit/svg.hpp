#pragma once

#include "centerkit/fiber_graph.hpp"

#include <string>

namespace centerkit {

/// Deterministic SVG drawing of a fiber graph. Saddle vertices sit at the
/// intersection coordinates, sigma vertices (model G) on a vertical rail to the
/// right, loops are small circles. The root element carries the counts as
/// data-vertices, data-edges, data-loops, data-segment-edges, data-link-edges.
std::string render_graph_svg(const FiberGraph& graph);

}  // namespace centerkit
