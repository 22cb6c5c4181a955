#pragma once

#include <string>

#include "cubical/cubes.hpp"
#include "cubical/gos.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical::dot {

/// Quoted DOT identifier.
std::string quote(const std::string& s);

/// 1-skeleton as an undirected multigraph; square and 3-cube counts go in
/// the graph label.
std::string skeleton(const CubeComplex& X, const std::string& name = "X");
std::string link(const Link& L, const std::string& name = "link");
/// Underlying graph of a graph of spaces, nodes labeled with cell counts.
std::string graph_of_spaces(const GraphOfSpaces& G, const std::string& name = "G");
std::string horizontal_graph(const TotalSpace& T, const HorizontalGraph& H, const std::string& name = "horizontal");
/// 1-skeleton of the carrier of H, dual edges drawn bold and red.
std::string carrier(const CubeComplex& X, const Hyperplane& H, const std::string& name = "carrier");

}  // namespace cubical::dot
