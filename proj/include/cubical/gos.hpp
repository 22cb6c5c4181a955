#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubical/cubes.hpp"
#include "cubical/cubical_map.hpp"
#include "cubical/hyperplanes.hpp"
#include "cubical/maps.hpp"

namespace cubical {

/// Finite graph; loops and multi-edges allowed.
struct UGraph {
  struct Edge {
    std::string id;
    int from = -1, to = -1;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int add_vertex(std::string id);
  int add_edge(std::string id, int from, int to);
  int find_vertex(const std::string& id) const;
  int find_edge(const std::string& id) const;
};

/// Edge-space with attaching maps into the vertex-spaces at the two ends.
struct EdgeSpace {
  ComplexPtr space;
  CubicalMap tau1, tau2;
};

struct GraphOfSpaces {
  UGraph graph;
  std::vector<ComplexPtr> vertex_spaces;  // per graph vertex
  std::vector<EdgeSpace> edge_spaces;     // per graph edge
};

/// Every violated invariant. Graphs of links may have empty or
/// disconnected edge-spaces, so connectivity is optional.
std::vector<std::string> check_gos(const GraphOfSpaces& G, bool connected_edge_spaces = true);

/// Where a cell of the total space comes from: a cell of a vertex-space, or
/// the product of a cell of an edge-space with the interval.
struct Provenance {
  bool vertical = true;
  int node = -1;    // graph vertex (vertical) or graph edge (thick)
  CellRef source;   // cell of the vertex-space or edge-space
};

/// Vertex-space cells are named "<v>/<cell>", thick cells "<e>/<cell>/I".
/// The interval is the last coordinate of a thick cell; its -1 end is
/// attached by tau1 and its +1 end by tau2.
struct TotalSpace {
  GraphOfSpaces gos;
  ComplexPtr complex;
  std::array<std::vector<Provenance>, 4> provenance;
  std::vector<std::array<std::vector<int>, 4>> vertical_cell;  // [v][d][i] -> total index
  std::vector<std::array<std::vector<int>, 4>> thick_cell;     // [e][d][i] -> total index (dim d+1)

  /// Graph vertex or edge a cell projects to.
  int projection(int d, int i) const { return provenance[d][i].node; }
};

/// Throws std::invalid_argument listing the problems if check_gos fails.
TotalSpace assemble(const GraphOfSpaces& G, bool connected_edge_spaces = true);

/// One vertex "v" carrying Y and one loop "g<j>" per partial isometry, with
/// tau1 the inclusion of its domain and tau2 the map itself. Throws
/// std::invalid_argument if some map fails validation.
GraphOfSpaces realization(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O);

/// Image of a total-space cell under the horizontal quotient. Thick cells
/// drop their interval coordinate; `sym` maps the remaining coordinates
/// (all coordinates for vertical cells) to those of the quotient cell.
struct QuotientImage {
  CellRef cell;
  Sym sym;
};

struct HorizontalQuotient {
  bool strict = false;
  std::string reason;                // why no complex was built
  std::vector<std::string> witness;  // two cells of one vertex-space in one class
  ComplexPtr complex;                // cells named by their class representative
  std::array<std::vector<QuotientImage>, 4> q;
  std::vector<CubicalMap> vertex_maps;  // X_v -> quotient, per graph vertex
};

/// Identify the two ends of every thick cell. Refuses (strict = false) when
/// two cells of one vertex-space fall in one class or a class would be glued
/// to itself by a nontrivial symmetry.
HorizontalQuotient horizontal_quotient(const TotalSpace& T);

struct StrictVerdict {
  bool ok = true;
  std::vector<std::string> witness;  // two 0-cubes of one vertex-space
};
/// No two 0-cubes of one vertex-space are E-parallel.
StrictVerdict is_strict(const TotalSpace& T);

/// E-parallelism class of a vertical cell, as sorted total-space indices.
/// Throws std::invalid_argument for thick cells.
std::vector<int> e_class(const TotalSpace& T, CellRef cell);

struct HorizontalGraph {
  struct Edge {
    int cell = -1;        // thick 1-cell of the total space
    int from = -1, to = -1;  // total-space 0-cubes: tau2 end, tau1 end
    int graph_edge = -1;  // underlying edge label
  };
  std::vector<int> vertices;  // sorted total-space 0-cubes
  std::vector<Edge> edges;
};
HorizontalGraph horizontal_graph(const TotalSpace& T, int vertex);

/// A 1-dimensional cube complex with the same vertices and edges as a
/// simplex complex without 2-simplices. Ids are the link labels.
ComplexPtr link_complex(const SimplexComplex& L);

struct GraphOfLinks {
  GraphOfSpaces gos;
  bool matches_quotient_link = false;
  std::string mismatch;
};

/// Links of the horizontal graph over quotient 0-cube x, as a graph of
/// spaces, and whether its own horizontal quotient reproduces link(x).
/// Requires a strict quotient and vertex-spaces of dimension <= 2; throws
/// std::invalid_argument otherwise.
GraphOfLinks induced_graph_of_links(const TotalSpace& T, const HorizontalQuotient& Q, int x);

struct ControlIssue {
  std::string edge;
  int side = 0;       // 1 or 2; 0 for a precondition on a space
  std::string kind;   // "precondition", "wall-injectivity", "cross-injectivity", "self-osculation"
  std::vector<std::string> cells;
};

struct ControlVerdict {
  bool ok = true;
  bool precondition_ok = true;
  std::vector<ControlIssue> issues;
};
ControlVerdict is_controlled(const GraphOfSpaces& G);

struct RemoteOsculation {
  std::string kind;           // "self" or "inter"
  int h1 = -1, h2 = -1;       // hyperplane ids of the total space
  int a = -1, b = -1;         // vertical 1-cubes of the total space
  int ta = -1, tb = -1;       // their ends in the horizontal graph
  int graph = -1;             // least 0-cube of the horizontal graph
};

/// Remote self- and inter-osculation witnesses, sorted. Requires a strict
/// quotient; throws std::invalid_argument otherwise.
std::vector<RemoteOsculation> detect_remote_osculation(const TotalSpace& T, const HorizontalQuotient& Q);

struct KCorner {
  int k = 0;                        // 1, 2 or 3
  CellRef center;                   // 0-cube or 1-cube
  std::vector<CellRef> cells;       // center, spokes and k top cubes, sorted
};

/// Empty k-corners for k <= 3: k-cycles in the link of a 0-cube or 1-cube
/// that bound no cube. Deduplicated by image cell set.
std::vector<KCorner> detect_empty_k_corners(const CubeComplex& X);

}  // namespace cubical
