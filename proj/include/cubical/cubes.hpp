#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/cubical_map.hpp"

namespace cubical {

struct Violation {
  int dim = -1;
  std::string cell;
  std::vector<std::string> problems;
};

struct ValidationReport {
  std::vector<Violation> violations;  // one per offending cell, sorted by (dim, id)
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

ValidationReport validate(const CubeComplex& X);

/// Simplex complex with multiplicity: loops and parallel 1-simplices are kept.
struct SimplexComplex {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;      // vertex indices
  std::vector<std::array<int, 3>> triangles;  // edge indices
  std::vector<std::string> edge_labels;
  std::vector<std::string> triangle_labels;

  int add_vertex(std::string label);
  int add_edge(int a, int b, std::string label = {});
  int add_triangle(int e0, int e1, int e2, std::string label = {});
  std::array<int, 3> triangle_vertices(int t) const;
  /// No loops and no two 1-simplices with the same endpoints.
  bool simplicial() const;
};

/// Link of a cell of dimension <= 2. Link vertex j comes from the
/// occurrence vertex_src[j] of the center in a cube one dimension up; link
/// edges and triangles likewise from occurrences two and three dimensions up.
struct Link : SimplexComplex {
  CellRef center;
  std::vector<Coface> vertex_src, edge_src, triangle_src;
};

Link link(const CubeComplex& X, const Incidence& inc, CellRef D);
Link link(const CubeComplex& X, CellRef D);

struct SimpleResult {
  bool ok = true;
  CellRef cell;
  std::string kind;                 // "loop" or "bigon"
  std::vector<std::string> witness;  // offending link edge labels
};
SimpleResult is_simple(const CubeComplex& X);

struct FlagResult {
  bool ok = true;
  bool not_simplicial = false;
  std::string kind;          // "empty-triangle" or "four-clique"
  std::vector<int> clique;   // link vertex indices
};
FlagResult is_flag(const SimplexComplex& L);

struct NpcResult {
  bool ok = true;
  std::string kind;  // "loop", "bigon", "empty-triangle", "four-clique"
  CellRef center;
  std::vector<std::string> witness;
};
NpcResult is_npc(const CubeComplex& X);

/// X x [-1, +1]. Cells are named c@- and c@+ for the two ends and c@I for
/// c times the interval; the interval is the last coordinate.
struct IntervalProduct {
  ComplexPtr product;
  CubicalMap lower, upper;                     // X -> X x {-1}, X x {+1}
  std::array<std::vector<CellRef>, 4> project;  // cell of X x I -> cell of X
  std::array<std::vector<int>, 4> level;        // -1, +1, or 0 for c@I
};

/// Throws std::invalid_argument if dim(X) > 2.
IntervalProduct product_with_interval(const ComplexPtr& X);

}  // namespace cubical
