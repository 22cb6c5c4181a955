#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubical/sym.hpp"

namespace cubical {

constexpr int kMaxDim = 3;

struct FaceRef {
  int cell = -1;
  Sym sym;  // face cell coordinates -> remaining coordinates of the owner
};

/// One cube of a complex. Codimension-one faces are stored axis-major:
/// (axis 0, -1), (axis 0, +1), (axis 1, -1), ... For squares this is
/// x=-1, x=+1, y=-1, y=+1.
struct Cell {
  std::string id;
  std::vector<FaceRef> faces;
  std::vector<int> corners;  // corner k: coordinate i is +1 iff bit i of k
  std::vector<int> edges;    // 3-cubes: axis-major, remaining coordinates as bits
};

struct CellRef {
  int dim = -1;
  int index = -1;
  auto operator<=>(const CellRef&) const = default;
};

/// A finite cube complex of dimension at most 3. Cells of each dimension are
/// kept sorted by id, so index order is id order.
struct BuildError {
  int dim = -1;
  std::string cell;
  std::string message;
};

class CubeComplex {
 public:
  int dim() const;
  int count(int d) const { return static_cast<int>(cells_[d].size()); }
  int total_cells() const;
  const Cell& cell(int d, int i) const { return cells_[d][i]; }
  const std::vector<Cell>& cells(int d) const { return cells_[d]; }
  const std::string& id(int d, int i) const { return cells_[d][i].id; }
  int find(int d, const std::string& id) const;
  /// Problems found while resolving references (unknown ids, duplicates,
  /// bad symmetry indices). Reported again by validate().
  const std::vector<BuildError>& build_errors() const { return errors_; }

 private:
  friend class ComplexBuilder;
  std::array<std::vector<Cell>, 4> cells_;
  std::array<std::unordered_map<std::string, int>, 4> index_;
  std::vector<BuildError> errors_;
};

struct SideSpec {
  std::string edge;
  int dir = 1;
};

struct FaceSpec {
  std::string square;
  int sym = 0;
};

/// Collects cells by name; build() sorts, resolves and derives missing
/// corner and edge lists from the face data.
class ComplexBuilder {
 public:
  ComplexBuilder& vertex(const std::string& id);
  ComplexBuilder& edge(const std::string& id, const std::string& from, const std::string& to);
  /// Sides in the order y=-1, y=+1, x=-1, x=+1; corners derived.
  ComplexBuilder& square(const std::string& id, const std::array<SideSpec, 4>& sides);
  ComplexBuilder& square(const std::string& id, const std::array<std::string, 4>& corners,
                         const std::array<SideSpec, 4>& sides);
  /// Faces in the order x=-1, x=+1, y=-1, y=+1, z=-1, z=+1; corners and edges derived.
  ComplexBuilder& cube(const std::string& id, const std::array<FaceSpec, 6>& faces);
  ComplexBuilder& cube(const std::string& id, const std::array<std::string, 8>& corners,
                       const std::array<std::string, 12>& edges, const std::array<FaceSpec, 6>& faces);
  /// Generic form with internal face order.
  ComplexBuilder& cell(int dim, const std::string& id, std::vector<std::pair<std::string, Sym>> faces);

  bool has(int d, const std::string& id) const;
  CubeComplex build() const;

 private:
  struct Raw {
    std::string id;
    std::vector<std::pair<std::string, Sym>> faces;
    std::optional<std::vector<std::string>> corners;
    std::optional<std::vector<std::string>> edges;
    std::vector<std::string> errors;
  };
  std::array<std::vector<Raw>, 4> raw_;
  std::array<std::unordered_map<std::string, int>, 4> seen_;
};

/// A subcube sitting at position `pos` of a cell: the subcube cell and the
/// symmetry from its coordinates to the free coordinates of `pos`.
struct Occurrence {
  int dim = -1;
  int cell = -1;
  Sym sym;
};

/// Locate the subcube at `pos` of cell (dim, cell). `first_axis` selects the
/// codimension-one face used for the first descent step (-1: lowest fixed axis).
Occurrence subface(const CubeComplex& X, int dim, int cell, const Pos& pos, int first_axis = -1);

/// For a subcube `sub` inside the face at `face_pos` of (dim, cell): the face
/// cell and the position of `sub` in that cell's own coordinates.
std::pair<int, Pos> locate_in_face(const CubeComplex& X, int dim, int cell, const Pos& face_pos,
                                   const Pos& sub);

/// Every position of the standard n-cube, in base-3 code order.
std::vector<Pos> all_positions(int n);

/// Position of a codimension-one face.
Pos face_pos(int n, int axis, int sign);
/// Position of edge slot k (0..11) of a 3-cube.
Pos cube_edge_pos(int k);
int cube_edge_slot(const Pos& p);

struct Coface {
  int dim = -1;
  int cell = -1;
  Pos pos;
  Sym sym;
};

/// All occurrences of each cell as a proper face of higher cells, in
/// (dim, cell index, position code) order.
class Incidence {
 public:
  explicit Incidence(const CubeComplex& X);
  const std::vector<Coface>& of(int d, int i) const { return co_[d][i]; }

 private:
  std::array<std::vector<std::vector<Coface>>, 4> co_;
};

/// A set of cells, usually closed under taking faces.
struct Subcomplex {
  std::array<std::vector<char>, 4> in;

  Subcomplex() = default;
  explicit Subcomplex(const CubeComplex& X);
  static Subcomplex all(const CubeComplex& X);
  bool has(int d, int i) const { return i >= 0 && i < static_cast<int>(in[d].size()) && in[d][i]; }
  void add(int d, int i) { in[d][i] = 1; }
  int count(int d) const;
  int dim() const;
  std::vector<CellRef> cells() const;
};

/// Smallest subcomplex containing the seeds.
Subcomplex closure(const CubeComplex& X, const std::vector<CellRef>& seeds);
bool is_closed(const CubeComplex& X, const Subcomplex& A);
/// Connectivity of the 1-skeleton of A; false for the empty subcomplex.
bool is_connected(const CubeComplex& X, const Subcomplex& A);
/// Sorted ids of the 0-cubes of each connected component of X.
std::vector<std::vector<int>> components(const CubeComplex& X);

bool operator==(const CubeComplex& a, const CubeComplex& b);

}  // namespace cubical
