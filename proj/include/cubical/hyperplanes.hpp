#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/cubical_map.hpp"

namespace cubical {

/// Classes of 1-cubes under "opposite sides of a square". Classes are
/// numbered by their least edge index.
struct EdgeClasses {
  std::vector<int> class_of;              // per 1-cube
  std::vector<std::vector<int>> members;  // sorted edge indices per class
};
EdgeClasses edge_parallelism_classes(const CubeComplex& X);

/// Midcubes of X assembled into a cube complex: 0-cubes are edge
/// midpoints, 1-cubes square midcubes, 2-cubes 3-cube midcubes.
struct MidcubeComplex {
  ComplexPtr complex;
  std::array<std::vector<std::pair<int, int>>, 3> owner;  // (owning cube, axis) per midcube
  std::vector<int> component;                            // per midcube 0-cube
  int components = 0;
  /// Normal sign of each face relation: for midcube (d, i) and face slot s,
  /// +1 if the normal of the face midcube agrees with that of (d, i).
  std::array<std::vector<std::vector<int>>, 3> normal_sign;
};
MidcubeComplex build_midcube_complex(const CubeComplex& X);

struct Hyperplane {
  int id = -1;
  std::vector<int> dual_edges;              // sorted edge indices
  std::optional<std::vector<int>> orientation;  // +1/-1 aligned with dual_edges, when two-sided
  std::vector<int> reversing_cycle;          // dual edges of a reversing loop, when one-sided
  int component = -1;                        // midcube complex component
  Subcomplex carrier;
};

std::vector<Hyperplane> hyperplanes(const CubeComplex& X);

struct SideResult {
  bool two_sided = true;
  std::vector<int> orientation;  // aligned with dual_edges
  std::vector<int> cycle;        // when one-sided
};
SideResult two_sidedness(const CubeComplex& X, const Hyperplane& H);

struct Witness {
  bool found = false;
  std::vector<std::string> cells;
  std::string note;
};

Witness self_crossing(const CubeComplex& X, const Hyperplane& H);
/// Skipped (note "blocked-by-one-sidedness") for one-sided hyperplanes.
Witness self_osculation(const CubeComplex& X, const Hyperplane& H);
Witness inter_osculation(const CubeComplex& X, const Hyperplane& H1, const Hyperplane& H2);

struct HyperplaneFlags {
  int id = -1;
  std::vector<std::string> dual_edges;
  bool one_sided = false;
  bool self_crossing = false;
  bool self_osculating = false;
  bool osculation_blocked = false;
  Witness one_sided_witness, self_crossing_witness, self_osculation_witness;
  std::vector<std::string> loop_dual_edges;  // diagnostic only
};

struct InterOsculation {
  int h1 = -1, h2 = -1;
  Witness witness;
};

struct SpecialnessReport {
  bool npc = true;
  std::string precondition;  // why X is not NPC, if it is not
  std::vector<HyperplaneFlags> hyperplanes;
  std::vector<InterOsculation> inter;
  bool special = true;
};

SpecialnessReport is_special(const CubeComplex& X);

/// Verdicts read from the midcube complex alone, per component.
struct MidcubeVerdicts {
  std::vector<char> one_sided, self_crossing, self_osculating;
  std::vector<std::pair<int, int>> inter;  // component pairs, sorted
};
MidcubeVerdicts midcube_verdicts(const CubeComplex& X, const MidcubeComplex& M);

/// Some hyperplane with a dual edge in A is also dual to an edge outside A
/// that touches A.
Witness subcomplex_self_osculates(const CubeComplex& X, const Subcomplex& A);

}  // namespace cubical
