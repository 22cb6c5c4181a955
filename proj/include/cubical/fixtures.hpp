#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubical/cubical_map.hpp"
#include "cubical/gos.hpp"
#include "cubical/maps.hpp"

namespace cubical::fixtures {

/// The standard n-cube I^n (n <= 3) with all of its faces. Cells are named
/// by position strings such as "0-+" and every attachment is the identity.
ComplexPtr standard_cube(int n);

/// Rebuild X with the face symmetry of one slot replaced.
ComplexPtr with_face_sym(const CubeComplex& X, int dim, const std::string& cell, int slot, const Sym& sym);

/// A graph on named vertices; edges are (id, from, to).
ComplexPtr graph(const std::vector<std::string>& vertices,
                 const std::vector<std::tuple<std::string, std::string, std::string>>& edges);
/// k loops at a single 0-cube "v".
ComplexPtr wedge_of_loops(int k);
/// Cycle graph on n vertices v0..v{n-1} with edges e{i}: v{i} -> v{i+1}.
ComplexPtr cycle_graph(int n);

/// Square whose sides y=-1 and x=-1 are the same edge (link loop at v0).
ComplexPtr folded_square();
/// Three squares meeting pairwise around a vertex; with `filled` the 3-cube
/// spanning them is included.
ComplexPtr corner_of_cube(bool filled);
/// Torus from one square: opposite sides glued.
ComplexPtr square_torus();

/// One square with a pair of opposite sides glued by a flip: one-sided.
ComplexPtr mobius_square();
/// One square whose two hyperplanes merge through a loop side: self-crossing.
ComplexPtr self_crossing_square();
/// One square with two dual edges leaving the same 0-cube: self-osculation.
ComplexPtr self_osculating_square();
/// Row of three squares with the top right corner glued to the bottom left
/// corner: the rung hyperplane inter-osculates with the first and last rows.
ComplexPtr inter_osculating_strip();

/// w x h grid of squares: 0-cubes p{x}_{y}, horizontal edges h{x}_{y},
/// vertical edges v{x}_{y}, squares s{x}_{y}.
ComplexPtr grid(int w, int h);

/// grid(n, 1) with its two end rungs identified: an annulus, or a Moebius
/// band when `twisted`. 0-cubes b{i}, t{i}; rungs r{i}: b{i} -> t{i}; bottom
/// and top edges hb{i}, ht{i}; squares s{i}.
ComplexPtr band(int n, bool twisted);
/// Random square complex with at most `squares` squares, grown by attaching
/// squares along existing edges and reusing edges when endpoints allow.
ComplexPtr random_square_complex(std::uint64_t seed, int squares);
/// Random multigraph with `vertices` vertices and `edges` edges (loops allowed).
ComplexPtr random_graph(std::uint64_t seed, int vertices, int edges);

/// Map between complexes from 0-cube names; throws if no cubical map
/// extends the assignment.
CubicalMap map_by_names(const ComplexPtr& dom, const ComplexPtr& cod,
                        const std::vector<std::pair<std::string, std::string>>& vertices);

/// One point with one loop whose edge-space is a point.
GraphOfSpaces point_circle();
/// A single edge a -> b (0-cubes "a", "b", 1-cube "e").
ComplexPtr edge_ab();
/// Partial isometry of `edge_ab` sending a to b.
PartialLocalIsometry edge_ab_shift();
/// Two squares u, w joined by a segment edge-space from the right side of u
/// to the left side of w.
GraphOfSpaces square_tree();
/// n copies of edge_ab in a cycle, with point edge-spaces gluing b of copy k
/// to a of copy k+1.
GraphOfSpaces cycle_of_edges(int n);
/// Unit square Y = grid(1, 1) with the left side sent to the right side.
PartialLocalIsometry square_side_shift();
/// Partial isometry of cycle_graph(n) sending edge e0 onto e1.
PartialLocalIsometry cycle_edge_shift(int n);
/// Two squares joined along a side and, by a point edge-space, at two
/// bottom corners: the vertical hyperplane remotely self-osculates.
GraphOfSpaces remote_osculation_circle();

/// Tree-shaped graph of grids: vertex-spaces grid(w, h) with 1 <= w, h <= 3,
/// edge-spaces points, segments or rectangles embedded by a symmetry of the
/// grid and a translation.
GraphOfSpaces random_tree_gos(std::uint64_t seed, int vertices);
/// Same spaces over a random connected multigraph with loops.
GraphOfSpaces random_gos(std::uint64_t seed, int vertices, int edges);

struct Realization {
  ComplexPtr Y;
  std::vector<PartialLocalIsometry> O;
};
/// Y = grid(w, h) with 1 <= w, h <= 3; each map sends a point, horizontal
/// segment or rectangle of Y onto a congruent copy of itself.
Realization random_grid_realization(std::uint64_t seed, int generators);
/// Y = cycle_graph(n); each map sends an arc onto an arc by a rotation or
/// reflection.
Realization random_cycle_realization(std::uint64_t seed, int n, int generators);

}  // namespace cubical::fixtures
