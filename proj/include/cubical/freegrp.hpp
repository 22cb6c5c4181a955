#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubical/gos.hpp"

namespace cubical {

/// Letters are +(j+1) for generator j and -(j+1) for its inverse.
using Word = std::vector<int>;

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Letters a..z are generators 0..25, capitals their inverses. Throws
/// std::invalid_argument on other characters.
Word parse_word(const std::string& s);
std::string format_word(const Word& w);

/// Based labeled graph. out[v][j] / in[v][j] hold the target / source of the
/// j-labeled edge at v, or -1. Only folded graphs are stored this way.
struct StallingsGraph {
  int rank = 0;
  int base = 0;
  std::vector<std::vector<int>> out, in;

  int vertex_count() const { return static_cast<int>(out.size()); }
  int edge_count() const;
  /// End of the path reading the reduced word w from v, or -1.
  int trace(int v, const Word& w) const;
};

/// Fold a labeled graph (edges (from, to, generator)) to completion and
/// trim hanging trees away from the base. `vertex_map` receives the folded
/// vertex of every input vertex (-1 if trimmed).
StallingsGraph fold_graph(int rank, int vertices, const std::vector<std::array<int, 3>>& edges, int base,
                          std::vector<int>* vertex_map = nullptr);
StallingsGraph stallings(int rank, const std::vector<Word>& generators);
bool member(const StallingsGraph& H, const Word& w);
/// Free basis read off a BFS spanning tree at the base.
std::vector<Word> subgroup_generators(const StallingsGraph& H);
/// w lies in H1 x H2.
bool in_double_coset(const StallingsGraph& H1, const Word& x, const StallingsGraph& H2, const Word& w);

/// Permutations of {0..m-1}; (p*q)[i] = q[p[i]] (apply p first).
using Perm = std::vector<int>;
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inv(const Perm& p);

/// Homomorphism from the free group of rank n onto the permutation group
/// generated by the generator images. Elements are numbered in BFS order
/// from the identity (element 0).
struct FiniteQuotient {
  int rank = 0;
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::map<Perm, int> index;
  std::vector<std::vector<int>> right;      // right[s][x]: x * gens[s]
  std::vector<std::vector<int>> right_inv;  // x * gens[s]^-1

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int x, int y) const;
  int eval(const Word& w) const;
};

/// nullopt if the generated group has more than max_order elements.
std::optional<FiniteQuotient> make_quotient(int rank, int degree, const std::vector<Perm>& gens,
                                            std::size_t max_order = 100000);

/// Sorted element indices.
std::vector<int> image_in_quotient(const FiniteQuotient& phi, const StallingsGraph& H);

/// g0 H1 g1 ... Hm gm.
struct CosetProduct {
  std::vector<Word> words;               // m + 1 words
  std::vector<StallingsGraph> subgroups;  // m subgroups
};

std::vector<int> product_image(const FiniteQuotient& phi, const CosetProduct& P);
bool separates(const FiniteQuotient& phi, const CosetProduct& P);

struct SearchBudget {
  int max_degree = 8;
  double max_seconds = 10;
  std::uint64_t seed = 0;
  int random_per_degree = 500;
  std::size_t tuple_cap = 20000;  // exhaustive tuple enumeration limit per catalog group
  std::size_t max_order = 100000;
  int jobs = 1;
};

struct SearchOutcome {
  std::optional<FiniteQuotient> quotient;
  std::string source;              // catalog entry or random stage that produced it
  std::vector<std::string> trace;  // per-stage summary
  long candidates = 0;
};

/// First candidate in catalog order (then seeded random tuples by degree)
/// that separates every product and passes `accept`.
SearchOutcome find_separating_quotient(int rank, const std::vector<CosetProduct>& products, const SearchBudget& budget,
                                       const std::function<bool(const FiniteQuotient&)>& accept = {});

/// Diagonal quotient; kernel is the intersection. Throws std::length_error
/// above max_order and std::invalid_argument on rank mismatch.
FiniteQuotient intersect(const FiniteQuotient& a, const FiniteQuotient& b, std::size_t max_order = 100000);

/// Horizontal graph of 0-cube c of a total space over a bouquet, labeled by
/// loop index, folded and based at c. Traversing a horizontal edge from its
/// tau2 end to its tau1 end reads the generator of its loop.
StallingsGraph horizontal_subgroup(const TotalSpace& T, int c);
std::optional<Word> connecting_word(const TotalSpace& T, int ci, int cj);

struct StrictnessProduct {
  int ci = -1, cj = -1;  // total-space 0-cubes
  CosetProduct product;  // K_i w_ij K_j
};
/// One product per ordered pair of distinct 0-cubes of one horizontal graph
/// lying in one vertex-space.
std::vector<StrictnessProduct> strictness_products(const TotalSpace& T);

}  // namespace cubical
