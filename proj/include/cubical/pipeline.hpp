#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubical/freegrp.hpp"
#include "cubical/gos.hpp"

namespace cubical {

enum class Target { npc, special };
const char* target_name(Target t);
/// Throws std::invalid_argument for anything but "npc" or "special".
Target parse_target(const std::string& s);

/// Violated generator-image constraint (phi(g_j) = 1, or two of the
/// phi(g_j)^{+-1} coincide), if any.
std::optional<std::string> generator_constraint_violation(const FiniteQuotient& phi);

/// Finite cover of a realization induced by phi. Graph vertex k carries the
/// copy of Y indexed by element k of phi; graph edge k*n + j is the thick
/// copy of Y_j joining phi_j(Y_j) in copy k to Y_j in copy k*phi(g_j).
struct CoverSpec {
  GraphOfSpaces realization;
  TotalSpace base;  // assembled realization
  FiniteQuotient phi;
  GraphOfSpaces gos;
  TotalSpace total;
  CubicalMap projection;  // total -> base.complex

  int rank() const { return phi.rank; }
  int edge_of(int q, int j) const { return q * phi.rank + j; }
};

/// Throws std::invalid_argument if the realization is not a one-vertex
/// graph of spaces with one loop per generator of phi, or (when
/// `enforce_constraints`) if phi violates the generator-image constraints.
CoverSpec induced_cover(const GraphOfSpaces& realization, const FiniteQuotient& phi, bool enforce_constraints = true);

/// The projection is an isomorphism on the link of every 0-cube.
Verdict check_covering(const CoverSpec& cover);

/// Left multiplication by phi(g_j) on copy indices, identity on cells of
/// each copy.
CubicalMap induced_automorphism(const CoverSpec& cover, int j);

struct Descent {
  CubicalMap map;           // automorphism of the quotient
  std::vector<std::string> mismatches;  // cells where q o Phi != Phi^E o q
  bool exact() const { return mismatches.empty(); }
};

/// Phi^E with Phi^E(q(x)) = q(Phi(x)), defined on a vertical preimage of
/// each quotient cell and then checked on every cell of the total space.
/// Throws std::invalid_argument if Q is not strict or Phi does not map
/// vertical cells to vertical cells and thick cells to thick cells over
/// the same interval.
Descent descend(const TotalSpace& T, const HorizontalQuotient& Q, const CubicalMap& Phi);

struct LedgerEntry {
  std::string check;
  bool ok = true;
  std::string detail;
  bool operator==(const LedgerEntry&) const = default;
};

struct Ledger {
  std::vector<LedgerEntry> entries;
  bool ok() const;
  const LedgerEntry* find(const std::string& check) const;
  void add(std::string check, bool ok, std::string detail = {});
};

/// Checks recomputable from R, the embedding and the extensions alone:
/// validity, dimension, NPC (with the k-corner cross-check), specialness and
/// two-sidedness for the special target, embedding and local convexity of
/// iota(Y), automorphism and extension equalities for each map.
Ledger certify(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O, const ComplexPtr& R,
               const CubicalMap& iota, const std::vector<CubicalMap>& Phi, Target target);

struct CoverVerification {
  Ledger ledger;
  std::optional<HorizontalQuotient> quotient;  // when strict
  CubicalMap iota;                             // Y -> R via the copy of the identity
  std::vector<CubicalMap> Phi;                 // descended automorphisms
  bool ok() const { return ledger.ok(); }
};

/// Cover-level checks (covering, deck maps, strictness, control for the
/// special target, descent exactness) followed by certify() on the quotient.
CoverVerification verify_cover(const CoverSpec& cover, const std::vector<PartialLocalIsometry>& O, Target target);

struct PipelineBudget {
  SearchBudget search;
  bool prune_restrictions = false;
};

struct CoverSearch {
  std::optional<CoverSpec> cover;
  std::optional<CoverVerification> verification;
  std::vector<std::string> trace;
};

/// Stage 1 finds a quotient separating the strictness products; stage 2
/// verifies its cover; stage 3 intersects it with further catalog
/// quotients until the cover verifies or the budget runs out. Throws
/// std::invalid_argument on an invalid realization and, for the special
/// target, on a realization that is not controlled.
CoverSearch search_cover(const GraphOfSpaces& realization, const std::vector<PartialLocalIsometry>& O, Target target,
                         const SearchBudget& budget);

/// Index of a map of which O[j] is a restriction (lowest such index; equal
/// maps defer to the earlier one), or -1.
std::vector<int> restriction_parents(const std::vector<PartialLocalIsometry>& O);

struct HrushovskiCertificate {
  ComplexPtr Y;
  std::vector<PartialLocalIsometry> O;
  Target target = Target::npc;
  ComplexPtr R;
  CubicalMap iota;
  std::vector<CubicalMap> Phi;  // one per map of O
  Ledger ledger;                // certify() entries, recomputable from the fields above
  Ledger cover_ledger;          // full verify_cover ledger
  std::vector<Perm> quotient_generators;
  int quotient_degree = 0;
  int quotient_order = 0;
  std::vector<int> pruned_to;  // restriction_parents when pruning, else all -1
};

struct HrushovskiOutcome {
  std::optional<HrushovskiCertificate> certificate;
  std::vector<std::string> trace;
};

/// Throws std::invalid_argument when some map is not a partial local
/// isometry of Y, dim(Y) > 2, or (special target) Y is not special or O is
/// not controlled.
HrushovskiOutcome hrushovski(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O, Target target,
                             const PipelineBudget& budget);

}  // namespace cubical
