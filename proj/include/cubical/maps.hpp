#pragma once

#include <string>
#include <vector>

#include "cubical/cubes.hpp"
#include "cubical/cubical_map.hpp"

namespace cubical {

struct Verdict {
  bool ok = true;
  std::string center;                // id of the 0-cube where the check failed
  std::string reason;
  std::vector<std::string> witness;  // cells involved
};

/// Injectivity of the induced map link(x) -> link(f(x)) at every 0-cube.
Verdict is_immersion(const CubicalMap& f);

/// Immersion whose link images are full subcomplexes (no missing squares
/// or 3-cubes). The witness names the edges at x that span a square corner
/// at f(x) but none at x.
Verdict is_local_isometry(const CubicalMap& f);

/// Every link of A sits in the link in X as a full subcomplex.
Verdict is_locally_convex(const CubeComplex& X, const Subcomplex& A);

/// A map phi from a subcomplex of Y into Y. `map` has the extracted domain
/// as its domain and Y as its codomain.
struct PartialLocalIsometry {
  ComplexPtr ambient;
  Subcomplex domain;
  CubicalMap map;
};

/// Restrict a self-map of Y to a closed subcomplex.
PartialLocalIsometry restrict_map(const CubicalMap& self_map, const Subcomplex& domain);

/// Every failed condition, empty when phi is a valid partial local isometry.
std::vector<std::string> validate_partial_local_isometry(const PartialLocalIsometry& phi);

bool is_automorphism(const CubicalMap& f);

}  // namespace cubical
