#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubical/freegrp.hpp"
#include "cubical/gos.hpp"
#include "cubical/hyperplanes.hpp"
#include "cubical/maps.hpp"
#include "cubical/pipeline.hpp"

namespace cubical::io {

using nlohmann::json;

/// Malformed input: wrong JSON shape, unknown cell, bad schema tag.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::filesystem::path& path);
std::string dump(const json& j);

/// Throws InputError unless j["schema"] is `schema` (a missing tag is accepted).
void expect_schema(const json& j, const std::string& schema);

/// cubecomplex.v1. Squares list sides as y=-1, y=+1, x=-1, x=+1; 3-cubes
/// list faces as x=-1, x=+1, y=-1, y=+1, z=-1, z=+1.
json to_json(const CubeComplex& X);
/// Shape errors throw InputError; reference errors (unknown ids, bad
/// symmetry indices) are kept as build errors for validate().
CubeComplex complex_from_json(const json& j);

/// "d:id".
std::string cell_key(const CubeComplex& X, CellRef c);
/// Accepts "d:id" or a bare id that is unique across dimensions.
CellRef parse_cell_key(const CubeComplex& X, const std::string& key);

/// cubicalmap.v1 with cells keyed by "d:id" of the domain.
json to_json(const CubicalMap& f, const std::string& domain_name, const std::string& codomain_name);
/// Every domain cell must be listed.
CubicalMap map_from_json(const json& j, const ComplexPtr& domain, const ComplexPtr& codomain);

/// partialmap.v1: {domain: [cell keys], cells: {key -> {image, sym}}}. In
/// place of `cells`, `vertices: {id -> id}` extends a 0-cube assignment by
/// infer_map. The domain is the closure of the listed cells.
json to_json(const PartialLocalIsometry& phi);
PartialLocalIsometry partial_from_json(const json& j, const ComplexPtr& Y);

/// instance.v1: {complex: cubecomplex, maps: [partialmap]}.
struct Instance {
  ComplexPtr Y;
  std::vector<PartialLocalIsometry> O;
};
json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

/// gos.v1.
json to_json(const GraphOfSpaces& G);
GraphOfSpaces gos_from_json(const json& j);

/// quotient.v1.
json to_json(const FiniteQuotient& phi);
FiniteQuotient quotient_from_json(const json& j);

/// product.v1: {rank, products: [[word, [gens], word, ...], ...]}.
struct ProductSet {
  int rank = 0;
  std::vector<CosetProduct> products;
};
json product_to_json(const CosetProduct& P);
json to_json(const ProductSet& s);
ProductSet products_from_json(const json& j);

/// specialness.v1.
json to_json(const SpecialnessReport& r);

json to_json(const Ledger& L);
Ledger ledger_from_json(const json& j);

/// certificate.v1.
json to_json(const HrushovskiCertificate& c);
HrushovskiCertificate certificate_from_json(const json& j);

}  // namespace cubical::io
