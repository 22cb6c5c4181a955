#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubical/complex.hpp"

namespace cubical {

using ComplexPtr = std::shared_ptr<const CubeComplex>;

inline ComplexPtr share(CubeComplex X) { return std::make_shared<const CubeComplex>(std::move(X)); }

/// Image of one cell: target cell of the same dimension, and the symmetry
/// taking a point of the source cube to its image point in the target cube.
struct Image {
  int cell = -1;
  Sym sym;
  bool operator==(const Image&) const = default;
};

class CubicalMap {
 public:
  CubicalMap() = default;
  CubicalMap(ComplexPtr domain, ComplexPtr codomain);

  const ComplexPtr& domain() const { return dom_; }
  const ComplexPtr& codomain() const { return cod_; }
  const Image& at(int d, int i) const { return img_[d][i]; }
  Image& at(int d, int i) { return img_[d][i]; }
  void set(int d, int i, int cell, const Sym& sym) { img_[d][i] = {cell, sym}; }
  bool operator==(const CubicalMap& o) const;

 private:
  ComplexPtr dom_, cod_;
  std::array<std::vector<Image>, 4> img_;
};

CubicalMap identity_map(const ComplexPtr& X);

/// Apply f first, then g. Throws std::invalid_argument if the codomain of f
/// is not the domain of g.
CubicalMap compose(const CubicalMap& f, const CubicalMap& g);

struct MapIssue {
  int dim = -1;
  std::string cell;
  std::string message;
};

/// Dimension and boundary compatibility of every cell image.
std::vector<MapIssue> check_map(const CubicalMap& f);

/// The image f(F) of a face slot of cell (d, i) that is forced by the image
/// of (d, i) itself.
std::optional<Image> forced_face_image(const CubicalMap& f, int d, int i, int slot);

/// Fill in images of faces from images of higher cells, top dimension
/// first. Returns false on a conflict.
bool fill_faces(CubicalMap& f);

/// Inverse of a bijective map; nullopt if f is not bijective.
std::optional<CubicalMap> inverse(const CubicalMap& f);

/// Extend a map on 0-cubes to a cubical map, choosing for each higher cell
/// the first compatible target in (cell id, symmetry index) order.
std::optional<CubicalMap> infer_map(const ComplexPtr& domain, const ComplexPtr& codomain,
                                    const std::vector<int>& vertex_image);

struct Extracted {
  ComplexPtr complex;
  CubicalMap inclusion;  // into the ambient complex
};

/// The subcomplex A as a complex of its own (same ids), with its inclusion.
Extracted extract(const ComplexPtr& X, const Subcomplex& A);

Subcomplex image_of(const CubicalMap& f);
bool is_injective(const CubicalMap& f);

/// Cell lookup by id across all dimensions. Ids of the form "d:id" select
/// the dimension explicitly. Returns nullopt if missing or ambiguous.
std::optional<CellRef> find_any(const CubeComplex& X, const std::string& key);

}  // namespace cubical
