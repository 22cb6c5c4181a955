#include "cubical/cubical_map.hpp"

#include <stdexcept>

namespace cubical {

CubicalMap::CubicalMap(ComplexPtr domain, ComplexPtr codomain) : dom_(std::move(domain)), cod_(std::move(codomain)) {
  for (int d = 0; d <= kMaxDim; ++d) img_[d].assign(dom_->count(d), Image{-1, Sym::identity(d)});
}

bool CubicalMap::operator==(const CubicalMap& o) const {
  if (!(*dom_ == *o.dom_) || !(*cod_ == *o.cod_)) return false;
  return img_ == o.img_;
}

CubicalMap identity_map(const ComplexPtr& X) {
  CubicalMap f(X, X);
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X->count(d); ++i) f.set(d, i, i, Sym::identity(d));
  return f;
}

CubicalMap compose(const CubicalMap& f, const CubicalMap& g) {
  if (f.codomain() != g.domain() && !(*f.codomain() == *g.domain()))
    throw std::invalid_argument("compose: codomain of the first map is not the domain of the second");
  CubicalMap h(f.domain(), g.codomain());
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < f.domain()->count(d); ++i) {
      const Image& a = f.at(d, i);
      if (a.cell < 0) continue;
      const Image& b = g.at(d, a.cell);
      if (b.cell < 0) continue;
      h.set(d, i, b.cell, compose(b.sym, a.sym));
    }
  return h;
}

std::optional<Image> forced_face_image(const CubicalMap& f, int d, int i, int slot) {
  const CubeComplex& cod = *f.codomain();
  const Cell& c = f.domain()->cell(d, i);
  const Image& im = f.at(d, i);
  const FaceRef& fr = c.faces[slot];
  if (im.cell < 0 || im.sym.n != d || fr.cell < 0) return std::nullopt;
  Pos P = face_pos(d, slot / 2, slot % 2 ? 1 : -1);
  Pos Q = im.sym.apply(P);
  Occurrence occ = subface(cod, d, im.cell, Q);
  if (occ.cell < 0) return std::nullopt;
  return Image{occ.cell, compose(occ.sym.inverse(), compose(restrict_to(im.sym, P), fr.sym))};
}

std::vector<MapIssue> check_map(const CubicalMap& f) {
  std::vector<MapIssue> out;
  const CubeComplex& X = *f.domain();
  const CubeComplex& Y = *f.codomain();
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const Image& im = f.at(d, i);
      if (im.cell < 0 || im.cell >= Y.count(d)) {
        out.push_back({d, X.id(d, i), "no image of dimension " + std::to_string(d)});
        continue;
      }
      if (im.sym.n != d) {
        out.push_back({d, X.id(d, i), "symmetry has the wrong dimension"});
        continue;
      }
      for (int s = 0; s < 2 * d; ++s) {
        int F = X.cell(d, i).faces[s].cell;
        if (F < 0) continue;
        auto want = forced_face_image(f, d, i, s);
        if (!want || !(*want == f.at(d - 1, F))) {
          std::string got = f.at(d - 1, F).cell >= 0 ? Y.id(d - 1, f.at(d - 1, F).cell) : "nothing";
          out.push_back({d, X.id(d, i),
                         "face " + X.id(d - 1, F) + " maps to " + got + " but the image of the cell forces " +
                             (want ? Y.id(d - 1, want->cell) + " sym " + std::to_string(want->sym.index())
                                   : std::string("an unresolved face"))});
          break;
        }
      }
    }
  return out;
}

bool fill_faces(CubicalMap& f) {
  const CubeComplex& X = *f.domain();
  for (int d = kMaxDim; d >= 1; --d)
    for (int i = 0; i < X.count(d); ++i) {
      if (f.at(d, i).cell < 0) continue;
      for (int s = 0; s < 2 * d; ++s) {
        int F = X.cell(d, i).faces[s].cell;
        auto want = forced_face_image(f, d, i, s);
        if (!want) return false;
        Image& cur = f.at(d - 1, F);
        if (cur.cell < 0)
          cur = *want;
        else if (!(cur == *want))
          return false;
      }
    }
  return true;
}

std::optional<CubicalMap> inverse(const CubicalMap& f) {
  CubicalMap g(f.codomain(), f.domain());
  for (int d = 0; d <= kMaxDim; ++d) {
    if (f.domain()->count(d) != f.codomain()->count(d)) return std::nullopt;
    for (int i = 0; i < f.domain()->count(d); ++i) {
      const Image& im = f.at(d, i);
      if (im.cell < 0 || g.at(d, im.cell).cell >= 0) return std::nullopt;
      g.set(d, im.cell, i, im.sym.inverse());
    }
  }
  return g;
}

std::optional<CubicalMap> infer_map(const ComplexPtr& domain, const ComplexPtr& codomain,
                                    const std::vector<int>& vertex_image) {
  const CubeComplex& X = *domain;
  const CubeComplex& Y = *codomain;
  if (static_cast<int>(vertex_image.size()) != X.count(0)) return std::nullopt;
  CubicalMap f(domain, codomain);
  for (int v = 0; v < X.count(0); ++v) {
    if (vertex_image[v] < 0 || vertex_image[v] >= Y.count(0)) return std::nullopt;
    f.set(0, v, vertex_image[v], Sym::identity(0));
  }
  Incidence inc(Y);
  for (int d = 1; d <= X.dim(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const Cell& c = X.cell(d, i);
      std::vector<int> want(c.corners.size());
      for (std::size_t k = 0; k < want.size(); ++k) want[k] = vertex_image[c.corners[k]];
      bool found = false;
      for (const Coface& co : inc.of(0, want[0])) {
        if (co.dim != d) continue;
        const Cell& t = Y.cell(d, co.cell);
        int j = co.pos.corner_index();
        for (int gi = 0; gi < Sym::order(d) && !found; ++gi) {
          Sym g = Sym::from_index(d, gi);
          if (g.apply_corner(0) != j) continue;
          bool ok = true;
          for (std::size_t k = 0; k < want.size() && ok; ++k)
            ok = t.corners[g.apply_corner(static_cast<int>(k))] == want[k];
          if (!ok) continue;
          f.set(d, i, co.cell, g);
          for (int s = 0; s < 2 * d && ok; ++s) {
            auto fi = forced_face_image(f, d, i, s);
            ok = fi && *fi == f.at(d - 1, c.faces[s].cell);
          }
          found = ok;
        }
        if (found) break;
      }
      if (!found) return std::nullopt;
    }
  return f;
}

Extracted extract(const ComplexPtr& X, const Subcomplex& A) {
  ComplexBuilder b;
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X->count(d); ++i) {
      if (!A.has(d, i)) continue;
      std::vector<std::pair<std::string, Sym>> faces;
      for (const auto& fr : X->cell(d, i).faces) faces.emplace_back(X->id(d - 1, fr.cell), fr.sym);
      b.cell(d, X->id(d, i), std::move(faces));
    }
  auto Z = share(b.build());
  CubicalMap inc(Z, X);
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < Z->count(d); ++i) inc.set(d, i, X->find(d, Z->id(d, i)), Sym::identity(d));
  return {Z, inc};
}

Subcomplex image_of(const CubicalMap& f) {
  Subcomplex A(*f.codomain());
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < f.domain()->count(d); ++i)
      if (f.at(d, i).cell >= 0) A.add(d, f.at(d, i).cell);
  return A;
}

bool is_injective(const CubicalMap& f) {
  for (int d = 0; d <= kMaxDim; ++d) {
    std::vector<char> hit(f.codomain()->count(d), 0);
    for (int i = 0; i < f.domain()->count(d); ++i) {
      int c = f.at(d, i).cell;
      if (c < 0) continue;
      if (hit[c]) return false;
      hit[c] = 1;
    }
  }
  return true;
}

std::optional<CellRef> find_any(const CubeComplex& X, const std::string& key) {
  if (key.size() > 2 && key[1] == ':' && key[0] >= '0' && key[0] <= '3') {
    int d = key[0] - '0';
    int i = X.find(d, key.substr(2));
    if (i >= 0) return CellRef{d, i};
  }
  std::optional<CellRef> hit;
  for (int d = 0; d <= kMaxDim; ++d) {
    int i = X.find(d, key);
    if (i < 0) continue;
    if (hit) return std::nullopt;
    hit = CellRef{d, i};
  }
  return hit;
}

}  // namespace cubical
