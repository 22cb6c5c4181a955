#include "cubical/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubical {

int CubeComplex::dim() const {
  for (int d = kMaxDim; d >= 0; --d)
    if (!cells_[d].empty()) return d;
  return -1;
}

int CubeComplex::total_cells() const {
  int t = 0;
  for (const auto& c : cells_) t += static_cast<int>(c.size());
  return t;
}

int CubeComplex::find(int d, const std::string& id) const {
  if (d < 0 || d > kMaxDim) return -1;
  auto it = index_[d].find(id);
  return it == index_[d].end() ? -1 : it->second;
}

ComplexBuilder& ComplexBuilder::cell(int dim, const std::string& id,
                                     std::vector<std::pair<std::string, Sym>> faces) {
  Raw r;
  r.id = id;
  r.faces = std::move(faces);
  if (seen_[dim].count(id)) r.errors.push_back("duplicate id");
  seen_[dim][id] = static_cast<int>(raw_[dim].size());
  raw_[dim].push_back(std::move(r));
  return *this;
}

ComplexBuilder& ComplexBuilder::vertex(const std::string& id) { return cell(0, id, {}); }

ComplexBuilder& ComplexBuilder::edge(const std::string& id, const std::string& from, const std::string& to) {
  return cell(1, id, {{from, Sym::identity(0)}, {to, Sym::identity(0)}});
}

ComplexBuilder& ComplexBuilder::square(const std::string& id, const std::array<SideSpec, 4>& s) {
  std::vector<std::pair<std::string, Sym>> f;
  for (int k : {2, 3, 0, 1}) f.emplace_back(s[k].edge, dir_sym(s[k].dir));
  cell(2, id, std::move(f));
  for (int k = 0; k < 4; ++k)
    if (s[k].dir != 1 && s[k].dir != -1) raw_[2].back().errors.push_back("side direction must be +1 or -1");
  return *this;
}

ComplexBuilder& ComplexBuilder::square(const std::string& id, const std::array<std::string, 4>& corners,
                                       const std::array<SideSpec, 4>& sides) {
  square(id, sides);
  raw_[2].back().corners = std::vector<std::string>(corners.begin(), corners.end());
  return *this;
}

ComplexBuilder& ComplexBuilder::cube(const std::string& id, const std::array<FaceSpec, 6>& faces) {
  std::vector<std::pair<std::string, Sym>> f;
  std::vector<std::string> errs;
  for (const auto& fs : faces) {
    Sym s = Sym::identity(2);
    if (fs.sym < 0 || fs.sym >= 8)
      errs.push_back("face symmetry index " + std::to_string(fs.sym) + " out of range 0..7");
    else
      s = Sym::from_index(2, fs.sym);
    f.emplace_back(fs.square, s);
  }
  cell(3, id, std::move(f));
  for (auto& e : errs) raw_[3].back().errors.push_back(e);
  return *this;
}

ComplexBuilder& ComplexBuilder::cube(const std::string& id, const std::array<std::string, 8>& corners,
                                     const std::array<std::string, 12>& edges,
                                     const std::array<FaceSpec, 6>& faces) {
  cube(id, faces);
  raw_[3].back().corners = std::vector<std::string>(corners.begin(), corners.end());
  raw_[3].back().edges = std::vector<std::string>(edges.begin(), edges.end());
  return *this;
}

bool ComplexBuilder::has(int d, const std::string& id) const { return seen_[d].count(id) > 0; }

CubeComplex ComplexBuilder::build() const {
  CubeComplex X;
  std::array<std::vector<const Raw*>, 4> order;
  for (int d = 0; d <= kMaxDim; ++d) {
    for (const auto& r : raw_[d]) order[d].push_back(&r);
    std::stable_sort(order[d].begin(), order[d].end(), [](const Raw* a, const Raw* b) { return a->id < b->id; });
    for (const Raw* r : order[d]) {
      for (const auto& e : r->errors) X.errors_.push_back({d, r->id, e});
      if (X.index_[d].count(r->id)) continue;  // duplicate: keep the first
      X.index_[d][r->id] = static_cast<int>(X.cells_[d].size());
      Cell c;
      c.id = r->id;
      X.cells_[d].push_back(std::move(c));
    }
  }
  // resolve faces
  std::array<std::vector<const Raw*>, 4> kept;
  for (int d = 0; d <= kMaxDim; ++d) {
    kept[d].assign(X.cells_[d].size(), nullptr);
    for (const Raw* r : order[d]) {
      int i = X.index_[d][r->id];
      if (!kept[d][i]) kept[d][i] = r;
    }
    if (d == 0) continue;
    for (int i = 0; i < X.count(d); ++i) {
      const Raw* r = kept[d][i];
      Cell& c = X.cells_[d][i];
      if (static_cast<int>(r->faces.size()) != 2 * d)
        X.errors_.push_back({d, r->id, "expected " + std::to_string(2 * d) + " faces"});
      for (const auto& [name, sym] : r->faces) {
        int f = X.find(d - 1, name);
        if (f < 0) X.errors_.push_back({d, r->id, "unknown " + std::to_string(d - 1) + "-cell '" + name + "'"});
        c.faces.push_back({f, sym});
      }
      c.faces.resize(2 * d);
    }
  }
  // corners and 3-cube edges
  for (int d = 1; d <= kMaxDim; ++d) {
    for (int i = 0; i < X.count(d); ++i) {
      const Raw* r = kept[d][i];
      std::vector<int> corners;
      if (r->corners) {
        if (static_cast<int>(r->corners->size()) != (1 << d))
          X.errors_.push_back({d, r->id, "expected " + std::to_string(1 << d) + " corners"});
        for (const auto& name : *r->corners) {
          int v = X.find(0, name);
          if (v < 0) X.errors_.push_back({d, r->id, "unknown 0-cell '" + name + "'"});
          corners.push_back(v);
        }
        corners.resize(1 << d, -1);
      } else {
        for (int k = 0; k < (1 << d); ++k) corners.push_back(subface(X, d, i, Pos::corner(d, k)).cell);
      }
      X.cells_[d][i].corners = std::move(corners);
      if (d == 3) {
        std::vector<int> edges;
        if (r->edges) {
          if (r->edges->size() != 12) X.errors_.push_back({d, r->id, "expected 12 edges"});
          for (const auto& name : *r->edges) {
            int e = X.find(1, name);
            if (e < 0) X.errors_.push_back({d, r->id, "unknown 1-cell '" + name + "'"});
            edges.push_back(e);
          }
          edges.resize(12, -1);
        } else {
          for (int k = 0; k < 12; ++k) edges.push_back(subface(X, 3, i, cube_edge_pos(k)).cell);
        }
        X.cells_[3][i].edges = std::move(edges);
      }
    }
  }
  return X;
}

Occurrence subface(const CubeComplex& X, int dim, int cell, const Pos& pos, int first_axis) {
  Occurrence bad{pos.free_count(), -1, Sym::identity(pos.free_count())};
  if (cell < 0) return bad;
  int a = first_axis;
  if (a < 0)
    for (int i = 0; i < pos.n; ++i)
      if (pos.v[i] != 0) {
        a = i;
        break;
      }
  if (a < 0) return {dim, cell, Sym::identity(dim)};
  const Cell& c = X.cell(dim, cell);
  std::size_t f = 2 * a + (pos.v[a] > 0 ? 1 : 0);
  if (f >= c.faces.size() || c.faces[f].cell < 0 || c.faces[f].sym.n != dim - 1) return bad;
  const FaceRef& fr = c.faces[f];
  Pos P;
  P.n = static_cast<std::uint8_t>(dim - 1);
  for (int i = 0, j = 0; i < dim; ++i)
    if (i != a) P.v[j++] = pos.v[i];
  Pos PF = fr.sym.inverse().apply(P);
  Occurrence sub = subface(X, dim - 1, fr.cell, PF);
  if (sub.cell < 0) return bad;
  sub.sym = compose(restrict_to(fr.sym, PF), sub.sym);
  return sub;
}

std::pair<int, Pos> locate_in_face(const CubeComplex& X, int dim, int cell, const Pos& face_pos, const Pos& sub) {
  Occurrence occ = subface(X, dim, cell, face_pos);
  Pos Pf;
  Pf.n = static_cast<std::uint8_t>(face_pos.free_count());
  for (int i = 0, j = 0; i < face_pos.n; ++i)
    if (face_pos.v[i] == 0) Pf.v[j++] = sub.v[i];
  return {occ.cell, occ.sym.inverse().apply(Pf)};
}

std::vector<Pos> all_positions(int n) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<Pos> out;
  for (int code = 0; code < total; ++code) {
    Pos p;
    p.n = static_cast<std::uint8_t>(n);
    int c = code;
    for (int i = 0; i < n; ++i) {
      p.v[i] = static_cast<std::int8_t>(c % 3 - 1);
      c /= 3;
    }
    out.push_back(p);
  }
  return out;
}

Pos face_pos(int n, int axis, int sign) {
  Pos p;
  p.n = static_cast<std::uint8_t>(n);
  p.v[axis] = static_cast<std::int8_t>(sign);
  return p;
}

Pos cube_edge_pos(int k) {
  int a = k / 4;
  Pos p;
  p.n = 3;
  int bit = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == a) continue;
    p.v[i] = ((k >> bit) & 1) ? 1 : -1;
    ++bit;
  }
  return p;
}

int cube_edge_slot(const Pos& p) {
  int a = -1;
  for (int i = 0; i < 3; ++i)
    if (p.v[i] == 0) a = i;
  int k = 4 * a, bit = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == a) continue;
    if (p.v[i] > 0) k |= 1 << bit;
    ++bit;
  }
  return k;
}

Incidence::Incidence(const CubeComplex& X) {
  for (int d = 0; d <= kMaxDim; ++d) co_[d].resize(X.count(d));
  for (int d = 1; d <= kMaxDim; ++d) {
    auto positions = all_positions(d);
    for (int i = 0; i < X.count(d); ++i)
      for (const Pos& p : positions) {
        if (p.fixed_count() == 0) continue;
        Occurrence occ = subface(X, d, i, p);
        if (occ.cell >= 0) co_[occ.dim][occ.cell].push_back({d, i, p, occ.sym});
      }
  }
}

Subcomplex::Subcomplex(const CubeComplex& X) {
  for (int d = 0; d <= kMaxDim; ++d) in[d].assign(X.count(d), 0);
}

Subcomplex Subcomplex::all(const CubeComplex& X) {
  Subcomplex A(X);
  for (int d = 0; d <= kMaxDim; ++d) std::fill(A.in[d].begin(), A.in[d].end(), 1);
  return A;
}

int Subcomplex::count(int d) const { return static_cast<int>(std::count(in[d].begin(), in[d].end(), 1)); }

int Subcomplex::dim() const {
  for (int d = kMaxDim; d >= 0; --d)
    if (count(d)) return d;
  return -1;
}

std::vector<CellRef> Subcomplex::cells() const {
  std::vector<CellRef> out;
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < static_cast<int>(in[d].size()); ++i)
      if (in[d][i]) out.push_back({d, i});
  return out;
}

Subcomplex closure(const CubeComplex& X, const std::vector<CellRef>& seeds) {
  Subcomplex A(X);
  std::vector<CellRef> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    CellRef c = stack.back();
    stack.pop_back();
    if (c.index < 0 || A.has(c.dim, c.index)) continue;
    A.add(c.dim, c.index);
    if (c.dim > 0)
      for (const auto& f : X.cell(c.dim, c.index).faces) stack.push_back({c.dim - 1, f.cell});
  }
  return A;
}

bool is_closed(const CubeComplex& X, const Subcomplex& A) {
  for (int d = 1; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i)
      if (A.has(d, i))
        for (const auto& f : X.cell(d, i).faces)
          if (!A.has(d - 1, f.cell)) return false;
  return true;
}

namespace {

int root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

bool is_connected(const CubeComplex& X, const Subcomplex& A) {
  int n = X.count(0);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int e = 0; e < X.count(1); ++e)
    if (A.has(1, e)) p[root(p, X.cell(1, e).corners[0])] = root(p, X.cell(1, e).corners[1]);
  int r = -1;
  for (int v = 0; v < n; ++v) {
    if (!A.has(0, v)) continue;
    if (r < 0)
      r = root(p, v);
    else if (root(p, v) != r)
      return false;
  }
  return r >= 0;
}

std::vector<std::vector<int>> components(const CubeComplex& X) {
  int n = X.count(0);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int e = 0; e < X.count(1); ++e) p[root(p, X.cell(1, e).corners[0])] = root(p, X.cell(1, e).corners[1]);
  std::vector<std::vector<int>> out;
  std::unordered_map<int, int> slot;
  for (int v = 0; v < n; ++v) {
    int r = root(p, v);
    auto [it, fresh] = slot.emplace(r, static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

bool operator==(const CubeComplex& a, const CubeComplex& b) {
  for (int d = 0; d <= kMaxDim; ++d) {
    if (a.count(d) != b.count(d)) return false;
    for (int i = 0; i < a.count(d); ++i) {
      const Cell& x = a.cell(d, i);
      const Cell& y = b.cell(d, i);
      if (x.id != y.id || x.corners != y.corners || x.edges != y.edges || x.faces.size() != y.faces.size())
        return false;
      for (std::size_t f = 0; f < x.faces.size(); ++f)
        if (x.faces[f].cell != y.faces[f].cell || !(x.faces[f].sym == y.faces[f].sym)) return false;
    }
  }
  return true;
}

}  // namespace cubical
