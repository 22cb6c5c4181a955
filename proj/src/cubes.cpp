#include "cubical/cubes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cubical {

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.dim << "-cell " << v.cell << ":";
    for (std::size_t i = 0; i < v.problems.size(); ++i) os << (i ? "; " : " ") << v.problems[i];
    os << "\n";
  }
  return os.str();
}

namespace {

std::string where(int d, const Pos& p) {
  if (p.free_count() == 0) return "corner c" + std::to_string(p.corner_index());
  if (d == 3 && p.free_count() == 1) return "edge slot " + std::to_string(cube_edge_slot(p));
  return "position " + p.str();
}

void check_cell(const CubeComplex& X, int d, int i, std::vector<std::string>& out) {
  const Cell& c = X.cell(d, i);
  for (std::size_t s = 0; s < c.faces.size(); ++s) {
    if (c.faces[s].cell < 0) return;  // already reported as a build error
    if (c.faces[s].sym.n != d - 1) {
      out.push_back("face slot " + std::to_string(s) + " has a symmetry of the wrong dimension");
      return;
    }
  }
  if (d < 2) return;
  for (const Pos& p : all_positions(d)) {
    if (p.fixed_count() < 2) continue;
    Occurrence first;
    bool agree = true;
    for (int a = 0; a < d && agree; ++a) {
      if (p.v[a] == 0) continue;
      Occurrence o = subface(X, d, i, p, a);
      if (first.dim < 0)
        first = o;
      else
        agree = o.cell == first.cell && o.sym == first.sym;
    }
    if (!agree) out.push_back("faces disagree at " + where(d, p));
  }
  for (int k = 0; k < (1 << d); ++k) {
    int got = subface(X, d, i, Pos::corner(d, k)).cell;
    if (c.corners[k] >= 0 && got >= 0 && got != c.corners[k])
      out.push_back("corner c" + std::to_string(k) + " is " + X.id(0, c.corners[k]) + " but the faces give " +
                    X.id(0, got));
  }
  if (d == 3)
    for (int k = 0; k < 12; ++k) {
      int got = subface(X, 3, i, cube_edge_pos(k)).cell;
      if (c.edges[k] >= 0 && got >= 0 && got != c.edges[k])
        out.push_back("edge slot " + std::to_string(k) + " is " + X.id(1, c.edges[k]) + " but the faces give " +
                      X.id(1, got));
    }
}

}  // namespace

ValidationReport validate(const CubeComplex& X) {
  std::map<std::pair<int, std::string>, std::vector<std::string>> found;
  for (const auto& e : X.build_errors()) found[{e.dim, e.cell}].push_back(e.message);
  for (int d = 1; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      std::vector<std::string> probs;
      check_cell(X, d, i, probs);
      if (!probs.empty()) {
        auto& v = found[{d, X.id(d, i)}];
        v.insert(v.end(), probs.begin(), probs.end());
      }
    }
  ValidationReport r;
  for (auto& [key, probs] : found) r.violations.push_back({key.first, key.second, std::move(probs)});
  return r;
}

int SimplexComplex::add_vertex(std::string label) {
  vertices.push_back(std::move(label));
  return static_cast<int>(vertices.size()) - 1;
}

int SimplexComplex::add_edge(int a, int b, std::string label) {
  edges.push_back({a, b});
  edge_labels.push_back(std::move(label));
  return static_cast<int>(edges.size()) - 1;
}

int SimplexComplex::add_triangle(int e0, int e1, int e2, std::string label) {
  triangles.push_back({e0, e1, e2});
  triangle_labels.push_back(std::move(label));
  return static_cast<int>(triangles.size()) - 1;
}

std::array<int, 3> SimplexComplex::triangle_vertices(int t) const {
  std::set<int> vs;
  for (int e : triangles[t]) {
    vs.insert(edges[e][0]);
    vs.insert(edges[e][1]);
  }
  std::array<int, 3> out{-1, -1, -1};
  int k = 0;
  for (int v : vs)
    if (k < 3) out[k++] = v;
  return out;
}

bool SimplexComplex::simplicial() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e[0] == e[1]) return false;
    if (!seen.insert({std::min(e[0], e[1]), std::max(e[0], e[1])}).second) return false;
  }
  return true;
}

namespace {

using Key = std::pair<int, int>;  // (cell, position code)

std::string occ_label(const CubeComplex& X, const Coface& c) { return X.id(c.dim, c.cell) + "[" + c.pos.str() + "]"; }

int lookup(const std::map<Key, int>& m, Key k) {
  auto it = m.find(k);
  if (it == m.end()) throw std::logic_error("link: complex is not consistent");
  return it->second;
}

}  // namespace

Link link(const CubeComplex& X, const Incidence& inc, CellRef D) {
  if (D.dim < 0 || D.dim > 2 || D.index < 0 || D.index >= X.count(D.dim))
    throw std::out_of_range("link: no such cell of dimension <= 2");
  Link L;
  L.center = D;
  int d = D.dim;
  std::map<Key, int> vkey, ekey;
  const auto& cofs = inc.of(d, D.index);
  for (const Coface& c : cofs)
    if (c.dim == d + 1) {
      vkey[{c.cell, c.pos.code()}] = L.add_vertex(occ_label(X, c));
      L.vertex_src.push_back(c);
    }
  auto fixed_axes = [](const Pos& p) {
    std::vector<int> ax;
    for (int i = 0; i < p.n; ++i)
      if (p.v[i] != 0) ax.push_back(i);
    return ax;
  };
  for (const Coface& c : cofs)
    if (c.dim == d + 2) {
      std::vector<int> ends;
      for (int a : fixed_axes(c.pos)) {
        Pos q = c.pos;
        q.v[a] = 0;
        auto [E, pe] = locate_in_face(X, c.dim, c.cell, q, c.pos);
        ends.push_back(lookup(vkey, {E, pe.code()}));
      }
      ekey[{c.cell, c.pos.code()}] = L.add_edge(ends[0], ends[1], occ_label(X, c));
      L.edge_src.push_back(c);
    }
  for (const Coface& c : cofs)
    if (c.dim == d + 3) {
      auto ax = fixed_axes(c.pos);
      std::vector<int> es;
      for (int keep : ax) {
        Pos q = c.pos;
        for (int a : ax)
          if (a != keep) q.v[a] = 0;
        auto [S, ps] = locate_in_face(X, c.dim, c.cell, q, c.pos);
        es.push_back(lookup(ekey, {S, ps.code()}));
      }
      L.add_triangle(es[0], es[1], es[2], occ_label(X, c));
      L.triangle_src.push_back(c);
    }
  return L;
}

Link link(const CubeComplex& X, CellRef D) { return link(X, Incidence(X), D); }

SimpleResult is_simple(const CubeComplex& X) {
  Incidence inc(X);
  for (int d = 0; d <= 1; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      Link L = link(X, inc, {d, i});
      std::map<std::pair<int, int>, int> seen;
      for (std::size_t e = 0; e < L.edges.size(); ++e) {
        auto [a, b] = L.edges[e];
        if (a == b) return {false, {d, i}, "loop", {L.edge_labels[e]}};
        auto [it, fresh] = seen.emplace(std::make_pair(std::min(a, b), std::max(a, b)), static_cast<int>(e));
        if (!fresh) return {false, {d, i}, "bigon", {L.edge_labels[it->second], L.edge_labels[e]}};
      }
    }
  return {};
}

FlagResult is_flag(const SimplexComplex& L) {
  FlagResult r;
  if (!L.simplicial()) {
    r.ok = false;
    r.not_simplicial = true;
    return r;
  }
  int n = static_cast<int>(L.vertices.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : L.edges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
  std::set<std::array<int, 3>> filled;
  for (int t = 0; t < static_cast<int>(L.triangles.size()); ++t) filled.insert(L.triangle_vertices(t));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!adj[u][v]) continue;
      for (int w = v + 1; w < n; ++w) {
        if (!adj[u][w] || !adj[v][w]) continue;
        if (!filled.count({u, v, w})) return {false, false, "empty-triangle", {u, v, w}};
        for (int x = w + 1; x < n; ++x)
          if (adj[u][x] && adj[v][x] && adj[w][x]) return {false, false, "four-clique", {u, v, w, x}};
      }
    }
  return r;
}

NpcResult is_npc(const CubeComplex& X) {
  SimpleResult s = is_simple(X);
  if (!s.ok) return {false, s.kind, s.cell, s.witness};
  Incidence inc(X);
  for (int v = 0; v < X.count(0); ++v) {
    Link L = link(X, inc, {0, v});
    FlagResult f = is_flag(L);
    if (f.ok) continue;
    NpcResult r{false, f.kind, {0, v}, {}};
    for (int j : f.clique) r.witness.push_back(L.vertices[j]);
    return r;
  }
  return {};
}

IntervalProduct product_with_interval(const ComplexPtr& Xp) {
  const CubeComplex& X = *Xp;
  if (X.dim() > 2) throw std::invalid_argument("product with interval: dimension cap exceeded");
  ComplexBuilder b;
  for (int d = 0; d <= X.dim(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const Cell& c = X.cell(d, i);
      for (const char* lv : {"@-", "@+"}) {
        std::vector<std::pair<std::string, Sym>> faces;
        for (const auto& f : c.faces) faces.emplace_back(X.id(d - 1, f.cell) + lv, f.sym);
        b.cell(d, c.id + lv, std::move(faces));
      }
      std::vector<std::pair<std::string, Sym>> faces;
      for (const auto& f : c.faces) faces.emplace_back(X.id(d - 1, f.cell) + "@I", extend(f.sym));
      faces.emplace_back(c.id + "@-", Sym::identity(d));
      faces.emplace_back(c.id + "@+", Sym::identity(d));
      b.cell(d + 1, c.id + "@I", std::move(faces));
    }
  IntervalProduct r;
  r.product = share(b.build());
  const CubeComplex& P = *r.product;
  r.lower = CubicalMap(Xp, r.product);
  r.upper = CubicalMap(Xp, r.product);
  for (int d = 0; d <= X.dim(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      r.lower.set(d, i, P.find(d, X.id(d, i) + "@-"), Sym::identity(d));
      r.upper.set(d, i, P.find(d, X.id(d, i) + "@+"), Sym::identity(d));
    }
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < P.count(d); ++i) {
      const std::string& id = P.id(d, i);
      std::string base = id.substr(0, id.size() - 2);
      char t = id.back();
      int lv = t == '-' ? -1 : (t == '+' ? 1 : 0);
      int bd = lv == 0 ? d - 1 : d;
      r.project[d].push_back({bd, X.find(bd, base)});
      r.level[d].push_back(lv);
    }
  return r;
}

}  // namespace cubical
