#include "cubical/hyperplanes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cubical/cubes.hpp"

namespace cubical {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

using EdgePair = std::pair<int, int>;

EdgePair unordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Unordered pairs of edges that are consecutive sides of some square.
std::set<EdgePair> consecutive_sides(const CubeComplex& X) {
  std::set<EdgePair> out;
  for (const auto& s : X.cells(2))
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b) out.insert(unordered(s.faces[a].cell, s.faces[b].cell));
  return out;
}

// Parallelism relation with orientation: o(e2) = o(e1) * rel.
struct Relation {
  int other;
  int rel;
  int square;
};

std::vector<std::vector<Relation>> side_relations(const CubeComplex& X) {
  std::vector<std::vector<Relation>> adj(X.count(1));
  for (int s = 0; s < X.count(2); ++s) {
    const auto& f = X.cell(2, s).faces;
    for (int a : {0, 2}) {
      int e1 = f[a].cell, e2 = f[a + 1].cell;
      int rel = sym_dir(f[a].sym) * sym_dir(f[a + 1].sym);
      adj[e1].push_back({e2, rel, s});
      adj[e2].push_back({e1, rel, s});
    }
  }
  return adj;
}

std::string vid(const CubeComplex& X, int v) { return X.id(0, v); }

}  // namespace

EdgeClasses edge_parallelism_classes(const CubeComplex& X) {
  Dsu u(X.count(1));
  for (const auto& s : X.cells(2)) {
    u.unite(s.faces[0].cell, s.faces[1].cell);
    u.unite(s.faces[2].cell, s.faces[3].cell);
  }
  EdgeClasses r;
  r.class_of.assign(X.count(1), -1);
  std::map<int, int> slot;
  for (int e = 0; e < X.count(1); ++e) {
    auto [it, fresh] = slot.emplace(u.find(e), static_cast<int>(r.members.size()));
    if (fresh) r.members.emplace_back();
    r.class_of[e] = it->second;
    r.members[it->second].push_back(e);
  }
  return r;
}

MidcubeComplex build_midcube_complex(const CubeComplex& X) {
  auto name = [&](int d, int c, int axis) { return d == 1 ? X.id(1, c) : X.id(d, c) + "#" + std::to_string(axis); };
  ComplexBuilder b;
  std::map<std::pair<int, std::string>, std::pair<int, int>> owner;
  std::map<std::pair<int, std::string>, std::vector<int>> signs;
  for (int d = 1; d <= X.dim(); ++d)
    for (int c = 0; c < X.count(d); ++c)
      for (int a = 0; a < d; ++a) {
        const Cell& C = X.cell(d, c);
        std::vector<std::pair<std::string, Sym>> faces;
        std::vector<int> sg;
        for (int bx = 0; bx < d; ++bx) {
          if (bx == a) continue;
          for (int s = 0; s < 2; ++s) {
            const FaceRef& fr = C.faces[2 * bx + s];
            int ia = a < bx ? a : a - 1;
            int af = fr.sym.perm[ia];
            Pos src;
            src.n = static_cast<std::uint8_t>(d - 1);
            src.v[af] = 1;
            faces.emplace_back(name(d - 1, fr.cell, af), restrict_to(fr.sym, src));
            sg.push_back(fr.sym.sign(ia));
          }
        }
        std::string id = name(d, c, a);
        owner[{d - 1, id}] = {c, a};
        signs[{d - 1, id}] = sg;
        b.cell(d - 1, id, std::move(faces));
      }
  MidcubeComplex M;
  M.complex = share(b.build());
  for (int d = 0; d < 3; ++d) {
    int n = M.complex->count(d);
    M.owner[d].resize(n);
    M.normal_sign[d].resize(n);
    for (int i = 0; i < n; ++i) {
      M.owner[d][i] = owner[{d, M.complex->id(d, i)}];
      M.normal_sign[d][i] = signs[{d, M.complex->id(d, i)}];
    }
  }
  auto comps = components(*M.complex);
  M.component.assign(M.complex->count(0), -1);
  M.components = static_cast<int>(comps.size());
  for (int k = 0; k < M.components; ++k)
    for (int v : comps[k]) M.component[v] = k;
  return M;
}

SideResult two_sidedness(const CubeComplex& X, const Hyperplane& H) {
  auto adj = side_relations(X);
  std::map<int, int> o, parent;
  SideResult r;
  int root = H.dual_edges.front();
  o[root] = 1;
  parent[root] = -1;
  std::deque<int> q{root};
  while (!q.empty() && r.two_sided) {
    int e = q.front();
    q.pop_front();
    for (const auto& rl : adj[e]) {
      int want = o[e] * rl.rel;
      auto it = o.find(rl.other);
      if (it == o.end()) {
        o[rl.other] = want;
        parent[rl.other] = e;
        q.push_back(rl.other);
      } else if (it->second != want) {
        r.two_sided = false;
        // tree paths from both ends up to their meeting point
        std::vector<int> up1;
        for (int x = e; x >= 0; x = parent[x]) up1.push_back(x);
        std::vector<int> up2;
        int m = rl.other;
        while (std::find(up1.begin(), up1.end(), m) == up1.end()) {
          up2.push_back(m);
          m = parent[m];
        }
        up1.resize(std::find(up1.begin(), up1.end(), m) - up1.begin() + 1);
        r.cycle = up1;
        r.cycle.insert(r.cycle.end(), up2.rbegin(), up2.rend());
        break;
      }
    }
  }
  if (r.two_sided)
    for (int e : H.dual_edges) r.orientation.push_back(o[e]);
  return r;
}

std::vector<Hyperplane> hyperplanes(const CubeComplex& X) {
  EdgeClasses ec = edge_parallelism_classes(X);
  MidcubeComplex M = build_midcube_complex(X);
  std::vector<Hyperplane> out;
  for (int k = 0; k < static_cast<int>(ec.members.size()); ++k) {
    Hyperplane H;
    H.id = k;
    H.dual_edges = ec.members[k];
    H.component = M.component[M.complex->find(0, X.id(1, H.dual_edges.front()))];
    SideResult s = two_sidedness(X, H);
    if (s.two_sided)
      H.orientation = s.orientation;
    else
      H.reversing_cycle = s.cycle;
    std::vector<CellRef> seeds;
    for (int e : H.dual_edges) seeds.push_back({1, e});
    for (int s2 = 0; s2 < X.count(2); ++s2) {
      const auto& f = X.cell(2, s2).faces;
      if (ec.class_of[f[0].cell] == k || ec.class_of[f[2].cell] == k) seeds.push_back({2, s2});
    }
    for (int c = 0; c < X.count(3); ++c) {
      const auto& e = X.cell(3, c).edges;
      if (ec.class_of[e[0]] == k || ec.class_of[e[4]] == k || ec.class_of[e[8]] == k) seeds.push_back({3, c});
    }
    H.carrier = closure(X, seeds);
    out.push_back(std::move(H));
  }
  return out;
}

Witness self_crossing(const CubeComplex& X, const Hyperplane& H) {
  std::set<int> dual(H.dual_edges.begin(), H.dual_edges.end());
  for (const auto& s : X.cells(2))
    if (dual.count(s.faces[0].cell) && dual.count(s.faces[2].cell)) return {true, {s.id}, "square"};
  return {};
}

Witness self_osculation(const CubeComplex& X, const Hyperplane& H) {
  if (!H.orientation) return {false, {}, "blocked-by-one-sidedness"};
  auto consecutive = consecutive_sides(X);
  const auto& D = H.dual_edges;
  const auto& o = *H.orientation;
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = i + 1; j < D.size(); ++j) {
      const auto& a = X.cell(1, D[i]).corners;
      const auto& b = X.cell(1, D[j]).corners;
      int ia = o[i] > 0 ? a[0] : a[1], ta = o[i] > 0 ? a[1] : a[0];
      int ib = o[j] > 0 ? b[0] : b[1], tb = o[j] > 0 ? b[1] : b[0];
      if (consecutive.count(unordered(D[i], D[j]))) continue;
      if (ia == ib) return {true, {X.id(1, D[i]), X.id(1, D[j]), vid(X, ia)}, "initial"};
      if (ta == tb) return {true, {X.id(1, D[i]), X.id(1, D[j]), vid(X, ta)}, "terminal"};
    }
  return {};
}

Witness inter_osculation(const CubeComplex& X, const Hyperplane& H1, const Hyperplane& H2) {
  std::set<int> d1(H1.dual_edges.begin(), H1.dual_edges.end()), d2(H2.dual_edges.begin(), H2.dual_edges.end());
  bool cross = false;
  for (const auto& s : X.cells(2)) {
    int x = s.faces[0].cell, y = s.faces[2].cell;
    if ((d1.count(x) && d2.count(y)) || (d2.count(x) && d1.count(y))) cross = true;
  }
  if (!cross) return {};
  auto consecutive = consecutive_sides(X);
  for (int a : H1.dual_edges)
    for (int b : H2.dual_edges) {
      if (consecutive.count(unordered(a, b))) continue;
      for (int u : X.cell(1, a).corners)
        for (int v : X.cell(1, b).corners)
          if (u == v) return {true, {X.id(1, a), X.id(1, b), vid(X, u)}, "shared 0-cube"};
    }
  return {};
}

SpecialnessReport is_special(const CubeComplex& X) {
  SpecialnessReport r;
  NpcResult npc = is_npc(X);
  if (!npc.ok) {
    r.npc = false;
    r.special = false;
    r.precondition = "not nonpositively curved: " + npc.kind + " at " + X.id(npc.center.dim, npc.center.index);
  }
  auto hs = hyperplanes(X);
  for (const auto& H : hs) {
    HyperplaneFlags f;
    f.id = H.id;
    for (int e : H.dual_edges) {
      f.dual_edges.push_back(X.id(1, e));
      if (X.cell(1, e).corners[0] == X.cell(1, e).corners[1]) f.loop_dual_edges.push_back(X.id(1, e));
    }
    if (!H.orientation) {
      f.one_sided = true;
      f.one_sided_witness.found = true;
      for (int e : H.reversing_cycle) f.one_sided_witness.cells.push_back(X.id(1, e));
      f.one_sided_witness.note = "reversing cycle of dual edges";
    }
    f.self_crossing_witness = self_crossing(X, H);
    f.self_crossing = f.self_crossing_witness.found;
    f.self_osculation_witness = self_osculation(X, H);
    f.self_osculating = f.self_osculation_witness.found;
    f.osculation_blocked = !H.orientation.has_value();
    if (f.one_sided || f.self_crossing || f.self_osculating) r.special = false;
    r.hyperplanes.push_back(std::move(f));
  }
  EdgeClasses ec = edge_parallelism_classes(X);
  std::set<std::pair<int, int>> crossing;
  for (const auto& s : X.cells(2)) {
    int a = ec.class_of[s.faces[0].cell], b = ec.class_of[s.faces[2].cell];
    if (a != b) crossing.insert({std::min(a, b), std::max(a, b)});
  }
  for (auto [a, b] : crossing) {
    Witness w = inter_osculation(X, hs[a], hs[b]);
    if (!w.found) continue;
    r.inter.push_back({a, b, w});
    r.special = false;
  }
  return r;
}

MidcubeVerdicts midcube_verdicts(const CubeComplex& X, const MidcubeComplex& M) {
  const CubeComplex& Z = *M.complex;
  int n = M.components;
  MidcubeVerdicts r;
  r.one_sided.assign(n, 0);
  r.self_crossing.assign(n, 0);
  r.self_osculating.assign(n, 0);
  auto comp_of = [&](int d, int i) { return M.component[Z.cell(d, i).corners.empty() ? i : Z.cell(d, i).corners[0]]; };

  // midcubes owned by each cube of X, as components
  std::map<CellRef, std::vector<int>> owned;
  for (int d = 1; d < 3; ++d)
    for (int i = 0; i < Z.count(d); ++i) owned[{d + 1, M.owner[d][i].first}].push_back(comp_of(d, i));
  std::set<std::pair<int, int>> crossing;
  for (const auto& [cube, comps] : owned)
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        if (comps[i] == comps[j])
          r.self_crossing[comps[i]] = 1;
        else
          crossing.insert({std::min(comps[i], comps[j]), std::max(comps[i], comps[j])});
      }

  // normal orientation of each midpoint relative to its edge
  std::vector<int> o(Z.count(0), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(Z.count(0));
  for (int i = 0; i < Z.count(1); ++i) {
    const auto& f = Z.cell(1, i).faces;
    int rel = M.normal_sign[1][i][0] * M.normal_sign[1][i][1];
    adj[f[0].cell].push_back({f[1].cell, rel});
    adj[f[1].cell].push_back({f[0].cell, rel});
  }
  for (int s = 0; s < Z.count(0); ++s) {
    if (o[s]) continue;
    o[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, rel] : adj[v]) {
        if (!o[w]) {
          o[w] = o[v] * rel;
          q.push_back(w);
        } else if (o[w] != o[v] * rel) {
          r.one_sided[M.component[v]] = 1;
        }
      }
    }
  }

  // consecutive pairs: a face of midcube (s, 0) with a face of midcube (s, 1)
  std::map<int, std::array<std::vector<int>, 2>> by_square;
  for (int i = 0; i < Z.count(1); ++i)
    for (const auto& f : Z.cell(1, i).faces) by_square[M.owner[1][i].first][M.owner[1][i].second].push_back(f.cell);
  std::set<EdgePair> consecutive;
  for (const auto& [s, m] : by_square)
    for (int a : m[0])
      for (int b : m[1]) consecutive.insert(unordered(a, b));

  // midpoint i is the midpoint of edge M.owner[0][i].first
  std::map<int, std::vector<int>> at_vertex;
  for (int i = 0; i < Z.count(0); ++i)
    for (int v : std::set<int>(X.cell(1, M.owner[0][i].first).corners.begin(), X.cell(1, M.owner[0][i].first).corners.end()))
      at_vertex[v].push_back(i);
  std::set<std::pair<int, int>> inter;
  for (const auto& [v, mids] : at_vertex)
    for (std::size_t x = 0; x < mids.size(); ++x)
      for (std::size_t y = x + 1; y < mids.size(); ++y) {
        int a = mids[x], b = mids[y];
        int ea = M.owner[0][a].first, eb = M.owner[0][b].first;
        if (consecutive.count(unordered(a, b))) continue;
        int ca = M.component[a], cb = M.component[b];
        if (ca == cb) {
          if (r.one_sided[ca]) continue;
          const auto& A = X.cell(1, ea).corners;
          const auto& B = X.cell(1, eb).corners;
          int ia = o[a] > 0 ? A[0] : A[1], ta = o[a] > 0 ? A[1] : A[0];
          int ib = o[b] > 0 ? B[0] : B[1], tb = o[b] > 0 ? B[1] : B[0];
          if ((ia == v && ib == v) || (ta == v && tb == v)) r.self_osculating[ca] = 1;
        } else {
          std::pair<int, int> key{std::min(ca, cb), std::max(ca, cb)};
          if (crossing.count(key)) inter.insert(key);
        }
      }
  r.inter.assign(inter.begin(), inter.end());
  return r;
}

Witness subcomplex_self_osculates(const CubeComplex& X, const Subcomplex& A) {
  EdgeClasses ec = edge_parallelism_classes(X);
  for (const auto& cls : ec.members) {
    int inside = -1;
    for (int e : cls)
      if (A.has(1, e)) {
        inside = e;
        break;
      }
    if (inside < 0) continue;
    for (int e : cls) {
      if (A.has(1, e)) continue;
      for (int v : X.cell(1, e).corners)
        if (A.has(0, v)) return {true, {X.id(1, inside), X.id(1, e), X.id(0, v)}, "dual edge outside A touches A"};
    }
  }
  return {};
}

}  // namespace cubical
