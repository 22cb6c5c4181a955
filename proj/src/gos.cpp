#include "cubical/gos.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cubical {

int UGraph::add_vertex(std::string id) {
  vertices.push_back(std::move(id));
  return static_cast<int>(vertices.size()) - 1;
}

int UGraph::add_edge(std::string id, int from, int to) {
  edges.push_back({std::move(id), from, to});
  return static_cast<int>(edges.size()) - 1;
}

int UGraph::find_vertex(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int UGraph::find_edge(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a && b && (a == b || *a == *b); }

}  // namespace

std::vector<std::string> check_gos(const GraphOfSpaces& G, bool connected_edge_spaces) {
  std::vector<std::string> out;
  const UGraph& g = G.graph;
  int nv = static_cast<int>(g.vertices.size());
  if (G.vertex_spaces.size() != g.vertices.size()) out.push_back("vertex-space count differs from vertex count");
  if (G.edge_spaces.size() != g.edges.size()) out.push_back("edge-space count differs from edge count");
  if (!out.empty()) return out;
  for (int v = 0; v < nv; ++v) {
    if (!G.vertex_spaces[v]) {
      out.push_back("vertex " + g.vertices[v] + ": missing vertex-space");
      continue;
    }
    auto rep = validate(*G.vertex_spaces[v]);
    if (!rep.ok()) out.push_back("vertex " + g.vertices[v] + ": invalid vertex-space: " + rep.str());
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    const EdgeSpace& es = G.edge_spaces[e];
    std::string name = "edge " + ed.id + ": ";
    if (ed.from < 0 || ed.from >= nv || ed.to < 0 || ed.to >= nv) {
      out.push_back(name + "endpoint out of range");
      continue;
    }
    if (!es.space) {
      out.push_back(name + "missing edge-space");
      continue;
    }
    auto rep = validate(*es.space);
    if (!rep.ok()) out.push_back(name + "invalid edge-space: " + rep.str());
    if (es.space->dim() > 2) out.push_back(name + "edge-space dimension exceeds 2");
    if (connected_edge_spaces && !is_connected(*es.space, Subcomplex::all(*es.space)))
      out.push_back(name + "edge-space is not connected");
    int ends[2] = {ed.from, ed.to};
    const CubicalMap* taus[2] = {&es.tau1, &es.tau2};
    for (int s = 0; s < 2; ++s) {
      std::string tn = name + "tau" + std::to_string(s + 1) + ": ";
      const CubicalMap& t = *taus[s];
      if (!same_complex(t.domain(), es.space)) {
        out.push_back(tn + "domain is not the edge-space");
        continue;
      }
      if (!same_complex(t.codomain(), G.vertex_spaces[ends[s]])) {
        out.push_back(tn + "codomain is not the vertex-space");
        continue;
      }
      auto issues = check_map(t);
      for (const auto& is : issues) out.push_back(tn + is.cell + ": " + is.message);
      if (issues.empty() && !is_injective(t)) out.push_back(tn + "not injective");
    }
  }
  return out;
}

TotalSpace assemble(const GraphOfSpaces& G, bool connected_edge_spaces) {
  auto problems = check_gos(G, connected_edge_spaces);
  if (!problems.empty()) {
    std::string msg = "assemble: invalid graph of spaces";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::invalid_argument(msg);
  }
  const UGraph& g = G.graph;
  auto vname = [&](int v, int d, int i) { return g.vertices[v] + "/" + G.vertex_spaces[v]->id(d, i); };
  auto ename = [&](int e, int d, int i) { return g.edges[e].id + "/" + G.edge_spaces[e].space->id(d, i) + "/I"; };
  ComplexBuilder b;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const CubeComplex& X = *G.vertex_spaces[v];
    for (int d = 0; d <= kMaxDim; ++d)
      for (int i = 0; i < X.count(d); ++i) {
        std::vector<std::pair<std::string, Sym>> faces;
        for (const auto& f : X.cell(d, i).faces) faces.emplace_back(vname(v, d - 1, f.cell), f.sym);
        b.cell(d, vname(v, d, i), std::move(faces));
      }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const EdgeSpace& es = G.edge_spaces[e];
    const CubeComplex& X = *es.space;
    for (int d = 0; d <= X.dim(); ++d)
      for (int i = 0; i < X.count(d); ++i) {
        std::vector<std::pair<std::string, Sym>> faces;
        for (const auto& f : X.cell(d, i).faces) faces.emplace_back(ename(e, d - 1, f.cell), extend(f.sym));
        const Image& a = es.tau1.at(d, i);
        const Image& c = es.tau2.at(d, i);
        faces.emplace_back(vname(g.edges[e].from, d, a.cell), a.sym.inverse());
        faces.emplace_back(vname(g.edges[e].to, d, c.cell), c.sym.inverse());
        b.cell(d + 1, ename(e, d, i), std::move(faces));
      }
  }
  TotalSpace T;
  T.gos = G;
  T.complex = share(b.build());
  const CubeComplex& X = *T.complex;
  auto rep = validate(X);
  if (!rep.ok()) throw std::logic_error("assemble produced an invalid complex: " + rep.str());
  for (int d = 0; d <= kMaxDim; ++d) T.provenance[d].resize(X.count(d));
  T.vertical_cell.resize(g.vertices.size());
  T.thick_cell.resize(g.edges.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int d = 0; d <= kMaxDim; ++d)
      for (int i = 0; i < G.vertex_spaces[v]->count(d); ++i) {
        int t = X.find(d, vname(v, d, i));
        T.vertical_cell[v][d].push_back(t);
        T.provenance[d][t] = {true, static_cast<int>(v), {d, i}};
      }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const CubeComplex& S = *G.edge_spaces[e].space;
    for (int d = 0; d < kMaxDim; ++d)
      for (int i = 0; i < S.count(d); ++i) {
        int t = X.find(d + 1, ename(e, d, i));
        T.thick_cell[e][d].push_back(t);
        T.provenance[d + 1][t] = {false, static_cast<int>(e), {d, i}};
      }
  }
  return T;
}

GraphOfSpaces realization(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O) {
  GraphOfSpaces G;
  G.graph.add_vertex("v");
  G.vertex_spaces.push_back(Y);
  for (std::size_t j = 0; j < O.size(); ++j) {
    std::string name = "g" + std::to_string(j + 1);
    const auto& phi = O[j];
    if (!same_complex(phi.ambient, Y)) throw std::invalid_argument(name + ": ambient complex is not Y");
    auto issues = validate_partial_local_isometry(phi);
    if (!issues.empty()) throw std::invalid_argument(name + ": " + issues.front());
    const ComplexPtr& D = phi.map.domain();
    EdgeSpace es{D, CubicalMap(D, Y), CubicalMap(D, Y)};
    for (int d = 0; d <= kMaxDim; ++d)
      for (int i = 0; i < D->count(d); ++i) {
        es.tau1.set(d, i, Y->find(d, D->id(d, i)), Sym::identity(d));
        es.tau2.at(d, i) = phi.map.at(d, i);
      }
    G.graph.add_edge(name, 0, 0);
    G.edge_spaces.push_back(std::move(es));
  }
  return G;
}

namespace {

// Union-find over vertical cells; rel maps a cell's coordinates to those of
// its parent. Roots are the least member of their class.
struct EUnion {
  std::array<std::vector<int>, 4> parent;
  std::array<std::vector<Sym>, 4> rel;
  std::vector<std::pair<CellRef, CellRef>> conflicts;

  std::pair<int, Sym> find(int d, int i) {
    int p = parent[d][i];
    if (p == i) return {i, Sym::identity(d)};
    auto [r, s] = find(d, p);
    rel[d][i] = compose(s, rel[d][i]);
    parent[d][i] = r;
    return {r, rel[d][i]};
  }

  // s maps coordinates of a to coordinates of b
  void unite(int d, int a, int b, const Sym& s) {
    auto [ra, sa] = find(d, a);
    auto [rb, sb] = find(d, b);
    Sym r = compose(sb, compose(s, sa.inverse()));  // ra -> rb
    if (ra == rb) {
      if (!r.is_identity()) conflicts.push_back({{d, a}, {d, b}});
      return;
    }
    if (ra < rb) {
      parent[d][rb] = ra;
      rel[d][rb] = r.inverse();
    } else {
      parent[d][ra] = rb;
      rel[d][ra] = r;
    }
  }
};

EUnion e_union(const TotalSpace& T) {
  const CubeComplex& X = *T.complex;
  EUnion U;
  for (int d = 0; d <= kMaxDim; ++d) {
    U.parent[d].resize(X.count(d));
    for (int i = 0; i < X.count(d); ++i) U.parent[d][i] = i;
    U.rel[d].assign(X.count(d), Sym::identity(d));
  }
  const auto& g = T.gos.graph;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const EdgeSpace& es = T.gos.edge_spaces[e];
    for (int d = 0; d < kMaxDim; ++d)
      for (int i = 0; i < es.space->count(d); ++i) {
        const Image& a = es.tau1.at(d, i);
        const Image& b = es.tau2.at(d, i);
        int ta = T.vertical_cell[g.edges[e].from][d][a.cell];
        int tb = T.vertical_cell[g.edges[e].to][d][b.cell];
        U.unite(d, ta, tb, compose(b.sym, a.sym.inverse()));
      }
  }
  return U;
}

// First pair of distinct cells of one vertex-space in one class, in root order.
std::optional<std::pair<int, int>> collision(const TotalSpace& T, EUnion& U, int d) {
  std::map<std::pair<int, int>, int> seen;  // (root, vertex-space) -> member
  for (int i = 0; i < T.complex->count(d); ++i) {
    const Provenance& p = T.provenance[d][i];
    if (!p.vertical) continue;
    int r = U.find(d, i).first;
    auto [it, fresh] = seen.emplace(std::make_pair(r, p.node), i);
    if (!fresh) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

}  // namespace

HorizontalQuotient horizontal_quotient(const TotalSpace& T) {
  const CubeComplex& X = *T.complex;
  HorizontalQuotient Q;
  EUnion U = e_union(T);
  auto refuse = [&](std::string reason, CellRef a, CellRef b) {
    Q.strict = false;
    Q.reason = std::move(reason);
    Q.witness = {X.id(a.dim, a.index), X.id(b.dim, b.index)};
    return Q;
  };
  if (auto c = collision(T, U, 0))
    return refuse("two 0-cubes of one vertex-space are E-parallel", {0, c->first}, {0, c->second});
  if (!U.conflicts.empty())
    return refuse("a cell is identified with itself by a nontrivial symmetry", U.conflicts[0].first,
                  U.conflicts[0].second);
  for (int d = 1; d <= kMaxDim; ++d)
    if (auto c = collision(T, U, d))
      return refuse("two " + std::to_string(d) + "-cubes of one vertex-space are E-parallel", {d, c->first},
                    {d, c->second});

  ComplexBuilder b;
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      if (!T.provenance[d][i].vertical || U.find(d, i).first != i) continue;
      std::vector<std::pair<std::string, Sym>> faces;
      for (const auto& f : X.cell(d, i).faces) {
        auto [r, s] = U.find(d - 1, f.cell);
        faces.emplace_back(X.id(d - 1, r), compose(f.sym, s.inverse()));
      }
      b.cell(d, X.id(d, i), std::move(faces));
    }
  Q.complex = share(b.build());
  const CubeComplex& R = *Q.complex;
  auto rep = validate(R);
  if (!rep.ok()) {
    Q.complex.reset();
    Q.reason = "quotient is not a cube complex: " + rep.str();
    return Q;
  }
  Q.strict = true;
  for (int d = 0; d <= kMaxDim; ++d) Q.q[d].resize(X.count(d));
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const Provenance& p = T.provenance[d][i];
      if (p.vertical) {
        auto [r, s] = U.find(d, i);
        Q.q[d][i] = {{d, R.find(d, X.id(d, r))}, s};
      } else {
        int sd = d - 1;
        const auto& ed = T.gos.graph.edges[p.node];
        const Image& a = T.gos.edge_spaces[p.node].tau1.at(sd, p.source.index);
        auto [r, s] = U.find(sd, T.vertical_cell[ed.from][sd][a.cell]);
        Q.q[d][i] = {{sd, R.find(sd, X.id(sd, r))}, compose(s, a.sym)};
      }
    }
  for (std::size_t v = 0; v < T.gos.vertex_spaces.size(); ++v) {
    const ComplexPtr& V = T.gos.vertex_spaces[v];
    CubicalMap m(V, Q.complex);
    for (int d = 0; d <= kMaxDim; ++d)
      for (int i = 0; i < V->count(d); ++i) {
        const QuotientImage& qi = Q.q[d][T.vertical_cell[v][d][i]];
        m.set(d, i, qi.cell.index, qi.sym);
      }
    Q.vertex_maps.push_back(std::move(m));
  }
  return Q;
}

StrictVerdict is_strict(const TotalSpace& T) {
  EUnion U = e_union(T);
  StrictVerdict v;
  if (auto c = collision(T, U, 0)) {
    v.ok = false;
    v.witness = {T.complex->id(0, c->first), T.complex->id(0, c->second)};
  }
  return v;
}

std::vector<int> e_class(const TotalSpace& T, CellRef cell) {
  if (cell.dim < 0 || cell.dim > kMaxDim || cell.index < 0 || cell.index >= T.complex->count(cell.dim))
    throw std::out_of_range("e_class: no such cell");
  if (!T.provenance[cell.dim][cell.index].vertical) throw std::invalid_argument("e_class: cell is not vertical");
  EUnion U = e_union(T);
  int r = U.find(cell.dim, cell.index).first;
  std::vector<int> out;
  for (int i = 0; i < T.complex->count(cell.dim); ++i)
    if (T.provenance[cell.dim][i].vertical && U.find(cell.dim, i).first == r) out.push_back(i);
  return out;
}

HorizontalGraph horizontal_graph(const TotalSpace& T, int vertex) {
  HorizontalGraph H;
  H.vertices = e_class(T, {0, vertex});
  std::set<int> in(H.vertices.begin(), H.vertices.end());
  const CubeComplex& X = *T.complex;
  for (int t = 0; t < X.count(1); ++t) {
    const Provenance& p = T.provenance[1][t];
    if (p.vertical) continue;
    const Cell& c = X.cell(1, t);
    if (!in.count(c.corners[0])) continue;
    H.edges.push_back({t, c.corners[1], c.corners[0], p.node});
  }
  return H;
}

ComplexPtr link_complex(const SimplexComplex& L) {
  if (!L.triangles.empty()) throw std::invalid_argument("link_complex: link has 2-simplices");
  ComplexBuilder b;
  for (const auto& v : L.vertices) b.vertex(v);
  for (std::size_t e = 0; e < L.edges.size(); ++e)
    b.edge(L.edge_labels[e], L.vertices[L.edges[e][0]], L.vertices[L.edges[e][1]]);
  return share(b.build());
}

namespace {

using OccKey = std::pair<int, int>;  // (cell, position code)

struct LinkSpace {
  Link link;
  ComplexPtr complex;
  std::map<OccKey, int> vertex_at, edge_at;  // occurrence -> cell index of `complex`
};

LinkSpace link_space(const CubeComplex& X, int vertex) {
  LinkSpace s;
  s.link = link(X, {0, vertex});
  s.complex = link_complex(s.link);
  for (std::size_t j = 0; j < s.link.vertices.size(); ++j)
    s.vertex_at[{s.link.vertex_src[j].cell, s.link.vertex_src[j].pos.code()}] = s.complex->find(0, s.link.vertices[j]);
  for (std::size_t j = 0; j < s.link.edges.size(); ++j)
    s.edge_at[{s.link.edge_src[j].cell, s.link.edge_src[j].pos.code()}] = s.complex->find(1, s.link.edge_labels[j]);
  return s;
}

// The map of links induced by tau at a 0-cube of its domain.
CubicalMap link_map(const CubicalMap& tau, const LinkSpace& from, const LinkSpace& to) {
  CubicalMap m(from.complex, to.complex);
  std::vector<int> vimg(from.complex->count(0));
  for (std::size_t j = 0; j < from.link.vertices.size(); ++j) {
    const Coface& c = from.link.vertex_src[j];
    const Image& im = tau.at(c.dim, c.cell);
    int src = from.complex->find(0, from.link.vertices[j]);
    vimg[src] = to.vertex_at.at({im.cell, im.sym.apply(c.pos).code()});
    m.set(0, src, vimg[src], Sym::identity(0));
  }
  for (std::size_t j = 0; j < from.link.edges.size(); ++j) {
    const Coface& c = from.link.edge_src[j];
    const Image& im = tau.at(c.dim, c.cell);
    int src = from.complex->find(1, from.link.edge_labels[j]);
    int dst = to.edge_at.at({im.cell, im.sym.apply(c.pos).code()});
    const Cell& se = from.complex->cell(1, src);
    const Cell& de = to.complex->cell(1, dst);
    bool keep = vimg[se.corners[0]] == de.corners[0] && vimg[se.corners[1]] == de.corners[1];
    m.set(1, src, dst, dir_sym(keep ? 1 : -1));
  }
  return m;
}

}  // namespace

GraphOfLinks induced_graph_of_links(const TotalSpace& T, const HorizontalQuotient& Q, int x) {
  if (!Q.strict) throw std::invalid_argument("induced_graph_of_links: quotient is not strict");
  for (const auto& V : T.gos.vertex_spaces)
    if (V->dim() > 2) throw std::invalid_argument("induced_graph_of_links: vertex-space dimension exceeds 2");
  const CubeComplex& X = *T.complex;
  int member = -1;
  for (int t = 0; t < X.count(0) && member < 0; ++t)
    if (Q.q[0][t].cell.index == x) member = t;
  if (member < 0) throw std::out_of_range("induced_graph_of_links: no such quotient 0-cube");
  HorizontalGraph H = horizontal_graph(T, member);

  GraphOfLinks out;
  GraphOfSpaces& L = out.gos;
  std::map<int, int> node_of;  // total 0-cube -> link graph vertex
  std::vector<LinkSpace> vspace;
  for (int t : H.vertices) {
    const Provenance& p = T.provenance[0][t];
    node_of[t] = L.graph.add_vertex(X.id(0, t));
    vspace.push_back(link_space(*T.gos.vertex_spaces[p.node], p.source.index));
    L.vertex_spaces.push_back(vspace.back().complex);
  }
  for (const auto& he : H.edges) {
    const Provenance& p = T.provenance[1][he.cell];
    const EdgeSpace& es = T.gos.edge_spaces[p.node];
    LinkSpace ls = link_space(*es.space, p.source.index);
    int v1 = node_of.at(he.to), v2 = node_of.at(he.from);  // tau1 end, tau2 end
    L.graph.add_edge(X.id(1, he.cell), v1, v2);
    L.edge_spaces.push_back({ls.complex, link_map(es.tau1, ls, vspace[v1]), link_map(es.tau2, ls, vspace[v2])});
  }

  // Compare the quotient of the graph of links with the link of x.
  TotalSpace LT = assemble(L, false);
  HorizontalQuotient LQ = horizontal_quotient(LT);
  if (!LQ.strict) {
    out.mismatch = "graph of links has a non-strict quotient: " + LQ.reason;
    return out;
  }
  const CubeComplex& R = *Q.complex;
  LinkSpace lx = link_space(R, x);
  // quotient cell of the graph of links -> cell of link(x)
  auto image = [&](int d, int i) {
    int t = LT.complex->find(d, LQ.complex->id(d, i));
    const Provenance& p = LT.provenance[d][t];
    const LinkSpace& ls = vspace[p.node];
    const std::string& label = ls.complex->id(d, p.source.index);
    const Coface* c = nullptr;
    if (d == 0) {
      for (std::size_t j = 0; j < ls.link.vertices.size(); ++j)
        if (ls.link.vertices[j] == label) c = &ls.link.vertex_src[j];
    } else {
      for (std::size_t j = 0; j < ls.link.edges.size(); ++j)
        if (ls.link.edge_labels[j] == label) c = &ls.link.edge_src[j];
    }
    const Provenance& tp = T.provenance[0][H.vertices[p.node]];
    int tc = T.vertical_cell[tp.node][c->dim][c->cell];
    const QuotientImage& qi = Q.q[c->dim][tc];
    OccKey key{qi.cell.index, qi.sym.apply(c->pos).code()};
    const auto& table = d == 0 ? lx.vertex_at : lx.edge_at;
    auto it = table.find(key);
    return it == table.end() ? -1 : it->second;
  };
  const CubeComplex& LR = *LQ.complex;
  for (int d = 0; d <= 1; ++d) {
    if (LR.count(d) != lx.complex->count(d)) {
      out.mismatch = std::to_string(d) + "-cube counts differ";
      return out;
    }
    std::vector<int> img(LR.count(d));
    std::set<int> hit;
    for (int i = 0; i < LR.count(d); ++i) {
      img[i] = image(d, i);
      if (img[i] < 0 || !hit.insert(img[i]).second) {
        out.mismatch = "cell " + LR.id(d, i) + " does not map bijectively";
        return out;
      }
      if (d == 1) {
        std::multiset<int> ends, want;
        for (int c : LR.cell(1, i).corners) ends.insert(image(0, c));
        for (int c : lx.complex->cell(1, img[i]).corners) want.insert(c);
        if (ends != want) {
          out.mismatch = "edge " + LR.id(1, i) + " has the wrong endpoints";
          return out;
        }
      }
    }
  }
  out.matches_quotient_link = true;
  return out;
}

namespace {

std::set<std::pair<int, int>> crossing_classes(const CubeComplex& X, const EdgeClasses& ec) {
  std::set<std::pair<int, int>> out;
  for (const auto& s : X.cells(2)) {
    int a = ec.class_of[s.faces[0].cell], b = ec.class_of[s.faces[2].cell];
    if (a != b) out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

ControlVerdict is_controlled(const GraphOfSpaces& G) {
  ControlVerdict r;
  auto fail = [&](ControlIssue is) {
    r.ok = false;
    if (is.kind == "precondition") r.precondition_ok = false;
    r.issues.push_back(std::move(is));
  };
  auto problems = check_gos(G);
  for (const auto& p : problems) fail({"", 0, "precondition", {p}});
  if (!problems.empty()) return r;
  const UGraph& g = G.graph;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (auto n = is_npc(*G.vertex_spaces[v]); !n.ok)
      fail({"", 0, "precondition", {"vertex-space " + g.vertices[v] + " is not nonpositively curved"}});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const EdgeSpace& es = G.edge_spaces[e];
    const CubeComplex& S = *es.space;
    if (auto n = is_npc(S); !n.ok) {
      fail({g.edges[e].id, 0, "precondition", {"edge-space is not nonpositively curved"}});
      continue;
    }
    EdgeClasses ecs = edge_parallelism_classes(S);
    auto cross_s = crossing_classes(S, ecs);
    const CubicalMap* taus[2] = {&es.tau1, &es.tau2};
    for (int side = 0; side < 2; ++side) {
      const CubicalMap& tau = *taus[side];
      const CubeComplex& V = *tau.codomain();
      std::string en = g.edges[e].id;
      if (auto li = is_local_isometry(tau); !li.ok) {
        fail({en, side + 1, "precondition", {"attaching map is not a local isometry at " + li.center}});
        continue;
      }
      EdgeClasses ecv = edge_parallelism_classes(V);
      auto cross_v = crossing_classes(V, ecv);
      int nc = static_cast<int>(ecs.members.size());
      std::vector<int> img(nc);
      for (int c = 0; c < nc; ++c) img[c] = ecv.class_of[tau.at(1, ecs.members[c][0]).cell];
      for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
          std::vector<std::string> cells{S.id(1, ecs.members[a][0]), S.id(1, ecs.members[b][0])};
          if (img[a] == img[b]) {
            fail({en, side + 1, "wall-injectivity", cells});
          } else if (!cross_s.count({a, b}) && cross_v.count({std::min(img[a], img[b]), std::max(img[a], img[b])})) {
            fail({en, side + 1, "cross-injectivity", cells});
          }
        }
      Witness w = subcomplex_self_osculates(V, image_of(tau));
      if (w.found) fail({en, side + 1, "self-osculation", w.cells});
    }
  }
  return r;
}

std::vector<RemoteOsculation> detect_remote_osculation(const TotalSpace& T, const HorizontalQuotient& Q) {
  if (!Q.strict) throw std::invalid_argument("detect_remote_osculation: quotient is not strict");
  const CubeComplex& X = *T.complex;
  const CubeComplex& R = *Q.complex;
  std::set<std::pair<int, int>> consecutive;
  for (const auto& s : R.cells(2))
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b) {
        int x = s.faces[a].cell, y = s.faces[b].cell;
        consecutive.insert({std::min(x, y), std::max(x, y)});
      }
  auto qv = [&](int t) { return Q.q[0][t].cell.index; };
  auto qe = [&](int a) { return Q.q[1][a].cell.index; };
  auto graph_of = [&](int t) { return X.find(0, R.id(0, qv(t))); };
  auto remote = [&](int a, int b, int ta, int tb) {
    if (ta == tb || qv(ta) != qv(tb)) return false;
    int x = qe(a), y = qe(b);
    return x != y && !consecutive.count({std::min(x, y), std::max(x, y)});
  };

  auto hs = hyperplanes(X);
  std::set<std::tuple<int, int, int, int, int, int>> seen;
  std::vector<RemoteOsculation> out;
  auto add = [&](RemoteOsculation w) {
    if (seen.insert({w.kind == "self" ? 0 : 1, w.h1, w.a, w.b, w.ta, w.tb}).second) out.push_back(w);
  };
  // vertical dual edges with their ends ordered by the hyperplane orientation
  std::vector<std::vector<std::array<int, 3>>> vert(hs.size());
  for (const auto& H : hs)
    for (std::size_t k = 0; k < H.dual_edges.size(); ++k) {
      int a = H.dual_edges[k];
      if (!T.provenance[1][a].vertical) continue;
      const auto& c = X.cell(1, a).corners;
      bool flip = H.orientation && (*H.orientation)[k] < 0;
      vert[H.id].push_back({a, flip ? c[1] : c[0], flip ? c[0] : c[1]});
    }
  for (const auto& H : hs) {
    const auto& D = vert[H.id];
    for (std::size_t i = 0; i < D.size(); ++i)
      for (std::size_t j = i + 1; j < D.size(); ++j)
        for (int end = 1; end <= 2; ++end)
          if (remote(D[i][0], D[j][0], D[i][end], D[j][end]))
            add({"self", H.id, H.id, D[i][0], D[j][0], D[i][end], D[j][end], graph_of(D[i][end])});
  }
  EdgeClasses ec = edge_parallelism_classes(X);
  for (auto [h1, h2] : crossing_classes(X, ec))
    for (const auto& A : vert[h1])
      for (const auto& B : vert[h2])
        for (int ea = 1; ea <= 2; ++ea)
          for (int eb = 1; eb <= 2; ++eb)
            if (remote(A[0], B[0], A[ea], B[eb]))
              add({"inter", h1, h2, A[0], B[0], A[ea], B[eb], graph_of(A[ea])});
  std::sort(out.begin(), out.end(), [](const RemoteOsculation& x, const RemoteOsculation& y) {
    return std::tie(x.kind, x.h1, x.h2, x.a, x.b, x.ta, x.tb) < std::tie(y.kind, y.h1, y.h2, y.a, y.b, y.ta, y.tb);
  });
  return out;
}

std::vector<KCorner> detect_empty_k_corners(const CubeComplex& X) {
  Incidence inc(X);
  std::vector<KCorner> out;
  std::set<std::vector<CellRef>> seen;
  for (int d = 0; d <= 1 && d <= X.dim(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      Link L = link(X, inc, {d, i});
      auto emit = [&](int k, const std::vector<int>& verts, const std::vector<int>& edges) {
        KCorner w{k, {d, i}, {{d, i}}};
        for (int v : verts) w.cells.push_back({L.vertex_src[v].dim, L.vertex_src[v].cell});
        for (int e : edges) w.cells.push_back({L.edge_src[e].dim, L.edge_src[e].cell});
        std::sort(w.cells.begin(), w.cells.end());
        w.cells.erase(std::unique(w.cells.begin(), w.cells.end()), w.cells.end());
        if (seen.insert(w.cells).second) out.push_back(std::move(w));
      };
      int ne = static_cast<int>(L.edges.size());
      std::map<std::pair<int, int>, std::vector<int>> between;
      for (int e = 0; e < ne; ++e) {
        auto [a, b] = L.edges[e];
        if (a == b) {
          emit(1, {a}, {e});
          continue;
        }
        between[{std::min(a, b), std::max(a, b)}].push_back(e);
      }
      for (const auto& [ab, es] : between)
        for (std::size_t x = 0; x < es.size(); ++x)
          for (std::size_t y = x + 1; y < es.size(); ++y) emit(2, {ab.first, ab.second}, {es[x], es[y]});
      std::set<std::array<int, 3>> filled;
      for (const auto& t : L.triangles) {
        std::array<int, 3> s = t;
        std::sort(s.begin(), s.end());
        filled.insert(s);
      }
      for (const auto& [ab, e1s] : between) {
        auto [a, b] = ab;
        for (int c = b + 1; c < static_cast<int>(L.vertices.size()); ++c) {
          auto ac = between.find({a, c}), bc = between.find({b, c});
          if (ac == between.end() || bc == between.end()) continue;
          for (int e1 : e1s)
            for (int e2 : ac->second)
              for (int e3 : bc->second) {
                std::array<int, 3> s{e1, e2, e3};
                std::sort(s.begin(), s.end());
                // a cycle around a 1-cube would need a 4-cube to fill it
                if (d == 0 && filled.count(s)) continue;
                emit(3, {a, b, c}, {e1, e2, e3});
              }
        }
      }
    }
  return out;
}

}  // namespace cubical
