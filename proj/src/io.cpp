#include "cubical/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cubical::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& array_field(const json& j, const char* key, std::size_t size = 0) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  if (size && a.size() != size)
    throw InputError(std::string("field '") + key + "' must have " + std::to_string(size) + " entries");
  return a;
}

json witness_json(const Witness& w) { return {{"found", w.found}, {"cells", w.cells}, {"note", w.note}}; }

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2); }

void expect_schema(const json& j, const std::string& schema) {
  if (!j.is_object()) throw InputError("expected a JSON object for " + schema);
  if (j.contains("schema") && j.at("schema") != schema)
    throw InputError("expected schema " + schema + ", got " + j.at("schema").dump());
}

json to_json(const CubeComplex& X) {
  json j;
  j["schema"] = "cubecomplex.v1";
  j["dim"] = X.dim();
  json vs = json::array();
  for (const auto& c : X.cells(0)) vs.push_back(c.id);
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& c : X.cells(1)) es.push_back({{"id", c.id}, {"ends", {X.id(0, c.corners[0]), X.id(0, c.corners[1])}}});
  j["edges"] = es;
  json sq = json::array();
  for (const auto& c : X.cells(2)) {
    json corners = json::array(), sides = json::array();
    for (int k : c.corners) corners.push_back(X.id(0, k));
    for (int k : {2, 3, 0, 1}) sides.push_back({{"edge", X.id(1, c.faces[k].cell)}, {"dir", sym_dir(c.faces[k].sym)}});
    sq.push_back({{"id", c.id}, {"corners", corners}, {"sides", sides}});
  }
  j["squares"] = sq;
  json cu = json::array();
  for (const auto& c : X.cells(3)) {
    json corners = json::array(), edges = json::array(), faces = json::array();
    for (int k : c.corners) corners.push_back(X.id(0, k));
    for (int k : c.edges) edges.push_back(X.id(1, k));
    for (const auto& f : c.faces) faces.push_back({{"square", X.id(2, f.cell)}, {"sym", f.sym.index()}});
    cu.push_back({{"id", c.id}, {"corners", corners}, {"edges", edges}, {"faces", faces}});
  }
  j["cubes3"] = cu;
  return j;
}

CubeComplex complex_from_json(const json& j) {
  expect_schema(j, "cubecomplex.v1");
  ComplexBuilder b;
  for (const auto& v : array_field(j, "vertices")) b.vertex(as<std::string>(v, "vertex id"));
  if (j.contains("edges"))
    for (const auto& e : array_field(j, "edges")) {
      const auto& ends = array_field(e, "ends", 2);
      b.edge(get<std::string>(e, "id"), as<std::string>(ends[0], "edge end"), as<std::string>(ends[1], "edge end"));
    }
  if (j.contains("squares"))
    for (const auto& s : array_field(j, "squares")) {
      std::array<SideSpec, 4> sides;
      const auto& sj = array_field(s, "sides", 4);
      for (int k = 0; k < 4; ++k) sides[k] = {get<std::string>(sj[k], "edge"), get<int>(sj[k], "dir")};
      if (s.contains("corners")) {
        const auto& cj = array_field(s, "corners", 4);
        std::array<std::string, 4> corners;
        for (int k = 0; k < 4; ++k) corners[k] = as<std::string>(cj[k], "square corner");
        b.square(get<std::string>(s, "id"), corners, sides);
      } else {
        b.square(get<std::string>(s, "id"), sides);
      }
    }
  if (j.contains("cubes3"))
    for (const auto& c : array_field(j, "cubes3")) {
      std::array<FaceSpec, 6> faces;
      const auto& fj = array_field(c, "faces", 6);
      for (int k = 0; k < 6; ++k) faces[k] = {get<std::string>(fj[k], "square"), get<int>(fj[k], "sym")};
      if (c.contains("corners") && c.contains("edges")) {
        const auto& cj = array_field(c, "corners", 8);
        const auto& ej = array_field(c, "edges", 12);
        std::array<std::string, 8> corners;
        std::array<std::string, 12> edges;
        for (int k = 0; k < 8; ++k) corners[k] = as<std::string>(cj[k], "cube corner");
        for (int k = 0; k < 12; ++k) edges[k] = as<std::string>(ej[k], "cube edge");
        b.cube(get<std::string>(c, "id"), corners, edges, faces);
      } else {
        b.cube(get<std::string>(c, "id"), faces);
      }
    }
  CubeComplex X = b.build();
  if (j.contains("dim") && get<int>(j, "dim") != X.dim())
    throw InputError("field 'dim' is " + j.at("dim").dump() + " but the cells have dimension " +
                     std::to_string(X.dim()));
  return X;
}

std::string cell_key(const CubeComplex& X, CellRef c) { return std::to_string(c.dim) + ":" + X.id(c.dim, c.index); }

CellRef parse_cell_key(const CubeComplex& X, const std::string& key) {
  auto c = find_any(X, key);
  if (!c) throw InputError("unknown or ambiguous cell '" + key + "'");
  return *c;
}

json to_json(const CubicalMap& f, const std::string& domain_name, const std::string& codomain_name) {
  json cells = json::object();
  const auto& D = *f.domain();
  const auto& C = *f.codomain();
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < D.count(d); ++i) {
      const auto& im = f.at(d, i);
      cells[cell_key(D, {d, i})] = {{"image", C.id(d, im.cell)}, {"sym", im.sym.index()}};
    }
  return {{"schema", "cubicalmap.v1"}, {"domain", domain_name}, {"codomain", codomain_name}, {"cells", cells}};
}

CubicalMap map_from_json(const json& j, const ComplexPtr& domain, const ComplexPtr& codomain) {
  expect_schema(j, "cubicalmap.v1");
  const json& cells = field(j, "cells");
  if (!cells.is_object()) throw InputError("field 'cells' must be an object");
  CubicalMap f(domain, codomain);
  std::array<std::vector<char>, 4> seen;
  for (int d = 0; d <= kMaxDim; ++d) seen[d].assign(domain->count(d), 0);
  for (const auto& [key, v] : cells.items()) {
    CellRef c = parse_cell_key(*domain, key);
    std::string image = get<std::string>(v, "image");
    int t = codomain->find(c.dim, image);
    if (t < 0) throw InputError("image '" + image + "' of " + key + " is not a " + std::to_string(c.dim) + "-cube");
    int s = v.contains("sym") ? get<int>(v, "sym") : 0;
    if (s < 0 || s >= Sym::order(c.dim)) throw InputError("symmetry index of " + key + " out of range");
    f.set(c.dim, c.index, t, Sym::from_index(c.dim, s));
    seen[c.dim][c.index] = 1;
  }
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < domain->count(d); ++i)
      if (!seen[d][i]) throw InputError("map has no image for " + cell_key(*domain, {d, i}));
  return f;
}

json to_json(const PartialLocalIsometry& phi) {
  json dom = json::array();
  for (const auto& c : phi.domain.cells()) dom.push_back(cell_key(*phi.ambient, c));
  json m = to_json(phi.map, "domain", "Y");
  return {{"schema", "partialmap.v1"}, {"domain", dom}, {"cells", m["cells"]}};
}

PartialLocalIsometry partial_from_json(const json& j, const ComplexPtr& Y) {
  expect_schema(j, "partialmap.v1");
  std::vector<CellRef> seeds;
  for (const auto& k : array_field(j, "domain")) seeds.push_back(parse_cell_key(*Y, as<std::string>(k, "domain cell")));
  Subcomplex A = closure(*Y, seeds);
  ComplexPtr D = extract(Y, A).complex;
  if (j.contains("cells")) return {Y, A, map_from_json({{"cells", j.at("cells")}}, D, Y)};
  const json& vj = field(j, "vertices");
  if (!vj.is_object()) throw InputError("field 'vertices' must be an object");
  std::vector<int> image(D->count(0), -1);
  for (const auto& [from, to] : vj.items()) {
    int a = D->find(0, from);
    if (a < 0) throw InputError("'" + from + "' is not a 0-cube of the domain");
    int b = Y->find(0, as<std::string>(to, "vertex image"));
    if (b < 0) throw InputError("'" + to.dump() + "' is not a 0-cube");
    image[a] = b;
  }
  for (int i = 0; i < D->count(0); ++i)
    if (image[i] < 0) throw InputError("no image for 0-cube " + D->id(0, i));
  auto f = infer_map(D, Y, image);
  if (!f) throw InputError("the vertex assignment does not extend to a cubical map");
  return {Y, A, *f};
}

json to_json(const Instance& inst) {
  json maps = json::array();
  for (const auto& phi : inst.O) maps.push_back(to_json(phi));
  return {{"schema", "instance.v1"}, {"complex", to_json(*inst.Y)}, {"maps", maps}};
}

Instance instance_from_json(const json& j) {
  expect_schema(j, "instance.v1");
  Instance inst;
  inst.Y = share(complex_from_json(field(j, "complex")));
  if (j.contains("maps"))
    for (const auto& m : array_field(j, "maps")) inst.O.push_back(partial_from_json(m, inst.Y));
  return inst;
}

json to_json(const GraphOfSpaces& G) {
  json vs = json::array(), es = json::array(), vsp = json::object(), esp = json::object();
  for (std::size_t v = 0; v < G.graph.vertices.size(); ++v) {
    vs.push_back(G.graph.vertices[v]);
    vsp[G.graph.vertices[v]] = to_json(*G.vertex_spaces[v]);
  }
  for (std::size_t e = 0; e < G.graph.edges.size(); ++e) {
    const auto& ed = G.graph.edges[e];
    const auto& from = G.graph.vertices[ed.from];
    const auto& to = G.graph.vertices[ed.to];
    es.push_back({{"id", ed.id}, {"ends", {from, to}}});
    const auto& E = G.edge_spaces[e];
    esp[ed.id] = {{"space", to_json(*E.space)},
                  {"tau1", to_json(E.tau1, ed.id, from)},
                  {"tau2", to_json(E.tau2, ed.id, to)}};
  }
  return {{"schema", "gos.v1"},
          {"graph", {{"vertices", vs}, {"edges", es}}},
          {"vertex_spaces", vsp},
          {"edge_spaces", esp}};
}

GraphOfSpaces gos_from_json(const json& j) {
  expect_schema(j, "gos.v1");
  GraphOfSpaces G;
  const json& g = field(j, "graph");
  const json& vsp = field(j, "vertex_spaces");
  const json& esp = field(j, "edge_spaces");
  for (const auto& v : array_field(g, "vertices")) {
    auto id = as<std::string>(v, "graph vertex");
    if (G.graph.find_vertex(id) >= 0) throw InputError("duplicate graph vertex '" + id + "'");
    G.graph.add_vertex(id);
    if (!vsp.contains(id)) throw InputError("no vertex space for '" + id + "'");
    G.vertex_spaces.push_back(share(complex_from_json(vsp.at(id))));
  }
  for (const auto& e : array_field(g, "edges")) {
    auto id = get<std::string>(e, "id");
    const auto& ends = array_field(e, "ends", 2);
    int a = G.graph.find_vertex(as<std::string>(ends[0], "edge end"));
    int b = G.graph.find_vertex(as<std::string>(ends[1], "edge end"));
    if (a < 0 || b < 0) throw InputError("edge '" + id + "' has an unknown end");
    if (G.graph.find_edge(id) >= 0) throw InputError("duplicate graph edge '" + id + "'");
    G.graph.add_edge(id, a, b);
    if (!esp.contains(id)) throw InputError("no edge space for '" + id + "'");
    const json& ej = esp.at(id);
    auto S = share(complex_from_json(field(ej, "space")));
    G.edge_spaces.push_back(
        {S, map_from_json(field(ej, "tau1"), S, G.vertex_spaces[a]), map_from_json(field(ej, "tau2"), S, G.vertex_spaces[b])});
  }
  return G;
}

json to_json(const FiniteQuotient& phi) {
  return {{"schema", "quotient.v1"}, {"rank", phi.rank}, {"degree", phi.degree}, {"gens", phi.gens}};
}

FiniteQuotient quotient_from_json(const json& j) {
  expect_schema(j, "quotient.v1");
  int rank = get<int>(j, "rank");
  int degree = get<int>(j, "degree");
  auto gens = get<std::vector<Perm>>(j, "gens");
  if (rank < 0 || degree < 1 || static_cast<int>(gens.size()) != rank)
    throw InputError("quotient needs rank >= 0, degree >= 1 and one generator per rank");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw InputError("generator of the wrong degree");
    std::vector<char> hit(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[x]) throw InputError("generator is not a permutation");
      hit[x] = 1;
    }
  }
  auto q = make_quotient(rank, degree, gens);
  if (!q) throw InputError("quotient group is too large");
  return *q;
}

json product_to_json(const CosetProduct& P) {
  json items = json::array();
  for (std::size_t k = 0; k < P.words.size(); ++k) {
    items.push_back(format_word(P.words[k]));
    if (k < P.subgroups.size()) {
      json gens = json::array();
      for (const auto& w : subgroup_generators(P.subgroups[k])) gens.push_back(format_word(w));
      items.push_back(gens);
    }
  }
  return items;
}

json to_json(const ProductSet& s) {
  json ps = json::array();
  for (const auto& P : s.products) ps.push_back(product_to_json(P));
  return {{"schema", "product.v1"}, {"rank", s.rank}, {"products", ps}};
}

ProductSet products_from_json(const json& j) {
  expect_schema(j, "product.v1");
  ProductSet s;
  s.rank = get<int>(j, "rank");
  if (s.rank < 0 || s.rank > 26) throw InputError("rank must be in 0..26");
  auto word = [&](const json& w) {
    try {
      Word x = parse_word(as<std::string>(w, "word"));
      for (int l : x)
        if (std::abs(l) > s.rank) throw InputError("word " + w.dump() + " uses a letter beyond the rank");
      return x;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  };
  for (const auto& pj : array_field(j, "products")) {
    if (!pj.is_array() || pj.size() % 2 == 0) throw InputError("a product alternates words and generator lists, starting and ending with a word");
    CosetProduct P;
    for (std::size_t k = 0; k < pj.size(); ++k) {
      if (k % 2 == 0) {
        P.words.push_back(word(pj[k]));
      } else {
        if (!pj[k].is_array()) throw InputError("expected a subgroup generator list");
        std::vector<Word> gens;
        for (const auto& g : pj[k]) gens.push_back(word(g));
        P.subgroups.push_back(stallings(s.rank, gens));
      }
    }
    s.products.push_back(std::move(P));
  }
  return s;
}

json to_json(const SpecialnessReport& r) {
  json hs = json::array();
  for (const auto& h : r.hyperplanes)
    hs.push_back({{"id", h.id},
                  {"dual_edges", h.dual_edges},
                  {"one_sided", h.one_sided},
                  {"self_crossing", h.self_crossing},
                  {"self_osculating", h.self_osculating},
                  {"osculation_blocked", h.osculation_blocked},
                  {"one_sided_witness", witness_json(h.one_sided_witness)},
                  {"self_crossing_witness", witness_json(h.self_crossing_witness)},
                  {"self_osculation_witness", witness_json(h.self_osculation_witness)},
                  {"loop_dual_edges", h.loop_dual_edges}});
  json inter = json::array();
  for (const auto& io : r.inter) inter.push_back({{"h1", io.h1}, {"h2", io.h2}, {"witness", witness_json(io.witness)}});
  return {{"schema", "specialness.v1"},
          {"npc", r.npc},
          {"precondition", r.precondition},
          {"special", r.special},
          {"hyperplanes", hs},
          {"inter_osculation", inter}};
}

json to_json(const Ledger& L) {
  json a = json::array();
  for (const auto& e : L.entries) a.push_back({{"check", e.check}, {"ok", e.ok}, {"detail", e.detail}});
  return a;
}

Ledger ledger_from_json(const json& j) {
  if (!j.is_array()) throw InputError("ledger must be an array");
  Ledger L;
  for (const auto& e : j) L.add(get<std::string>(e, "check"), get<bool>(e, "ok"), get<std::string>(e, "detail"));
  return L;
}

json to_json(const HrushovskiCertificate& c) {
  json maps = json::array(), phis = json::array();
  for (const auto& phi : c.O) maps.push_back(to_json(phi));
  for (std::size_t j = 0; j < c.Phi.size(); ++j) phis.push_back(to_json(c.Phi[j], "R", "R"));
  return {{"schema", "certificate.v1"},
          {"target", target_name(c.target)},
          {"Y", to_json(*c.Y)},
          {"maps", maps},
          {"R", to_json(*c.R)},
          {"iota", to_json(c.iota, "Y", "R")},
          {"Phi", phis},
          {"ledger", to_json(c.ledger)},
          {"cover_ledger", to_json(c.cover_ledger)},
          {"quotient", {{"degree", c.quotient_degree}, {"order", c.quotient_order}, {"gens", c.quotient_generators}}},
          {"pruned_to", c.pruned_to}};
}

HrushovskiCertificate certificate_from_json(const json& j) {
  expect_schema(j, "certificate.v1");
  HrushovskiCertificate c;
  try {
    c.target = parse_target(get<std::string>(j, "target"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  c.Y = share(complex_from_json(field(j, "Y")));
  for (const auto& m : array_field(j, "maps")) c.O.push_back(partial_from_json(m, c.Y));
  c.R = share(complex_from_json(field(j, "R")));
  c.iota = map_from_json(field(j, "iota"), c.Y, c.R);
  for (const auto& m : array_field(j, "Phi")) c.Phi.push_back(map_from_json(m, c.R, c.R));
  if (c.Phi.size() != c.O.size()) throw InputError("one extension per map is required");
  c.ledger = ledger_from_json(field(j, "ledger"));
  c.cover_ledger = ledger_from_json(field(j, "cover_ledger"));
  const json& q = field(j, "quotient");
  c.quotient_degree = get<int>(q, "degree");
  c.quotient_order = get<int>(q, "order");
  c.quotient_generators = get<std::vector<Perm>>(q, "gens");
  c.pruned_to = get<std::vector<int>>(j, "pruned_to");
  return c;
}

}  // namespace cubical::io
