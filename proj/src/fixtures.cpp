#include "cubical/fixtures.hpp"

#include <random>
#include <stdexcept>
#include <tuple>

namespace cubical::fixtures {

ComplexPtr standard_cube(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("standard_cube: dimension out of range");
  ComplexBuilder b;
  for (const Pos& p : all_positions(n)) {
    std::vector<std::pair<std::string, Sym>> faces;
    for (int a = 0; a < n; ++a) {
      if (p.v[a] != 0) continue;
      for (int s : {-1, 1}) {
        Pos q = p;
        q.v[a] = static_cast<std::int8_t>(s);
        faces.emplace_back(q.str(), Sym::identity(p.free_count() - 1));
      }
    }
    b.cell(p.free_count(), n == 0 ? std::string("pt") : p.str(), std::move(faces));
  }
  return share(b.build());
}

ComplexPtr with_face_sym(const CubeComplex& X, int dim, const std::string& cell, int slot, const Sym& sym) {
  ComplexBuilder b;
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      std::vector<std::pair<std::string, Sym>> faces;
      const auto& fs = X.cell(d, i).faces;
      for (std::size_t s = 0; s < fs.size(); ++s) {
        bool hit = d == dim && X.id(d, i) == cell && static_cast<int>(s) == slot;
        faces.emplace_back(X.id(d - 1, fs[s].cell), hit ? sym : fs[s].sym);
      }
      b.cell(d, X.id(d, i), std::move(faces));
    }
  return share(b.build());
}

ComplexPtr graph(const std::vector<std::string>& vertices,
                 const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  ComplexBuilder b;
  for (const auto& v : vertices) b.vertex(v);
  for (const auto& [id, from, to] : edges) b.edge(id, from, to);
  return share(b.build());
}

ComplexPtr wedge_of_loops(int k) {
  ComplexBuilder b;
  b.vertex("v");
  for (int i = 0; i < k; ++i) b.edge("l" + std::to_string(i), "v", "v");
  return share(b.build());
}

ComplexPtr cycle_graph(int n) {
  ComplexBuilder b;
  for (int i = 0; i < n; ++i) b.vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.edge("e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  return share(b.build());
}

ComplexPtr folded_square() {
  ComplexBuilder b;
  b.vertex("v0").vertex("v1").vertex("w");
  b.edge("e", "v0", "v1").edge("f", "v1", "w").edge("g", "v1", "w");
  b.square("s", {{{"e", 1}, {"f", 1}, {"e", 1}, {"g", 1}}});
  return share(b.build());
}

ComplexPtr corner_of_cube(bool filled) {
  auto C = standard_cube(3);
  if (filled) return C;
  Subcomplex A = closure(*C, {{2, C->find(2, "-00")}, {2, C->find(2, "0-0")}, {2, C->find(2, "00-")}});
  return extract(C, A).complex;
}

ComplexPtr square_torus() {
  ComplexBuilder b;
  b.vertex("v").edge("a", "v", "v").edge("b", "v", "v");
  b.square("s", {{{"a", 1}, {"a", 1}, {"b", 1}, {"b", 1}}});
  return share(b.build());
}

ComplexPtr mobius_square() {
  ComplexBuilder b;
  b.vertex("p").vertex("q");
  b.edge("e", "p", "q").edge("a", "p", "q").edge("b", "q", "p");
  b.square("s", {{{"a", 1}, {"b", 1}, {"e", 1}, {"e", -1}}});
  return share(b.build());
}

ComplexPtr self_crossing_square() {
  ComplexBuilder b;
  b.vertex("v").vertex("u");
  b.edge("e", "v", "v").edge("f", "v", "u").edge("g", "v", "u");
  b.square("s", {{{"e", 1}, {"f", 1}, {"e", -1}, {"g", 1}}});
  return share(b.build());
}

ComplexPtr self_osculating_square() {
  ComplexBuilder b;
  b.vertex("p").vertex("q").vertex("r");
  b.edge("l", "p", "p").edge("a", "p", "q").edge("b", "p", "r").edge("d", "q", "r");
  b.square("s", {{{"a", 1}, {"b", 1}, {"l", 1}, {"d", 1}}});
  return share(b.build());
}

ComplexPtr inter_osculating_strip() {
  // grid(3, 1) with p3_1 renamed to p0_0
  auto n = [](const char* k, int x, int y) { return k + std::to_string(x) + "_" + std::to_string(y); };
  auto vert = [&](int x, int y) { return x == 3 && y == 1 ? n("p", 0, 0) : n("p", x, y); };
  ComplexBuilder b;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 1; ++y) {
      if (!(x == 3 && y == 1)) b.vertex(vert(x, y));
      if (x < 3) b.edge(n("h", x, y), vert(x, y), vert(x + 1, y));
      if (y < 1) b.edge(n("v", x, y), vert(x, y), vert(x, y + 1));
      if (x < 3 && y < 1)
        b.square(n("s", x, y), {{{n("h", x, y), 1}, {n("h", x, y + 1), 1}, {n("v", x, y), 1}, {n("v", x + 1, y), 1}}});
    }
  return share(b.build());
}

ComplexPtr grid(int w, int h) {
  auto n = [](const char* k, int x, int y) { return k + std::to_string(x) + "_" + std::to_string(y); };
  ComplexBuilder b;
  for (int x = 0; x <= w; ++x)
    for (int y = 0; y <= h; ++y) {
      b.vertex(n("p", x, y));
      if (x < w) b.edge(n("h", x, y), n("p", x, y), n("p", x + 1, y));
      if (y < h) b.edge(n("v", x, y), n("p", x, y), n("p", x, y + 1));
      if (x < w && y < h)
        b.square(n("s", x, y), {{{n("h", x, y), 1}, {n("h", x, y + 1), 1}, {n("v", x, y), 1}, {n("v", x + 1, y), 1}}});
    }
  return share(b.build());
}

ComplexPtr band(int n, bool twisted) {
  if (n < 1) throw std::invalid_argument("band needs at least one square");
  auto k = [](const char* p, int i) { return p + std::to_string(i); };
  ComplexBuilder b;
  for (int i = 0; i < n; ++i) b.vertex(k("b", i)).vertex(k("t", i)).edge(k("r", i), k("b", i), k("t", i));
  for (int i = 0; i < n; ++i) {
    bool last = i == n - 1;
    int j = (i + 1) % n;
    std::string b1 = last && twisted ? k("t", j) : k("b", j);
    std::string t1 = last && twisted ? k("b", j) : k("t", j);
    b.edge(k("hb", i), k("b", i), b1).edge(k("ht", i), k("t", i), t1);
    b.square(k("s", i), {{{k("hb", i), 1}, {k("ht", i), 1}, {k("r", i), 1}, {k("r", j), last && twisted ? -1 : 1}}});
  }
  return share(b.build());
}

ComplexPtr random_square_complex(std::uint64_t seed, int squares) {
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  int nv = 0;
  auto new_vertex = [&] { return "p" + std::to_string(nv++); };
  auto new_edge = [&](const std::string& a, const std::string& b) {
    std::string id = "e" + std::to_string(edges.size());
    edges.emplace_back(id, a, b);
    return SideSpec{id, 1};
  };
  // a side from a to b: reuse a matching edge or make a fresh one
  auto side = [&](const std::string& a, const std::string& b) {
    std::vector<SideSpec> options;
    for (const auto& [id, x, y] : edges) {
      if (x == a && y == b) options.push_back({id, 1});
      if (x == b && y == a) options.push_back({id, -1});
    }
    if (!options.empty() && coin(0.5)) return options[pick(static_cast<int>(options.size()))];
    return new_edge(a, b);
  };
  std::vector<std::pair<std::string, std::array<SideSpec, 4>>> sq;
  std::string c00 = new_vertex(), c10 = new_vertex();
  new_edge(c00, c10);
  for (int s = 0; s < squares; ++s) {
    auto [id, x, y] = edges[pick(static_cast<int>(edges.size()))];
    int dir = coin(0.5) ? 1 : -1;
    std::string a = dir > 0 ? x : y, b = dir > 0 ? y : x;
    std::vector<std::string> verts;
    for (int i = 0; i < nv; ++i) verts.push_back("p" + std::to_string(i));
    std::string c01 = coin(0.3) ? verts[pick(static_cast<int>(verts.size()))] : new_vertex();
    std::string c11 = coin(0.3) ? verts[pick(static_cast<int>(verts.size()))] : new_vertex();
    std::array<SideSpec, 4> sides;
    sides[0] = {id, dir};
    sides[2] = side(a, c01);
    sides[3] = side(b, c11);
    sides[1] = side(c01, c11);
    sq.emplace_back("s" + std::to_string(s), sides);
  }
  ComplexBuilder bld;
  for (int i = 0; i < nv; ++i) bld.vertex("p" + std::to_string(i));
  for (const auto& [id, a, b] : edges) bld.edge(id, a, b);
  for (const auto& [id, sides] : sq) bld.square(id, sides);
  return share(bld.build());
}

ComplexPtr random_graph(std::uint64_t seed, int vertices, int edges) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(0, vertices - 1);
  ComplexBuilder b;
  for (int i = 0; i < vertices; ++i) b.vertex("v" + std::to_string(i));
  for (int e = 0; e < edges; ++e) b.edge("e" + std::to_string(e), "v" + std::to_string(v(rng)), "v" + std::to_string(v(rng)));
  return share(b.build());
}

}  // namespace cubical::fixtures
