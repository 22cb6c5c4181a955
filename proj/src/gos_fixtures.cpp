#include <random>
#include <stdexcept>

#include "cubical/fixtures.hpp"

namespace cubical::fixtures {

CubicalMap map_by_names(const ComplexPtr& dom, const ComplexPtr& cod,
                        const std::vector<std::pair<std::string, std::string>>& vertices) {
  std::vector<int> vm(dom->count(0), -1);
  for (const auto& [a, b] : vertices) vm.at(dom->find(0, a)) = cod->find(0, b);
  auto f = infer_map(dom, cod, vm);
  if (!f) throw std::invalid_argument("map_by_names: no cubical map extends the assignment");
  return *f;
}

namespace {

ComplexPtr point() { return standard_cube(0); }

EdgeSpace point_edge(const ComplexPtr& X1, const std::string& a, const ComplexPtr& X2, const std::string& b) {
  auto P = point();
  return {P, map_by_names(P, X1, {{"pt", a}}), map_by_names(P, X2, {{"pt", b}})};
}

std::string pname(int x, int y) { return "p" + std::to_string(x) + "_" + std::to_string(y); }

}  // namespace

GraphOfSpaces point_circle() {
  GraphOfSpaces G;
  auto P = point();
  G.graph.add_vertex("v");
  G.vertex_spaces.push_back(P);
  G.graph.add_edge("g1", 0, 0);
  G.edge_spaces.push_back(point_edge(P, "pt", P, "pt"));
  return G;
}

ComplexPtr edge_ab() { return graph({"a", "b"}, {{"e", "a", "b"}}); }

PartialLocalIsometry edge_ab_shift() {
  auto Y = edge_ab();
  auto A = closure(*Y, {{0, Y->find(0, "a")}});
  auto D = extract(Y, A).complex;
  PartialLocalIsometry phi{Y, A, map_by_names(D, Y, {{"a", "b"}})};
  return phi;
}

GraphOfSpaces square_tree() {
  GraphOfSpaces G;
  auto U = grid(1, 1), W = grid(1, 1), S = grid(1, 0);
  G.graph.add_vertex("u");
  G.graph.add_vertex("w");
  G.vertex_spaces = {U, W};
  G.graph.add_edge("f", 0, 1);
  G.edge_spaces.push_back({S, map_by_names(S, U, {{"p0_0", "p1_0"}, {"p1_0", "p1_1"}}),
                           map_by_names(S, W, {{"p0_0", "p0_0"}, {"p1_0", "p0_1"}})});
  return G;
}

GraphOfSpaces cycle_of_edges(int n) {
  GraphOfSpaces G;
  for (int k = 0; k < n; ++k) {
    G.graph.add_vertex("x" + std::to_string(k));
    G.vertex_spaces.push_back(edge_ab());
  }
  for (int k = 0; k < n; ++k) {
    int next = (k + 1) % n;
    G.graph.add_edge("c" + std::to_string(k), k, next);
    G.edge_spaces.push_back(point_edge(G.vertex_spaces[k], "b", G.vertex_spaces[next], "a"));
  }
  return G;
}

PartialLocalIsometry cycle_edge_shift(int n) {
  auto C = cycle_graph(n);
  auto A = closure(*C, {{1, C->find(1, "e0")}});
  auto D = extract(C, A).complex;
  return {C, A, map_by_names(D, C, {{"v0", "v1"}, {"v1", "v2"}})};
}

PartialLocalIsometry square_side_shift() {
  auto Y = grid(1, 1);
  auto A = closure(*Y, {{1, Y->find(1, "v0_0")}});
  auto D = extract(Y, A).complex;
  return {Y, A, map_by_names(D, Y, {{"p0_0", "p1_0"}, {"p0_1", "p1_1"}})};
}

GraphOfSpaces remote_osculation_circle() {
  GraphOfSpaces G;
  auto U = grid(1, 1), W = grid(1, 1), S = grid(1, 0);
  G.graph.add_vertex("u");
  G.graph.add_vertex("w");
  G.vertex_spaces = {U, W};
  G.graph.add_edge("f", 0, 1);
  G.edge_spaces.push_back({S, map_by_names(S, U, {{"p0_0", "p1_0"}, {"p1_0", "p1_1"}}),
                           map_by_names(S, W, {{"p0_0", "p0_0"}, {"p1_0", "p0_1"}})});
  G.graph.add_edge("g", 0, 1);
  G.edge_spaces.push_back(point_edge(U, "p0_0", W, "p1_0"));
  return G;
}

namespace {

struct GridGen {
  std::mt19937_64 rng;
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // grid(a, b) placed in grid(W, H) by a symmetry of the plane and a shift,
  // as 0-cube name pairs
  std::optional<std::vector<std::pair<std::string, std::string>>> placement(int a, int b, int W, int H) {
    bool swap = pick(0, 1);
    int bw = swap ? b : a, bh = swap ? a : b;
    if (bw > W || bh > H) return std::nullopt;
    bool fx = pick(0, 1), fy = pick(0, 1);
    int ox = pick(0, W - bw), oy = pick(0, H - bh);
    std::vector<std::pair<std::string, std::string>> vm;
    for (int x = 0; x <= a; ++x)
      for (int y = 0; y <= b; ++y) {
        int u = swap ? y : x, v = swap ? x : y;
        if (fx) u = bw - u;
        if (fy) v = bh - v;
        vm.emplace_back(pname(x, y), pname(ox + u, oy + v));
      }
    return vm;
  }

  std::optional<CubicalMap> place(const ComplexPtr& S, int a, int b, const ComplexPtr& V, int W, int H) {
    auto vm = placement(a, b, W, H);
    if (!vm) return std::nullopt;
    return map_by_names(S, V, *vm);
  }

  void edge(GraphOfSpaces& G, const std::vector<std::pair<int, int>>& dims, int from, int to, const std::string& id) {
    auto [W1, H1] = dims[from];
    auto [W2, H2] = dims[to];
    for (;;) {
      int shape = pick(0, 2);
      int a = shape == 0 ? 0 : pick(1, 3), b = shape == 2 ? pick(1, 3) : 0;
      auto S = grid(a, b);
      auto t1 = place(S, a, b, G.vertex_spaces[from], W1, H1);
      auto t2 = place(S, a, b, G.vertex_spaces[to], W2, H2);
      if (!t1 || !t2) continue;
      G.graph.add_edge(id, from, to);
      G.edge_spaces.push_back({S, *t1, *t2});
      return;
    }
  }

  std::vector<std::pair<int, int>> vertices(GraphOfSpaces& G, int n) {
    std::vector<std::pair<int, int>> dims;
    for (int v = 0; v < n; ++v) {
      int w = pick(1, 3), h = pick(1, 3);
      dims.emplace_back(w, h);
      G.graph.add_vertex("x" + std::to_string(v));
      G.vertex_spaces.push_back(grid(w, h));
    }
    return dims;
  }
};

}  // namespace

GraphOfSpaces random_tree_gos(std::uint64_t seed, int vertices) {
  GridGen gen{std::mt19937_64(seed)};
  GraphOfSpaces G;
  auto dims = gen.vertices(G, vertices);
  for (int v = 1; v < vertices; ++v) gen.edge(G, dims, gen.pick(0, v - 1), v, "t" + std::to_string(v));
  return G;
}

GraphOfSpaces random_gos(std::uint64_t seed, int vertices, int edges) {
  GridGen gen{std::mt19937_64(seed)};
  GraphOfSpaces G;
  auto dims = gen.vertices(G, vertices);
  int k = 0;
  for (int v = 1; v < vertices; ++v) gen.edge(G, dims, gen.pick(0, v - 1), v, "t" + std::to_string(k++));
  for (int e = vertices - 1; e < edges; ++e)
    gen.edge(G, dims, gen.pick(0, vertices - 1), gen.pick(0, vertices - 1), "t" + std::to_string(k++));
  return G;
}

Realization random_grid_realization(std::uint64_t seed, int generators) {
  GridGen gen{std::mt19937_64(seed)};
  int W = gen.pick(1, 3), H = gen.pick(1, 3);
  Realization r{grid(W, H), {}};
  const CubeComplex& Y = *r.Y;
  while (static_cast<int>(r.O.size()) < generators) {
    int shape = gen.pick(0, 2);
    int a = shape == 0 ? 0 : gen.pick(1, W), b = shape == 2 ? gen.pick(1, H) : 0;
    if (a > W || b > H) continue;
    auto vm = gen.placement(a, b, W, H);
    if (!vm) continue;
    int ox = gen.pick(0, W - a), oy = gen.pick(0, H - b);
    std::vector<CellRef> seeds;
    for (int x = ox; x <= ox + a; ++x)
      for (int y = oy; y <= oy + b; ++y) {
        seeds.push_back({0, Y.find(0, pname(x, y))});
        if (x < ox + a) seeds.push_back({1, Y.find(1, "h" + std::to_string(x) + "_" + std::to_string(y))});
        if (y < oy + b) seeds.push_back({1, Y.find(1, "v" + std::to_string(x) + "_" + std::to_string(y))});
        if (x < ox + a && y < oy + b) seeds.push_back({2, Y.find(2, "s" + std::to_string(x) + "_" + std::to_string(y))});
      }
    auto A = closure(Y, seeds);
    auto D = extract(r.Y, A).complex;
    std::vector<std::pair<std::string, std::string>> names;
    for (const auto& [from, to] : *vm) {
      int x = std::stoi(from.substr(1)), y = std::stoi(from.substr(from.find('_') + 1));
      names.emplace_back(pname(ox + x, oy + y), to);
    }
    r.O.push_back({r.Y, A, map_by_names(D, r.Y, names)});
  }
  return r;
}

Realization random_cycle_realization(std::uint64_t seed, int n, int generators) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Realization r{cycle_graph(n), {}};
  const CubeComplex& Y = *r.Y;
  auto vname = [&](int i) { return "v" + std::to_string(((i % n) + n) % n); };
  for (int g = 0; g < generators; ++g) {
    int len = pick(0, n - 1), start = pick(0, n - 1), shift = pick(0, n - 1);
    bool flip = pick(0, 1);
    std::vector<CellRef> seeds{{0, Y.find(0, vname(start))}};
    for (int k = 0; k < len; ++k) seeds.push_back({1, Y.find(1, "e" + std::to_string((start + k) % n))});
    auto A = closure(Y, seeds);
    auto D = extract(r.Y, A).complex;
    std::vector<std::pair<std::string, std::string>> names;
    for (int k = 0; k <= len; ++k) names.emplace_back(vname(start + k), vname(flip ? shift - k : shift + k));
    r.O.push_back({r.Y, A, map_by_names(D, r.Y, names)});
  }
  return r;
}

}  // namespace cubical::fixtures
