#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cubical/cubes.hpp"
#include "cubical/fixtures.hpp"
#include "cubical/hyperplanes.hpp"

using namespace cubical;
namespace fx = cubical::fixtures;

namespace {

// Fixpoint closure of "opposite sides" on sets of edge ids.
std::set<std::set<std::string>> brute_classes(const CubeComplex& X) {
  std::vector<std::set<std::string>> cls;
  for (const auto& e : X.cells(1)) cls.push_back({e.id});
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : X.cells(2))
      for (int a : {0, 2}) {
        std::string x = X.id(1, s.faces[a].cell), y = X.id(1, s.faces[a + 1].cell);
        int cx = -1, cy = -1;
        for (int i = 0; i < static_cast<int>(cls.size()); ++i) {
          if (cls[i].count(x)) cx = i;
          if (cls[i].count(y)) cy = i;
        }
        if (cx != cy) {
          cls[cx].insert(cls[cy].begin(), cls[cy].end());
          cls.erase(cls.begin() + cy);
          changed = true;
        }
      }
  }
  return {cls.begin(), cls.end()};
}

std::set<std::set<std::string>> classes_by_name(const CubeComplex& X, const EdgeClasses& ec) {
  std::set<std::set<std::string>> out;
  for (const auto& m : ec.members) {
    std::set<std::string> s;
    for (int e : m) s.insert(X.id(1, e));
    out.insert(s);
  }
  return out;
}

// Exhaustive search for a consistent orientation of one class.
bool brute_two_sided(const CubeComplex& X, const std::vector<int>& dual) {
  int k = static_cast<int>(dual.size());
  REQUIRE(k <= 16);
  for (int mask = 0; mask < (1 << k); ++mask) {
    auto o = [&](int e) {
      for (int i = 0; i < k; ++i)
        if (dual[i] == e) return ((mask >> i) & 1) ? -1 : 1;
      return 0;
    };
    bool ok = true;
    for (const auto& s : X.cells(2))
      for (int a : {0, 2}) {
        int e1 = s.faces[a].cell, e2 = s.faces[a + 1].cell;
        if (!o(e1)) continue;
        if (o(e1) * sym_dir(s.faces[a].sym) != o(e2) * sym_dir(s.faces[a + 1].sym)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parallelism classes") {
  auto S = fx::standard_cube(2);
  auto ec = edge_parallelism_classes(*S);
  CHECK(ec.members.size() == 2);
  for (const auto& m : ec.members) CHECK(m.size() == 2);

  auto T = fx::square_torus();
  auto et = edge_parallelism_classes(*T);
  CHECK(classes_by_name(*T, et) == std::set<std::set<std::string>>{{"a"}, {"b"}});

  auto G = fx::grid(2, 1);
  auto eg = edge_parallelism_classes(*G);
  CHECK(classes_by_name(*G, eg) == brute_classes(*G));
  CHECK(classes_by_name(*G, eg) ==
        std::set<std::set<std::string>>{{"v0_0", "v1_0", "v2_0"}, {"h0_0", "h0_1"}, {"h1_0", "h1_1"}});
}

TEST_CASE("midcube complexes") {
  auto S = build_midcube_complex(*fx::standard_cube(2));
  CHECK(S.components == 2);
  CHECK(S.complex->count(1) == 2);
  CHECK(validate(*S.complex).ok());

  auto C = build_midcube_complex(*fx::standard_cube(3));
  CHECK(C.components == 3);
  CHECK(C.complex->count(2) == 3);
  CHECK(validate(*C.complex).ok());

  // torus: each hyperplane is a circle made of one vertex and one loop edge
  auto T = build_midcube_complex(*fx::square_torus());
  CHECK(T.components == 2);
  for (const auto& m : T.complex->cells(1)) CHECK(m.corners[0] == m.corners[1]);
}

TEST_CASE("hyperplanes and carriers") {
  auto T = fx::square_torus();
  auto hs = hyperplanes(*T);
  REQUIRE(hs.size() == 2);
  for (const auto& H : hs) {
    CHECK(H.carrier.count(2) == 1);
    CHECK(H.carrier.count(1) == 2);
    CHECK(H.orientation.has_value());
  }
  auto G = fx::grid(2, 2);
  for (const auto& H : hyperplanes(*G)) {
    CHECK(is_closed(*G, H.carrier));
    for (int e : H.dual_edges) CHECK(H.carrier.has(1, e));
    CHECK(validate(*extract(G, H.carrier).complex).ok());
  }
}

TEST_CASE("two-sidedness") {
  for (const auto& H : hyperplanes(*fx::standard_cube(2))) CHECK(two_sidedness(*fx::standard_cube(2), H).two_sided);
  auto M = fx::mobius_square();
  auto hs = hyperplanes(*M);
  int one = 0;
  for (const auto& H : hs) {
    bool oracle = brute_two_sided(*M, H.dual_edges);
    CHECK(H.orientation.has_value() == oracle);
    if (!oracle) {
      ++one;
      CHECK(H.reversing_cycle == std::vector<int>{M->find(1, "e")});
    }
  }
  CHECK(one == 1);
}

TEST_CASE("self-crossing") {
  auto S = fx::standard_cube(2);
  for (const auto& H : hyperplanes(*S)) CHECK_FALSE(self_crossing(*S, H).found);
  auto C = fx::standard_cube(3);
  for (const auto& H : hyperplanes(*C)) CHECK_FALSE(self_crossing(*C, H).found);
  auto X = fx::self_crossing_square();
  auto hs = hyperplanes(*X);
  REQUIRE(hs.size() == 1);
  auto w = self_crossing(*X, hs[0]);
  CHECK(w.found);
  CHECK(w.cells == std::vector<std::string>{"s"});
}

TEST_CASE("fixtures show exactly one pathology each") {
  struct Case {
    ComplexPtr X;
    bool one, cross, selfosc, inter;
  };
  std::vector<Case> cases{{fx::mobius_square(), true, false, false, false},
                          {fx::self_crossing_square(), false, true, false, false},
                          {fx::self_osculating_square(), false, false, true, false},
                          {fx::inter_osculating_strip(), false, false, false, true}};
  for (const auto& c : cases) {
    REQUIRE(validate(*c.X).ok());
    auto r = is_special(*c.X);
    CHECK(r.npc);
    bool one = false, cross = false, selfosc = false;
    for (const auto& h : r.hyperplanes) {
      one |= h.one_sided;
      cross |= h.self_crossing;
      selfosc |= h.self_osculating;
    }
    CHECK(one == c.one);
    CHECK(cross == c.cross);
    CHECK(selfosc == c.selfosc);
    CHECK(!r.inter.empty() == c.inter);
    CHECK_FALSE(r.special);
  }
}

TEST_CASE("self-osculation witnesses") {
  auto X = fx::self_osculating_square();
  auto r = is_special(*X);
  std::vector<std::string> loops;
  for (const auto& h : r.hyperplanes) {
    if (h.self_osculating) {
      CHECK(h.dual_edges == std::vector<std::string>{"a", "b"});
      CHECK(h.self_osculation_witness.cells == std::vector<std::string>{"a", "b", "p"});
    }
    loops.insert(loops.end(), h.loop_dual_edges.begin(), h.loop_dual_edges.end());
  }
  CHECK(loops == std::vector<std::string>{"l"});

  auto T = fx::square_torus();
  for (const auto& H : hyperplanes(*T)) CHECK_FALSE(self_osculation(*T, H).found);
  auto G = fx::grid(2, 1);
  for (const auto& H : hyperplanes(*G)) CHECK_FALSE(self_osculation(*G, H).found);

  auto M = fx::mobius_square();
  for (const auto& H : hyperplanes(*M))
    if (!H.orientation) CHECK(self_osculation(*M, H).note == "blocked-by-one-sidedness");
}

TEST_CASE("inter-osculation") {
  auto S = fx::standard_cube(2);
  auto hs = hyperplanes(*S);
  CHECK_FALSE(inter_osculation(*S, hs[0], hs[1]).found);
  auto T = fx::square_torus();
  auto ht = hyperplanes(*T);
  CHECK_FALSE(inter_osculation(*T, ht[0], ht[1]).found);

  auto X = fx::inter_osculating_strip();
  auto r = is_special(*X);
  std::set<std::set<std::string>> pairs;
  for (const auto& io : r.inter) {
    std::set<std::string> p;
    for (int h : {io.h1, io.h2}) p.insert(r.hyperplanes[h].dual_edges.front());
    pairs.insert(p);
  }
  CHECK(pairs == std::set<std::set<std::string>>{{"v0_0", "h0_0"}, {"v0_0", "h2_0"}});
}

TEST_CASE("special complexes") {
  CHECK(is_special(*fx::standard_cube(2)).special);
  CHECK(is_special(*fx::square_torus()).special);
  CHECK(is_special(*fx::grid(3, 2)).special);
  CHECK(is_special(*fx::standard_cube(3)).special);
  auto hollow = is_special(*fx::corner_of_cube(false));
  CHECK_FALSE(hollow.npc);
  CHECK_FALSE(hollow.special);
  CHECK_FALSE(hollow.precondition.empty());
}

TEST_CASE("subcomplex self-osculation") {
  auto S = fx::standard_cube(2);
  CHECK_FALSE(subcomplex_self_osculates(*S, Subcomplex::all(*S)).found);
  CHECK_FALSE(subcomplex_self_osculates(*S, closure(*S, {{1, S->find(1, "-0")}})).found);

  auto G = fx::grid(2, 1);
  Subcomplex A = closure(*G, {{1, G->find(1, "v0_0")}, {0, G->find(0, "p2_0")}});
  auto w = subcomplex_self_osculates(*G, A);
  // oracle: rung v2_0 is parallel to v0_0, lies outside A and touches p2_0
  CHECK(w.found);
  CHECK(w.cells == std::vector<std::string>{"v0_0", "v2_0", "p2_0"});
}

TEST_CASE("dual-class verdicts agree with the midcube complex") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto X = fx::random_square_complex(seed, 1 + static_cast<int>(seed % 12));
    CAPTURE(seed);
    auto M = build_midcube_complex(*X);
    auto hs = hyperplanes(*X);
    REQUIRE(static_cast<int>(hs.size()) == M.components);
    CHECK(classes_by_name(*X, edge_parallelism_classes(*X)) == brute_classes(*X));
    auto mv = midcube_verdicts(*X, M);
    auto rep = is_special(*X);
    std::set<std::pair<int, int>> inter;
    for (const auto& H : hs) {
      const auto& f = rep.hyperplanes[H.id];
      CHECK(f.one_sided == static_cast<bool>(mv.one_sided[H.component]));
      CHECK(f.self_crossing == static_cast<bool>(mv.self_crossing[H.component]));
      CHECK(f.self_osculating == static_cast<bool>(mv.self_osculating[H.component]));
      if (H.dual_edges.size() <= 16) CHECK(H.orientation.has_value() == brute_two_sided(*X, H.dual_edges));
    }
    for (const auto& io : rep.inter) {
      int a = hs[io.h1].component, b = hs[io.h2].component;
      inter.insert({std::min(a, b), std::max(a, b)});
    }
    CHECK(inter == std::set<std::pair<int, int>>(mv.inter.begin(), mv.inter.end()));
  }
}

TEST_CASE("the middle level of a product is one hyperplane shaped like the factor") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto X = fx::random_square_complex(seed, 1 + static_cast<int>(seed % 6));
    auto P = product_with_interval(X);
    auto M = build_midcube_complex(*P.product);
    int mid = M.component[M.complex->find(0, X->id(0, 0) + "@I")];
    std::array<int, 3> counts{0, 0, 0};
    for (int d = 0; d < 3; ++d)
      for (int i = 0; i < M.complex->count(d); ++i) {
        int v = d == 0 ? i : M.complex->cell(d, i).corners[0];
        if (M.component[v] == mid) ++counts[d];
      }
    CHECK(counts[0] == X->count(0));
    CHECK(counts[1] == X->count(1));
    CHECK(counts[2] == X->count(2));
    for (int v = 0; v < X->count(0); ++v) CHECK(M.component[M.complex->find(0, X->id(0, v) + "@I")] == mid);
  }
}
