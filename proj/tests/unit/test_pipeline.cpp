#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cubical/fixtures.hpp"
#include "cubical/pipeline.hpp"

using namespace cubical;
namespace fx = cubical::fixtures;

namespace {

FiniteQuotient cyclic(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return *make_quotient(1, n, {p});
}

FiniteQuotient trivial(int rank) { return *make_quotient(rank, 1, std::vector<Perm>(rank, Perm{0})); }

// Multigraph adjacency counts of the 1-skeleton.
std::vector<std::vector<int>> adjacency(const CubeComplex& X) {
  std::vector<std::vector<int>> a(X.count(0), std::vector<int>(X.count(0), 0));
  for (const auto& e : X.cells(1)) {
    ++a[e.corners[0]][e.corners[1]];
    if (e.corners[0] != e.corners[1]) ++a[e.corners[1]][e.corners[0]];
  }
  return a;
}

bool is_cycle_graph(const CubeComplex& X, int n) {
  if (X.count(0) != n || X.count(1) != n || X.count(2) != 0) return false;
  auto a = adjacency(X);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int u = 0; u < n; ++u) deg += a[v][u] * (u == v ? 2 : 1);
    if (deg != 2) return false;
  }
  return components(X).size() == 1;
}

std::vector<int> degrees(const CubeComplex& X) {
  auto a = adjacency(X);
  std::vector<int> out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    int deg = 0;
    for (std::size_t u = 0; u < a.size(); ++u) deg += a[v][u] * (u == v ? 2 : 1);
    out.push_back(deg);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubicalMap power(const CubicalMap& f, int k) {
  CubicalMap g = identity_map(f.domain());
  for (int i = 0; i < k; ++i) g = compose(g, f);
  return g;
}

GraphOfSpaces empty_realization(const ComplexPtr& Y) { return realization(Y, {}); }

}  // namespace

TEST_CASE("generator-image constraints") {
  CHECK(generator_constraint_violation(cyclic(3)) == std::nullopt);
  CHECK(generator_constraint_violation(cyclic(2)).has_value());
  CHECK(generator_constraint_violation(trivial(1)).has_value());
  auto same = make_quotient(2, 3, {{1, 2, 0}, {1, 2, 0}});
  CHECK(generator_constraint_violation(*same).has_value());
  auto inv = make_quotient(2, 3, {{1, 2, 0}, {2, 0, 1}});
  CHECK(generator_constraint_violation(*inv).has_value());
  CHECK(generator_constraint_violation(trivial(0)) == std::nullopt);
}

TEST_CASE("induced cover of edge/ab by Z/3 is a 6-cycle") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto C = induced_cover(G, cyclic(3));
  CHECK(is_cycle_graph(*C.total.complex, 6));
  CHECK(check_map(C.projection).empty());
  CHECK(check_covering(C).ok);
  CHECK_THROWS_AS(induced_cover(G, cyclic(2)), std::invalid_argument);
  CHECK_THROWS_AS(induced_cover(G, trivial(2)), std::invalid_argument);
  auto one = induced_cover(G, trivial(1), false);
  CHECK(one.total.complex->count(0) == 2);
}

TEST_CASE("induced cover without maps is one copy") {
  auto Y = fx::grid(1, 1);
  auto C = induced_cover(empty_realization(Y), trivial(0));
  CHECK(C.total.complex->count(2) == 1);
  CHECK(check_covering(C).ok);
}

TEST_CASE("induced cover of the square side shift by Z/4 is a cycle of 4 copies") {
  auto phi = fx::square_side_shift();
  auto G = realization(phi.ambient, {phi});
  auto C = induced_cover(G, cyclic(4));
  int vertical = 0, thick = 0;
  for (int i = 0; i < C.total.complex->count(2); ++i) (C.total.provenance[2][i].vertical ? vertical : thick)++;
  CHECK(vertical == 4);
  CHECK(thick == 4);
  CHECK(check_covering(C).ok);
  // copy q is joined to copy q+1 only
  std::set<std::pair<int, int>> joined;
  for (const auto& e : C.gos.graph.edges) joined.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  CHECK(joined.size() == 4);
}

TEST_CASE("a map that is not a covering is rejected") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto C = induced_cover(G, cyclic(3));
  // send every cell to the image of copy 0
  for (int d = 0; d <= 1; ++d)
    for (int i = 0; i < C.total.complex->count(d); ++i) {
      const auto& p = C.total.provenance[d][i];
      if (p.vertical) C.projection.set(d, i, C.base.vertical_cell[0][d][p.source.index], Sym::identity(d));
    }
  CHECK(check_covering(C).ok);  // still a covering: the projection did not change
  C.total = assemble(C.realization);  // wrong domain size: base over itself
  C.projection = identity_map(C.base.complex);
  auto G2 = C.gos;
  G2.edge_spaces.pop_back();
  G2.graph.edges.pop_back();
  auto T2 = assemble(G2);
  CubicalMap p(T2.complex, C.base.complex);
  for (int d = 0; d <= 1; ++d)
    for (int i = 0; i < T2.complex->count(d); ++i) {
      const auto& pr = T2.provenance[d][i];
      p.set(d, i, pr.vertical ? C.base.vertical_cell[0][d][pr.source.index] : C.base.thick_cell[0][d - 1][pr.source.index],
            Sym::identity(d));
    }
  C.projection = p;
  CHECK_FALSE(check_covering(C).ok);
}

TEST_CASE("induced automorphisms") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto C = induced_cover(G, cyclic(3));
  auto Phi = induced_automorphism(C, 0);
  CHECK(is_automorphism(Phi));
  CHECK(compose(Phi, C.projection) == C.projection);
  CHECK(power(Phi, 3) == identity_map(C.total.complex));
  CHECK_FALSE(power(Phi, 1) == identity_map(C.total.complex));
  // rotation by two cells of the 6-cycle: no 0-cube is fixed, and v/a goes to the next copy
  for (int x = 0; x < 6; ++x) CHECK(Phi.at(0, x).cell != x);
  int a0 = C.total.complex->find(0, "q0/a");
  int g = C.phi.eval({1});
  CHECK(C.total.complex->id(0, Phi.at(0, a0).cell) == "q" + std::to_string(g) + "/a");
  auto T = induced_cover(G, trivial(1), false);
  CHECK(induced_automorphism(T, 0) == identity_map(T.total.complex));
}

TEST_CASE("descent") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto C = induced_cover(G, cyclic(3));
  auto Q = horizontal_quotient(C.total);
  REQUIRE(Q.strict);
  CHECK(is_cycle_graph(*Q.complex, 3));
  auto id = descend(C.total, Q, identity_map(C.total.complex));
  CHECK(id.exact());
  CHECK(id.map == identity_map(Q.complex));
  auto rot = descend(C.total, Q, induced_automorphism(C, 0));
  CHECK(rot.exact());
  CHECK(is_automorphism(rot.map));
  for (int x = 0; x < 3; ++x) CHECK(rot.map.at(0, x).cell != x);
  CHECK(power(rot.map, 3) == identity_map(Q.complex));
  // a map that is not compatible with the quotient shows mismatches
  auto bad = identity_map(C.total.complex);
  int a0 = C.total.complex->find(0, "q0/a"), a1 = C.total.complex->find(0, "q1/a");
  bad.set(0, a0, a1, Sym::identity(0));
  auto d = descend(C.total, Q, bad);
  CHECK_FALSE(d.exact());
  // non-strict quotients are refused
  auto one = induced_cover(G, trivial(1), false);
  CHECK_THROWS_AS(descend(one.total, horizontal_quotient(one.total), identity_map(one.total.complex)),
                  std::invalid_argument);
}

TEST_CASE("descent on a square complex") {
  auto phi = fx::square_side_shift();
  auto G = realization(phi.ambient, {phi});
  auto C = induced_cover(G, cyclic(4));
  auto Q = horizontal_quotient(C.total);
  REQUIRE(Q.strict);
  auto D = descend(C.total, Q, induced_automorphism(C, 0));
  CHECK(D.exact());
  CHECK(is_automorphism(D.map));
  CHECK(power(D.map, 4) == identity_map(Q.complex));
}

TEST_CASE("verify_cover") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto V = verify_cover(induced_cover(G, cyclic(3)), {fx::edge_ab_shift()}, Target::npc);
  CHECK(V.ok());
  for (const char* c : {"cover.covering", "cover.strict", "cover.descent.g1", "npc", "npc.k-corners", "dimension",
                        "iota.embedding", "iota.locally-convex", "Phi.g1.automorphism", "Phi.g1.extends"}) {
    REQUIRE_MESSAGE(V.ledger.find(c), c);
    CHECK_MESSAGE(V.ledger.find(c)->ok, c);
  }
  auto W = verify_cover(induced_cover(G, trivial(1), false), {fx::edge_ab_shift()}, Target::npc);
  CHECK_FALSE(W.ok());
  REQUIRE(W.ledger.find("cover.strict"));
  CHECK_FALSE(W.ledger.find("cover.strict")->ok);
  CHECK(W.ledger.find("cover.strict")->detail == "identified: q0/a, q0/b");
}

TEST_CASE("certify recomputes the ledger from R and the maps") {
  auto G = realization(fx::edge_ab(), {fx::edge_ab_shift()});
  auto C = induced_cover(G, cyclic(3));
  auto V = verify_cover(C, {fx::edge_ab_shift()}, Target::npc);
  REQUIRE(V.quotient);
  auto L = certify(fx::edge_ab_shift().ambient, {fx::edge_ab_shift()}, V.quotient->complex, V.iota, V.Phi, Target::npc);
  for (const auto& e : L.entries) {
    REQUIRE(V.ledger.find(e.check));
    CHECK(*V.ledger.find(e.check) == e);
  }
  // a wrong extension is caught
  auto wrong = V.Phi;
  wrong[0] = identity_map(V.quotient->complex);
  auto L2 = certify(fx::edge_ab_shift().ambient, {fx::edge_ab_shift()}, V.quotient->complex, V.iota, wrong, Target::npc);
  CHECK_FALSE(L2.find("Phi.g1.extends")->ok);
  CHECK(L2.find("Phi.g1.automorphism")->ok);
}

TEST_CASE("search_cover") {
  SearchBudget b;
  SUBCASE("edge/ab takes Z/3") {
    auto O = std::vector<PartialLocalIsometry>{fx::edge_ab_shift()};
    auto S = search_cover(realization(fx::edge_ab(), O), O, Target::npc, b);
    REQUIRE(S.cover);
    CHECK(S.cover->phi.order() == 3);
    CHECK(S.verification->ok());
  }
  SUBCASE("no maps takes the trivial cover") {
    auto S = search_cover(empty_realization(fx::grid(2, 1)), {}, Target::npc, b);
    REQUIRE(S.cover);
    CHECK(S.cover->phi.order() == 1);
    CHECK(S.verification->ok());
    CHECK(S.verification->quotient->complex->count(2) == 2);
  }
  SUBCASE("controlled special square") {
    auto O = std::vector<PartialLocalIsometry>{fx::square_side_shift()};
    auto S = search_cover(realization(O[0].ambient, O), O, Target::special, b);
    REQUIRE(S.cover);
    CHECK(S.verification->ledger.find("special")->ok);
  }
  SUBCASE("special target needs a controlled realization") {
    auto Y = fx::grid(1, 1);
    auto A = closure(*Y, {{1, Y->find(1, "v0_0")}});
    auto D = extract(Y, A).complex;
    PartialLocalIsometry bad{Y, A, fx::map_by_names(D, Y, {{"p0_0", "p0_0"}, {"p0_1", "p1_0"}})};
    if (validate_partial_local_isometry(bad).empty() && !is_controlled(realization(Y, {bad})).ok)
      CHECK_THROWS_AS(search_cover(realization(Y, {bad}), {bad}, Target::special, b), std::invalid_argument);
  }
  SUBCASE("exhausted budget returns a trace") {
    auto O = std::vector<PartialLocalIsometry>{fx::edge_ab_shift()};
    b.max_degree = 2;
    b.random_per_degree = 5;
    auto S = search_cover(realization(fx::edge_ab(), O), O, Target::npc, b);
    CHECK_FALSE(S.cover);
    REQUIRE_FALSE(S.trace.empty());
    CHECK(S.trace.back().find("exhausted") != std::string::npos);
  }
}

TEST_CASE("hrushovski on edge/ab") {
  auto Y = fx::edge_ab();
  auto phi = fx::edge_ab_shift();
  auto r = hrushovski(phi.ambient, {phi}, Target::npc, {});
  REQUIRE(r.certificate);
  const auto& c = *r.certificate;
  CHECK(is_cycle_graph(*c.R, 3));
  CHECK(c.R->dim() == 1);
  CHECK(c.ledger.ok());
  CHECK(c.cover_ledger.ok());
  int a = phi.ambient->find(0, "a"), b = phi.ambient->find(0, "b");
  CHECK(c.Phi[0].at(0, c.iota.at(0, a).cell).cell == c.iota.at(0, b).cell);
  // rotation: no fixed 0-cube, order 3
  for (int x = 0; x < 3; ++x) CHECK(c.Phi[0].at(0, x).cell != x);
  CHECK(power(c.Phi[0], 3) == identity_map(c.R));
}

TEST_CASE("hrushovski with no maps returns Y") {
  auto Y = fx::grid(1, 2);
  auto r = hrushovski(Y, {}, Target::npc, {});
  REQUIRE(r.certificate);
  auto back = inverse(r.certificate->iota);
  CHECK(back.has_value());
  CHECK(r.certificate->Phi.empty());
  CHECK(r.certificate->ledger.ok());
}

TEST_CASE("hrushovski on the 4-cycle with one rotated edge") {
  auto rot = fx::cycle_edge_shift(4);
  auto C4 = rot.ambient;
  auto r = hrushovski(C4, {rot}, Target::npc, {});
  REQUIRE(r.certificate);
  CHECK(r.certificate->ledger.ok());
  CHECK(r.certificate->R->dim() == 1);
  // three classes {v2(q), v1(q+1), v0(q+2)} of degree 4 and three copies
  // of v3 of degree 2: not vertex-transitive
  CHECK(degrees(*r.certificate->R) == std::vector<int>{2, 2, 2, 4, 4, 4});
  CHECK(power(r.certificate->Phi[0], 3) == identity_map(r.certificate->R));
}

TEST_CASE("hrushovski on random cycle realizations") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto R = fx::random_cycle_realization(seed, 3 + seed % 4, 1 + seed % 2);
    auto r = hrushovski(R.Y, R.O, Target::npc, {});
    REQUIRE(r.certificate);
    CHECK(r.certificate->ledger.ok());
    CHECK(r.certificate->R->dim() == 1);
  }
}

TEST_CASE("hrushovski on the controlled special square") {
  auto phi = fx::square_side_shift();
  auto r = hrushovski(phi.ambient, {phi}, Target::special, {});
  REQUIRE(r.certificate);
  const auto& L = r.certificate->ledger;
  for (const char* c : {"special", "two-sided", "iota.locally-convex", "Phi.g1.extends", "dimension"}) {
    REQUIRE_MESSAGE(L.find(c), c);
    CHECK_MESSAGE(L.find(c)->ok, c);
  }
  CHECK(r.certificate->R->dim() == 2);
}

TEST_CASE("restriction pruning") {
  auto phi = fx::edge_ab_shift();
  auto Y = phi.ambient;
  // the same map twice, and a copy of edge_ab's shift restricted to itself
  std::vector<PartialLocalIsometry> O{phi, phi};
  CHECK(restriction_parents(O) == std::vector<int>{-1, 0});
  // the rotation of the 4-cycle restricted to one endpoint
  auto rot = fx::cycle_edge_shift(4);
  auto C4 = rot.ambient;
  auto A = closure(*C4, {{0, C4->find(0, "v0")}});
  auto D = extract(C4, A).complex;
  PartialLocalIsometry point{C4, A, fx::map_by_names(D, C4, {{"v0", "v1"}})};
  PartialLocalIsometry other{C4, A, fx::map_by_names(D, C4, {{"v0", "v2"}})};
  CHECK(restriction_parents({point, rot, other}) == std::vector<int>{1, -1, -1});
  PipelineBudget b;
  b.prune_restrictions = true;
  auto r = hrushovski(C4, {point, rot}, Target::npc, b);
  REQUIRE(r.certificate);
  CHECK(r.certificate->pruned_to == std::vector<int>{1, -1});
  CHECK(r.certificate->Phi[0] == r.certificate->Phi[1]);
  CHECK(r.certificate->ledger.ok());
}

TEST_CASE("hrushovski rejects invalid input") {
  auto Y = fx::grid(1, 1);
  auto A = closure(*Y, {{0, Y->find(0, "p0_0")}, {0, Y->find(0, "p1_1")}});
  auto D = extract(Y, A).complex;
  // two points to one point: not injective
  PartialLocalIsometry bad{Y, A, fx::map_by_names(D, Y, {{"p0_0", "p0_0"}, {"p1_1", "p0_0"}})};
  CHECK_THROWS_AS(hrushovski(Y, {bad}, Target::npc, {}), std::invalid_argument);
  CHECK_THROWS_AS(hrushovski(fx::standard_cube(3), {}, Target::npc, {}), std::invalid_argument);
  CHECK_THROWS_AS(hrushovski(fx::mobius_square(), {}, Target::special, {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("cat0"), std::invalid_argument);
}
