#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubical/dot.hpp"
#include "cubical/fixtures.hpp"
#include "cubical/io.hpp"
#include "dot_parse.hpp"

using namespace cubical;
namespace fx = cubical::fixtures;
using io::json;
using io::to_json;

namespace {

ComplexPtr reparse(const CubeComplex& X) { return share(io::complex_from_json(json::parse(to_json(X).dump()))); }

std::vector<ComplexPtr> sample_complexes() {
  std::vector<ComplexPtr> xs = {fx::standard_cube(3),          fx::corner_of_cube(true), fx::corner_of_cube(false),
                                fx::square_torus(),            fx::mobius_square(),      fx::self_crossing_square(),
                                fx::self_osculating_square(),  fx::inter_osculating_strip(), fx::grid(3, 2),
                                fx::folded_square(),           fx::wedge_of_loops(3),    fx::edge_ab()};
  for (std::uint64_t s = 0; s < 20; ++s) xs.push_back(fx::random_square_complex(s, 1 + static_cast<int>(s % 12)));
  for (const auto& Q : {fx::with_face_sym(*fx::standard_cube(3), 3, "000", 2, Sym::from_index(2, 5))}) xs.push_back(Q);
  return xs;
}

}  // namespace

TEST_CASE("dot parser oracle rejects broken input") {
  CHECK(parse_dot("graph \"g\" {\n a -- b [label=\"x\"];\n}\n").ok);
  CHECK_FALSE(parse_dot("graph g { a -> b; }").ok);
  CHECK_FALSE(parse_dot("graph g { a -- b [label=]; }").ok);
  CHECK_FALSE(parse_dot("graph g { a -- b;").ok);
  CHECK_FALSE(parse_dot("graph g { \"a -- b; }").ok);
}

TEST_CASE("cubecomplex.v1 round trip") {
  for (const auto& X : sample_complexes()) {
    auto j = to_json(*X);
    auto Y = reparse(*X);
    CHECK(*Y == *X);
    CHECK(to_json(*Y) == j);
    CHECK(json::parse(j.dump()) == j);
  }
}

TEST_CASE("cubecomplex.v1 inputs") {
  json sq = {{"vertices", {"a", "b", "c", "d"}},
             {"edges",
              {{{"id", "ab"}, {"ends", {"a", "b"}}},
               {{"id", "cd"}, {"ends", {"c", "d"}}},
               {{"id", "ac"}, {"ends", {"a", "c"}}},
               {{"id", "bd"}, {"ends", {"b", "d"}}}}},
             {"squares",
              {{{"id", "s"},
                {"sides",
                 {{{"edge", "ab"}, {"dir", 1}},
                  {{"edge", "cd"}, {"dir", 1}},
                  {{"edge", "ac"}, {"dir", 1}},
                  {{"edge", "bd"}, {"dir", 1}}}}}}}};
  auto X = io::complex_from_json(sq);
  CHECK(validate(X).ok());
  CHECK(X.id(0, X.cell(2, 0).corners[3]) == "d");
  // unknown edge: a build error, reported by validate
  auto bad = sq;
  bad["squares"][0]["sides"][1]["edge"] = "zz";
  CHECK_FALSE(validate(io::complex_from_json(bad)).ok());
  // shape errors
  CHECK_THROWS_AS(io::complex_from_json(json::object()), io::InputError);
  auto short_sides = sq;
  short_sides["squares"][0]["sides"].erase(0);
  CHECK_THROWS_AS(io::complex_from_json(short_sides), io::InputError);
  auto wrong_dim = sq;
  wrong_dim["dim"] = 1;
  CHECK_THROWS_AS(io::complex_from_json(wrong_dim), io::InputError);
  auto wrong_schema = sq;
  wrong_schema["schema"] = "gos.v1";
  CHECK_THROWS_AS(io::complex_from_json(wrong_schema), io::InputError);
}

TEST_CASE("cell keys") {
  auto X = fx::edge_ab();
  CHECK(io::cell_key(*X, {1, 0}) == "1:e");
  CHECK(io::parse_cell_key(*X, "1:e") == CellRef{1, 0});
  CHECK(io::parse_cell_key(*X, "a") == CellRef{0, X->find(0, "a")});
  CHECK_THROWS_AS(io::parse_cell_key(*X, "2:e"), io::InputError);
}

TEST_CASE("cubicalmap.v1 round trip") {
  auto Y = fx::grid(2, 2);
  auto rot = fx::map_by_names(Y, Y, {{"p0_0", "p2_0"}, {"p1_0", "p2_1"}, {"p2_0", "p2_2"}, {"p0_1", "p1_0"},
                                     {"p1_1", "p1_1"}, {"p2_1", "p1_2"}, {"p0_2", "p0_0"}, {"p1_2", "p0_1"},
                                     {"p2_2", "p0_2"}});
  auto j = to_json(rot, "Y", "Y");
  auto back = io::map_from_json(json::parse(j.dump()), Y, Y);
  CHECK(back == rot);
  CHECK(to_json(back, "Y", "Y") == j);
  auto missing = j;
  missing["cells"].erase("2:s0_0");
  CHECK_THROWS_AS(io::map_from_json(missing, Y, Y), io::InputError);
  auto bad_sym = j;
  bad_sym["cells"]["1:h0_0"]["sym"] = 5;
  CHECK_THROWS_AS(io::map_from_json(bad_sym, Y, Y), io::InputError);
}

TEST_CASE("partialmap.v1 and instance.v1") {
  auto phi = fx::edge_ab_shift();
  auto j = to_json(phi);
  auto back = io::partial_from_json(j, phi.ambient);
  CHECK(back.map == phi.map);
  CHECK(to_json(back) == j);
  // vertex shorthand
  json v = {{"domain", {"a"}}, {"vertices", {{"a", "b"}}}};
  auto w = io::partial_from_json(v, phi.ambient);
  CHECK(w.map == phi.map);
  json nowhere = {{"domain", {"1:e"}}, {"vertices", {{"a", "a"}, {"b", "a"}}}};
  CHECK_THROWS_AS(io::partial_from_json(nowhere, phi.ambient), io::InputError);

  auto s = fx::square_side_shift();
  io::Instance inst{s.ambient, {s}};
  auto ij = to_json(inst);
  auto ib = io::instance_from_json(json::parse(ij.dump()));
  CHECK(*ib.Y == *s.ambient);
  REQUIRE(ib.O.size() == 1);
  CHECK(validate_partial_local_isometry(ib.O[0]).empty());
  CHECK(to_json(ib) == ij);
}

TEST_CASE("gos.v1 round trip") {
  std::vector<GraphOfSpaces> gs = {fx::square_tree(), fx::cycle_of_edges(3), fx::remote_osculation_circle(),
                                   fx::point_circle()};
  for (std::uint64_t s = 0; s < 10; ++s) gs.push_back(fx::random_gos(s, 3, 4));
  for (const auto& G : gs) {
    auto j = to_json(G);
    auto back = io::gos_from_json(json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(check_gos(back).empty() == check_gos(G).empty());
    CHECK(*assemble(back).complex == *assemble(G).complex);
  }
  auto j = to_json(fx::square_tree());
  j["graph"]["edges"][0]["ends"][0] = "nowhere";
  CHECK_THROWS_AS(io::gos_from_json(j), io::InputError);
}

TEST_CASE("quotient.v1 and product.v1") {
  auto q = *make_quotient(2, 3, {{1, 0, 2}, {1, 2, 0}});
  auto j = to_json(q);
  auto back = io::quotient_from_json(json::parse(j.dump()));
  CHECK(back.gens == q.gens);
  CHECK(back.order() == 6);
  CHECK(to_json(back) == j);
  CHECK_THROWS_AS(io::quotient_from_json({{"rank", 1}, {"degree", 2}, {"gens", {{0, 0}}}}), io::InputError);
  CHECK_THROWS_AS(io::quotient_from_json({{"rank", 2}, {"degree", 2}, {"gens", {{1, 0}}}}), io::InputError);

  json pj = {{"schema", "product.v1"}, {"rank", 2}, {"products", {{"1", {"a"}, "b"}, {"ab", {"aa", "b"}, "A", {"ba"}, "1"}}}};
  auto s = io::products_from_json(pj);
  REQUIRE(s.products.size() == 2);
  CHECK(s.products[1].words.size() == 3);
  CHECK(member(s.products[1].subgroups[0], parse_word("aab")));
  auto again = io::products_from_json(json::parse(to_json(s).dump()));
  CHECK(to_json(again) == to_json(s));
  for (std::size_t k = 0; k < 2; ++k) CHECK(product_image(q, again.products[k]) == product_image(q, s.products[k]));
  CHECK_THROWS_AS(io::products_from_json({{"rank", 1}, {"products", {{"b"}}}}), io::InputError);
  CHECK_THROWS_AS(io::products_from_json({{"rank", 1}, {"products", {{"a", {"a"}}}}}), io::InputError);
  CHECK_THROWS_AS(io::products_from_json({{"rank", 1}, {"products", {{"a?"}}}}), io::InputError);
}

TEST_CASE("specialness.v1") {
  auto r = is_special(*fx::mobius_square());
  auto j = to_json(r);
  CHECK(j["schema"] == "specialness.v1");
  CHECK(j["special"] == false);
  bool one_sided = false;
  for (const auto& h : j["hyperplanes"]) one_sided = one_sided || h["one_sided"].get<bool>();
  CHECK(one_sided);
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("certificate.v1 round trip and replay") {
  auto phi = fx::square_side_shift();
  auto out = hrushovski(phi.ambient, {phi}, Target::special, {});
  REQUIRE(out.certificate);
  const auto& c = *out.certificate;
  auto j = to_json(c);
  auto back = io::certificate_from_json(json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(*back.R == *c.R);
  CHECK(back.iota == c.iota);
  // the ledger is recomputable from the parsed fields alone
  CHECK(certify(back.Y, back.O, back.R, back.iota, back.Phi, back.target).entries == c.ledger.entries);
  auto broken = j;
  broken["Phi"] = json::array();
  CHECK_THROWS_AS(io::certificate_from_json(broken), io::InputError);
}

TEST_CASE("DOT exports parse") {
  for (const auto& X : sample_complexes()) {
    auto d = parse_dot(dot::skeleton(*X));
    CHECK_MESSAGE(d.ok, d.error);
    CHECK(d.nodes == X->count(0));
    CHECK(d.edges == X->count(1));
    if (!validate(*X).ok()) continue;
    for (int v = 0; v < X->count(0); ++v) {
      auto L = link(*X, {0, v});
      auto dl = parse_dot(dot::link(L));
      CHECK_MESSAGE(dl.ok, dl.error);
      CHECK(dl.edges == static_cast<int>(L.edges.size()));
    }
    for (const auto& H : hyperplanes(*X)) {
      auto dc = parse_dot(dot::carrier(*X, H));
      CHECK_MESSAGE(dc.ok, dc.error);
      CHECK(dc.edges == H.carrier.count(1));
    }
  }
  auto G = fx::cycle_of_edges(3);
  auto dg = parse_dot(dot::graph_of_spaces(G));
  CHECK(dg.ok);
  CHECK(dg.edges == 3);
  auto T = assemble(G);
  auto dh = parse_dot(dot::horizontal_graph(T, horizontal_graph(T, 0)));
  CHECK_MESSAGE(dh.ok, dh.error);
  CHECK(parse_dot(dot::skeleton(*fx::edge_ab(), "name with \"quotes\"")).ok);
}
