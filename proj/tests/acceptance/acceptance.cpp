// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cubical/fixtures.hpp"
#include "cubical/pipeline.hpp"
#include "word_oracles.hpp"

using namespace cubical;
namespace fx = cubical::fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

struct Accepted {
  std::string name;
  fx::Realization inst;
  Target target;
  HrushovskiCertificate cert;
};

// Certificates produced by criteria 6 and 7, re-examined by criterion 8.
std::vector<Accepted> accepted;

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2f", x);
  return b;
}

// ---- criterion 1 -----------------------------------------------------------

Outcome pathology_catalog() {
  Outcome o;
  struct Case {
    std::string name;
    ComplexPtr X;
    std::string want;
  };
  std::vector<Case> cases = {{"self-crossing", fx::self_crossing_square(), "self_crossing"},
                             {"one-sided", fx::mobius_square(), "one_sided"},
                             {"self-osculation", fx::self_osculating_square(), "self_osculating"},
                             {"inter-osculation", fx::inter_osculating_strip(), "inter_osculating"}};
  for (const auto& c : cases) {
    auto r = is_special(*c.X);
    o.expect(validate(*c.X).ok() && r.npc, c.name + ": fixture must be a valid NPC complex");
    std::set<std::string> found;
    for (const auto& h : r.hyperplanes) {
      if (h.one_sided) found.insert("one_sided");
      if (h.self_crossing) found.insert("self_crossing");
      if (h.self_osculating) found.insert("self_osculating");
    }
    if (!r.inter.empty()) found.insert("inter_osculating");
    o.expect(found == std::set<std::string>{c.want}, c.name + ": flagged set differs from {" + c.want + "}");
    o.expect(!r.special, c.name + ": reported special");
  }
  o.summary = "4 fixtures, each flagged with exactly its pathology";
  return o;
}

// ---- criterion 2 -----------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  int n = 0, npc = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed, ++n) {
    auto X = fx::random_square_complex(seed, 1 + static_cast<int>(seed % 12));
    std::string tag = "seed " + std::to_string(seed);
    o.expect(X->count(2) <= 12 && validate(*X).ok(), tag + ": generator out of range");
    auto M = build_midcube_complex(*X);
    auto hs = hyperplanes(*X);
    auto mv = midcube_verdicts(*X, M);
    auto rep = is_special(*X);
    o.expect(static_cast<int>(hs.size()) == M.components, tag + ": hyperplane count");
    for (const auto& H : hs) {
      const auto& f = rep.hyperplanes[H.id];
      o.expect(f.one_sided == static_cast<bool>(mv.one_sided[H.component]), tag + ": one-sidedness");
      o.expect(f.self_crossing == static_cast<bool>(mv.self_crossing[H.component]), tag + ": self-crossing");
      o.expect(f.self_osculating == static_cast<bool>(mv.self_osculating[H.component]), tag + ": self-osculation");
    }
    std::set<std::pair<int, int>> inter;
    for (const auto& io : rep.inter) {
      int a = hs[io.h1].component, b = hs[io.h2].component;
      inter.insert({std::min(a, b), std::max(a, b)});
    }
    o.expect(inter == std::set<std::pair<int, int>>(mv.inter.begin(), mv.inter.end()), tag + ": inter-osculation");
    bool is = is_npc(*X).ok;
    npc += is;
    o.expect(detect_empty_k_corners(*X).empty() == is, tag + ": k-corners vs is_npc");
  }
  o.summary = std::to_string(n) + " complexes (" + std::to_string(npc) + " NPC), both routes agree";
  return o;
}

// ---- criterion 3 -----------------------------------------------------------

Outcome tree_laws() {
  Outcome o;
  int trees = 0, controlled_special = 0;
  for (std::uint64_t seed = 1; trees < 150; ++seed) {
    auto G = fx::random_tree_gos(seed, 2 + static_cast<int>(seed % 4));
    std::string tag = "seed " + std::to_string(seed);
    // preconditions, checked rather than assumed
    bool pre = check_gos(G).empty() && G.graph.edges.size() + 1 == G.graph.vertices.size();
    for (const auto& X : G.vertex_spaces) pre = pre && is_npc(*X).ok;
    for (const auto& E : G.edge_spaces)
      for (const auto* t : {&E.tau1, &E.tau2}) pre = pre && is_injective(*t) && is_local_isometry(*t).ok;
    o.expect(pre, tag + ": generated tree violates the preconditions");
    if (!pre) continue;
    ++trees;
    auto T = assemble(G);
    auto Q = horizontal_quotient(T);
    o.expect(Q.strict, tag + ": quotient not strict");
    if (!Q.strict) continue;
    o.expect(is_npc(*Q.complex).ok, tag + ": quotient not NPC");
    if (is_controlled(G).ok && is_special(*T.complex).special) {
      ++controlled_special;
      o.expect(is_special(*Q.complex).special, tag + ": quotient of a controlled special tree is not special");
    }
  }
  o.expect(controlled_special > 0, "no controlled special trees generated");
  o.summary = std::to_string(trees) + " trees strict and NPC; " + std::to_string(controlled_special) +
              " controlled special with special quotients";
  return o;
}

// ---- criterion 4 -----------------------------------------------------------

struct SepInstance {
  std::string name;
  int rank;
  std::vector<std::string> words;                  // m + 1
  std::vector<std::vector<std::string>> subgroups;  // m
};

// Identity not among g0 h1 g1 ... with each h a product of <= L generators.
bool oracle_excludes_identity(const SepInstance& s, int L) {
  std::vector<std::set<Word>> H;
  for (const auto& gens : s.subgroups) {
    std::vector<Word> g;
    for (const auto& w : gens) g.push_back(parse_word(w));
    H.push_back(oracle::products_upto(g, L));
  }
  std::set<Word> acc{oracle::free_reduce(parse_word(s.words[0]))};
  for (std::size_t k = 0; k < H.size(); ++k) {
    std::set<Word> next;
    Word g = parse_word(s.words[k + 1]);
    for (const auto& a : acc)
      for (const auto& h : H[k]) {
        Word x = a;
        x.insert(x.end(), h.begin(), h.end());
        x.insert(x.end(), g.begin(), g.end());
        next.insert(oracle::free_reduce(x));
      }
    acc.swap(next);
  }
  return !acc.count(Word{});
}

// Identity not in the image of the product, computed from permutations.
bool oracle_separates(const SepInstance& s, const FiniteQuotient& q) {
  auto eval = [&](const std::string& w) { return oracle::eval_perm(q.gens, q.degree, parse_word(w)); };
  auto mul = [](const Perm& p, const Perm& r) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = r[p[i]];
    return out;
  };
  Perm id(q.degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> acc{eval(s.words[0])};
  for (std::size_t k = 0; k < s.subgroups.size(); ++k) {
    std::set<Perm> H{id};
    std::vector<Perm> gens;
    for (const auto& w : s.subgroups[k]) gens.push_back(eval(w));
    for (std::vector<Perm> frontier{id}; !frontier.empty();) {
      std::vector<Perm> next;
      for (const auto& p : frontier)
        for (const auto& g : gens)
          if (H.insert(mul(p, g)).second) next.push_back(mul(p, g));
      frontier.swap(next);
    }
    std::set<Perm> next;
    Perm g = eval(s.words[k + 1]);
    for (const auto& a : acc)
      for (const auto& h : H) next.insert(mul(mul(a, h), g));
    acc.swap(next);
  }
  return !acc.count(id);
}

Outcome separation_suite() {
  Outcome o;
  std::vector<SepInstance> suite = {
      {"hall", 2, {"1", "b"}, {{"a"}}},
      {"<a> ba <b>", 2, {"1", "ba", "1"}, {{"a"}, {"b"}}},
      {"<aa> A", 1, {"1", "A"}, {{"aa"}}},
      {"<ab> A", 2, {"1", "A"}, {{"ab"}}},
      {"<a, baB> B", 2, {"1", "B"}, {{"a", "baB"}}},
      {"<a> c <b>", 3, {"1", "c", "1"}, {{"a"}, {"b"}}},
      {"<ab, ba> A", 2, {"1", "A"}, {{"ab", "ba"}}},
      {"<aaa> b <bb> a", 2, {"1", "b", "a"}, {{"aaa"}, {"bb"}}},
      {"<abAB> A", 2, {"1", "A"}, {{"abAB"}}},
      {"<a> b <a> b <a>", 2, {"1", "b", "b", "1"}, {{"a"}, {"a"}, {"a"}}},
      {"<b, c> a <c>", 3, {"1", "a", "1"}, {{"b", "c"}, {"c"}}},
      {"<aa, bb> BA", 2, {"1", "BA"}, {{"aa", "bb"}}},
  };
  SearchBudget b;
  b.max_degree = 8;
  b.max_seconds = 10;
  int separated = 0;
  int hall_degree = -1;
  for (const auto& s : suite) {
    o.expect(oracle_excludes_identity(s, 4), s.name + ": identity found by the normal-form oracle");
    CosetProduct P;
    for (const auto& w : s.words) P.words.push_back(parse_word(w));
    for (const auto& gens : s.subgroups) {
      std::vector<Word> g;
      for (const auto& w : gens) g.push_back(parse_word(w));
      P.subgroups.push_back(stallings(s.rank, g));
    }
    auto r = find_separating_quotient(s.rank, {P}, b);
    o.expect(r.quotient.has_value(), s.name + ": not separated within degree 8");
    if (!r.quotient) continue;
    o.expect(r.quotient->degree <= 8, s.name + ": degree above 8");
    o.expect(separates(*r.quotient, P), s.name + ": separates() is false");
    o.expect(oracle_separates(s, *r.quotient), s.name + ": permutation oracle finds the identity");
    if (s.name == "hall") hall_degree = r.quotient->degree;
    ++separated;
  }
  o.expect(hall_degree == 2, "Hall instance not separated at degree 2");
  o.summary = std::to_string(separated) + "/" + std::to_string(suite.size()) +
              " products separated, Hall at degree " + std::to_string(hall_degree);
  return o;
}

// ---- criterion 5 -----------------------------------------------------------

Outcome double_coset_law() {
  Outcome o;
  int realizations = 0;
  long walks = 0, samples = 0;
  for (std::uint64_t seed = 1; realizations < 60; ++seed) {
    auto R = seed % 2 ? fx::random_grid_realization(seed, 1 + static_cast<int>(seed % 3))
                      : fx::random_cycle_realization(seed, 3 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3));
    auto T = assemble(realization(R.Y, R.O));
    ++realizations;
    std::string tag = "seed " + std::to_string(seed);
    std::map<int, HorizontalGraph> hg;
    std::mt19937_64 rng(seed);
    for (const auto& p : strictness_products(T)) {
      if (!hg.count(p.ci)) hg.emplace(p.ci, horizontal_graph(T, p.ci));
      const HorizontalGraph& H = hg.at(p.ci);
      const auto& Ki = p.product.subgroups[0];
      const auto& Kj = p.product.subgroups[1];
      const Word& w = p.product.words[1];
      std::vector<std::pair<int, Word>> frontier{{p.ci, {}}};
      for (int len = 0; len <= 5 && !frontier.empty(); ++len) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [v, lab] : frontier) {
          if (v == p.cj) {
            ++walks;
            o.expect(in_double_coset(Ki, w, Kj, lab), tag + ": walk label outside K_i w K_j");
          }
          if (len == 5) continue;
          for (const auto& e : H.edges) {
            if (e.from == v) {
              Word l = lab;
              l.push_back(e.graph_edge + 1);
              next.push_back({e.to, l});
            }
            if (e.to == v) {
              Word l = lab;
              l.push_back(-(e.graph_edge + 1));
              next.push_back({e.from, l});
            }
          }
        }
        frontier.swap(next);
        if (frontier.size() > 20000) break;
      }
      // sampled elements of K_i w K_j label walks ci -> cj
      std::map<int, int> local;
      for (int v : H.vertices) local.emplace(v, static_cast<int>(local.size()));
      std::vector<std::array<int, 3>> edges;
      for (const auto& e : H.edges) edges.push_back({local.at(e.from), local.at(e.to), e.graph_edge});
      auto F = oracle::naive_fold(static_cast<int>(local.size()), edges);
      auto gi = subgroup_generators(Ki), gj = subgroup_generators(Kj);
      auto pick = [&](const std::vector<Word>& g) {
        Word x;
        if (g.empty()) return x;
        for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) {
          const Word& y = g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)];
          x = concat(x, std::uniform_int_distribution<int>(0, 1)(rng) ? y : inverse(y));
        }
        return x;
      };
      for (int s = 0; s < 5; ++s, ++samples) {
        Word u = concat(concat(pick(gi), w), pick(gj));
        o.expect(oracle::naive_trace(F, F.cls[local.at(p.ci)], u) == F.cls[local.at(p.cj)],
                 tag + ": sampled double-coset element labels no walk");
      }
    }
  }
  o.expect(walks > 0 && samples > 0, "no walks or samples checked");
  o.summary = std::to_string(realizations) + " realizations, " + std::to_string(walks) + " walk labels, " +
              std::to_string(samples) + " sampled elements";
  return o;
}

// ---- criteria 6 and 7 ------------------------------------------------------

// Checks that do not rely on the ledger.
void independent_certificate_checks(Outcome& o, const std::string& name, const HrushovskiCertificate& c) {
  o.expect(validate(*c.R).ok(), name + ": R invalid");
  o.expect(c.R->dim() == c.Y->dim(), name + ": dim(R) != dim(Y)");
  o.expect(is_injective(c.iota) && check_map(c.iota).empty(), name + ": iota is not an embedding");
  for (std::size_t j = 0; j < c.O.size(); ++j) {
    const auto& phi = c.O[j];
    const auto& P = c.Phi[j];
    o.expect(is_automorphism(P), name + ": Phi_" + std::to_string(j) + " is not an automorphism");
    const auto& D = *phi.map.domain();
    for (int d = 0; d <= D.dim(); ++d)
      for (int i = 0; i < D.count(d); ++i) {
        int y = c.Y->find(d, D.id(d, i));
        int lhs = P.at(d, c.iota.at(d, y).cell).cell;
        int rhs = c.iota.at(d, phi.map.at(d, i).cell).cell;
        o.expect(lhs == rhs, name + ": extension fails at " + D.id(d, i));
      }
  }
}

std::optional<HrushovskiCertificate> certify_instance(Outcome& o, const std::string& name, const fx::Realization& inst,
                                                      Target target, double limit) {
  auto t0 = std::chrono::steady_clock::now();
  PipelineBudget b;
  b.search.max_seconds = limit;
  auto h = hrushovski(inst.Y, inst.O, target, b);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < limit, name + ": took " + fmt(secs) + " s");
  o.expect(h.certificate.has_value(), name + ": no certificate");
  if (!h.certificate) return std::nullopt;
  o.expect(h.certificate->ledger.ok() && h.certificate->cover_ledger.ok(), name + ": ledger has failures");
  independent_certificate_checks(o, name, *h.certificate);
  accepted.push_back({name, inst, target, *h.certificate});
  return h.certificate;
}

Outcome npc_hrushovski() {
  Outcome o;
  auto ab = fx::edge_ab_shift();
  auto c = certify_instance(o, "edge/ab", {ab.ambient, {ab}}, Target::npc, 60);
  if (c) {
    const auto& R = *c->R;
    // a 3-cycle: 3 vertices, 3 edges, all degrees 2, connected
    std::vector<int> deg(R.count(0), 0);
    for (const auto& e : R.cells(1)) ++deg[e.corners[0]], ++deg[e.corners[1]];
    bool cycle = R.count(0) == 3 && R.count(1) == 3 && R.count(2) == 0 && components(R).size() == 1;
    for (int d : deg) cycle = cycle && d == 2;
    o.expect(cycle, "edge/ab: R is not a 3-cycle");
    o.expect(R.dim() == 1, "edge/ab: dim(R) != 1");
    const auto& P = c->Phi[0];
    CubicalMap p3 = identity_map(c->R);
    for (int k = 0; k < 3; ++k) p3 = compose(p3, P);
    bool moves = true;
    for (int v = 0; v < R.count(0); ++v) moves = moves && P.at(0, v).cell != v;
    o.expect(p3 == identity_map(c->R) && moves, "edge/ab: Phi is not a rotation of order 3");
    int a = c->iota.at(0, ab.ambient->find(0, "a")).cell, bb = c->iota.at(0, ab.ambient->find(0, "b")).cell;
    o.expect(P.at(0, a).cell == bb, "edge/ab: Phi(a) != b");
  }
  int more = 0;
  std::vector<std::pair<std::string, fx::Realization>> graphs;
  auto c4 = fx::cycle_edge_shift(4);
  graphs.push_back({"4-cycle edge shift", {c4.ambient, {c4}}});
  graphs.push_back({"random 5-cycle, 2 maps", fx::random_cycle_realization(5, 5, 2)});
  graphs.push_back({"random 6-cycle, 2 maps", fx::random_cycle_realization(6, 6, 2)});
  for (const auto& [name, inst] : graphs) {
    o.expect(inst.Y->count(0) <= 6 && inst.O.size() <= 2 && inst.Y->dim() <= 1, name + ": instance out of range");
    if (certify_instance(o, name, inst, Target::npc, 60)) ++more;
  }
  o.summary = "edge/ab gives a 3-cycle with Phi(a)=b; " + std::to_string(more) + "/3 further graph certificates";
  return o;
}

Outcome special_hrushovski() {
  Outcome o;
  auto s = fx::square_side_shift();
  std::vector<std::pair<std::string, fx::Realization>> cases = {{"special square", {s.ambient, {s}}}};
  for (std::uint64_t seed : {2, 6, 7, 8})
    cases.push_back({"grid seed " + std::to_string(seed), fx::random_grid_realization(seed, 1 + seed % 2)});
  int certified = 0;
  for (const auto& [name, inst] : cases) {
    o.expect(inst.Y->dim() == 2, name + ": not 2-dimensional");
    o.expect(is_special(*inst.Y).special, name + ": Y is not special");
    o.expect(is_controlled(realization(inst.Y, inst.O)).ok, name + ": realization is not controlled");
    auto c = certify_instance(o, name, inst, Target::special, 300);
    if (!c) continue;
    auto entry = [&](const std::string& check) {
      const auto* e = c->ledger.find(check);
      return e && e->ok;
    };
    o.expect(entry("special"), name + ": ledger lacks quotient specialness");
    o.expect(entry("iota.locally-convex"), name + ": ledger lacks local convexity");
    o.expect(entry("two-sided"), name + ": ledger lacks two-sidedness");
    for (std::size_t j = 0; j < c->O.size(); ++j)
      o.expect(entry("Phi.g" + std::to_string(j + 1) + ".extends"), name + ": ledger lacks an extension equality");
    // recomputed directly
    o.expect(is_special(*c->R).special, name + ": R is not special");
    for (const auto& H : hyperplanes(*c->R)) o.expect(H.orientation.has_value(), name + ": one-sided hyperplane in R");
    o.expect(is_locally_convex(*c->R, image_of(c->iota)).ok, name + ": iota(Y) is not locally convex");
    ++certified;
  }
  o.summary = std::to_string(certified) + "/" + std::to_string(cases.size()) +
              " controlled special 2-complexes: R special, iota(Y) locally convex, hyperplanes two-sided, "
              "extensions hold";
  return o;
}

// ---- criterion 8 -----------------------------------------------------------

Outcome descent_exactness() {
  Outcome o;
  long cells = 0;
  for (const auto& a : accepted) {
    PipelineBudget b;
    auto G = realization(a.inst.Y, a.inst.O);
    auto s = search_cover(G, a.inst.O, a.target, b.search);
    o.expect(s.cover.has_value(), a.name + ": cover not reproduced");
    if (!s.cover) continue;
    o.expect(s.cover->phi.gens == a.cert.quotient_generators, a.name + ": different quotient");
    const TotalSpace& T = s.cover->total;
    auto Q = horizontal_quotient(T);
    o.expect(Q.strict && *Q.complex == *a.cert.R, a.name + ": quotient differs from R");
    if (!Q.strict || !(*Q.complex == *a.cert.R)) continue;
    for (int j = 0; j < s.cover->rank(); ++j) {
      auto Phi = induced_automorphism(*s.cover, j);
      const auto& E = a.cert.Phi[j];
      o.expect(check_map(E).empty(), a.name + ": Phi^E is not a cubical map");
      // q(Phi(x)) == Phi^E(q(x)) for every cell, at cell and corner level
      const CubeComplex& X = *T.complex;
      for (int d = 0; d <= X.dim(); ++d)
        for (int x = 0; x < X.count(d); ++x, ++cells) {
          const auto& qx = Q.q[d][x];
          const auto& qy = Q.q[d][Phi.at(d, x).cell];
          bool same = qx.cell.dim == qy.cell.dim && qy.cell.index == E.at(qx.cell.dim, qx.cell.index).cell;
          for (int c : X.cell(d, x).corners) {
            int lhs = Q.q[0][Phi.at(0, c).cell].cell.index;
            int rhs = E.at(0, Q.q[0][c].cell.index).cell;
            same = same && lhs == rhs;
          }
          o.expect(same, a.name + ": descent square fails at " + X.id(d, x));
        }
      o.expect(descend(T, Q, Phi).exact(), a.name + ": descend() reports mismatches");
    }
  }
  o.expect(!accepted.empty(), "no accepted covers to check");
  o.summary = std::to_string(accepted.size()) + " accepted covers, " + std::to_string(cells) +
              " cells checked, zero mismatches allowed";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "pathology catalog", 1, pathology_catalog},
      {2, "oracle equivalence", 30, oracle_equivalence},
      {3, "tree laws", 60, tree_laws},
      {4, "separation suite", 10, separation_suite},
      {5, "double-coset law", 30, double_coset_law},
      {6, "end-to-end NPC extension", 240, npc_hrushovski},
      {7, "end-to-end special extension", 300, special_hrushovski},
      {8, "descent exactness", 600, descent_exactness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit) o.expect(false, "time " + fmt(secs) + " s exceeds " + fmt(c.limit) + " s");
    std::printf("criterion %d %s: %s (%s s) %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name.c_str(), fmt(secs).c_str(),
                o.summary.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    failed += !o.ok;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
