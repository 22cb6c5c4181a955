#include "cubical/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cubical {

const char* target_name(Target t) { return t == Target::npc ? "npc" : "special"; }

Target parse_target(const std::string& s) {
  if (s == "npc") return Target::npc;
  if (s == "special") return Target::special;
  throw std::invalid_argument("unknown target '" + s + "' (expected npc or special)");
}

std::optional<std::string> generator_constraint_violation(const FiniteQuotient& phi) {
  std::map<int, std::string> seen;  // element -> generator or inverse it is the image of
  for (int j = 0; j < phi.rank; ++j) {
    std::string g = "g" + std::to_string(j + 1);
    int x = phi.eval({j + 1}), xi = phi.eval({-(j + 1)});
    if (x == 0) return "phi(" + g + ") is the identity";
    if (x == xi) return "phi(" + g + ") is an involution";
    for (const auto& [e, name] : {std::make_pair(x, g), std::make_pair(xi, g + "^-1")}) {
      auto [it, fresh] = seen.emplace(e, name);
      if (!fresh) return "phi(" + it->second + ") = phi(" + name + ")";
    }
  }
  return std::nullopt;
}

namespace {

void check_realization(const GraphOfSpaces& G, int rank) {
  if (G.graph.vertices.size() != 1 || G.vertex_spaces.size() != 1)
    throw std::invalid_argument("induced_cover: realization must have exactly one vertex");
  if (static_cast<int>(G.graph.edges.size()) != rank)
    throw std::invalid_argument("induced_cover: quotient rank " + std::to_string(rank) + " but " +
                                std::to_string(G.graph.edges.size()) + " partial maps");
}

Sym drop_last(const Sym& t) {
  int n = t.n - 1;
  if (n < 0 || t.perm[n] != n || t.sign(n) != 1) throw std::invalid_argument("descend: interval coordinate moved");
  Sym s = Sym::identity(n);
  for (int i = 0; i < n; ++i) s.perm[i] = t.perm[i];
  s.flips = static_cast<std::uint8_t>(t.flips & ((1u << n) - 1));
  return s;
}

std::string cell_name(const CubeComplex& X, int d, int i) { return std::to_string(d) + ":" + X.id(d, i); }

}  // namespace

CoverSpec induced_cover(const GraphOfSpaces& realization, const FiniteQuotient& phi, bool enforce_constraints) {
  check_realization(realization, phi.rank);
  if (enforce_constraints)
    if (auto v = generator_constraint_violation(phi)) throw std::invalid_argument("induced_cover: " + *v);
  CoverSpec C;
  C.realization = realization;
  C.base = assemble(realization);
  C.phi = phi;
  int n = phi.rank;
  for (int q = 0; q < phi.order(); ++q) {
    C.gos.graph.add_vertex("q" + std::to_string(q));
    C.gos.vertex_spaces.push_back(realization.vertex_spaces[0]);
  }
  for (int q = 0; q < phi.order(); ++q)
    for (int j = 0; j < n; ++j) {
      const EdgeSpace& E = realization.edge_spaces[j];
      C.gos.graph.add_edge("q" + std::to_string(q) + "." + realization.graph.edges[j].id, phi.right[j][q], q);
      C.gos.edge_spaces.push_back(E);
    }
  C.total = assemble(C.gos);
  const CubeComplex& X = *C.total.complex;
  C.projection = CubicalMap(C.total.complex, C.base.complex);
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const Provenance& p = C.total.provenance[d][i];
      int target = p.vertical ? C.base.vertical_cell[0][d][p.source.index]
                              : C.base.thick_cell[p.node % n][d - 1][p.source.index];
      C.projection.set(d, i, target, Sym::identity(d));
    }
  return C;
}

Verdict check_covering(const CoverSpec& cover) {
  const CubicalMap& f = cover.projection;
  if (auto issues = check_map(f); !issues.empty())
    return {false, issues[0].cell, "projection is not a cubical map: " + issues[0].message, {}};
  Verdict v = is_immersion(f);
  if (!v.ok) return v;
  const CubeComplex& X = *f.domain();
  const CubeComplex& B = *f.codomain();
  Incidence inX(X), inB(B);
  for (int x = 0; x < X.count(0); ++x) {
    Link a = link(X, inX, {0, x}), b = link(B, inB, {0, f.at(0, x).cell});
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
        a.triangles.size() != b.triangles.size())
      return {false, X.id(0, x), "link is not mapped onto the link below", {}};
  }
  // surjective on 0-cubes
  std::vector<char> hit(B.count(0), 0);
  for (int x = 0; x < X.count(0); ++x) hit[f.at(0, x).cell] = 1;
  for (int y = 0; y < B.count(0); ++y)
    if (!hit[y]) return {false, B.id(0, y), "0-cube not covered", {}};
  return {};
}

CubicalMap induced_automorphism(const CoverSpec& cover, int j) {
  if (j < 0 || j >= cover.rank()) throw std::out_of_range("induced_automorphism: no such generator");
  const FiniteQuotient& phi = cover.phi;
  int g = phi.eval({j + 1});
  int n = cover.rank();
  const TotalSpace& T = cover.total;
  CubicalMap m(T.complex, T.complex);
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < T.complex->count(d); ++i) {
      const Provenance& p = T.provenance[d][i];
      int target;
      if (p.vertical) {
        target = T.vertical_cell[phi.mul(g, p.node)][d][p.source.index];
      } else {
        int q = p.node / n, k = p.node % n;
        target = T.thick_cell[cover.edge_of(phi.mul(g, q), k)][d - 1][p.source.index];
      }
      m.set(d, i, target, Sym::identity(d));
    }
  return m;
}

Descent descend(const TotalSpace& T, const HorizontalQuotient& Q, const CubicalMap& Phi) {
  if (!Q.strict || !Q.complex) throw std::invalid_argument("descend: horizontal quotient is not strict");
  const CubeComplex& X = *T.complex;
  const CubeComplex& R = *Q.complex;
  // Phi restricted to the coordinates the quotient keeps
  auto image_of_cell = [&](int d, int i) -> std::pair<int, Sym> {
    const Image& im = Phi.at(d, i);
    bool v0 = T.provenance[d][i].vertical, v1 = T.provenance[d][im.cell].vertical;
    if (v0 != v1) throw std::invalid_argument("descend: map does not preserve the vertical/thick fibres");
    if (v0) return {d, im.sym};
    return {d - 1, drop_last(im.sym)};
  };
  Descent out;
  out.map = CubicalMap(Q.complex, Q.complex);
  for (int d = 0; d <= kMaxDim; ++d) {
    std::vector<char> done(R.count(d), 0);
    for (int x = 0; x < X.count(d); ++x) {
      if (!T.provenance[d][x].vertical) continue;
      const QuotientImage& qx = Q.q[d][x];
      if (done[qx.cell.index]) continue;
      done[qx.cell.index] = 1;
      Sym t = image_of_cell(d, x).second;
      const QuotientImage& qy = Q.q[d][Phi.at(d, x).cell];
      out.map.set(d, qx.cell.index, qy.cell.index, compose(qy.sym, compose(t, qx.sym.inverse())));
    }
    for (int y = 0; y < R.count(d); ++y)
      if (!done[y]) throw std::invalid_argument("descend: quotient cell " + R.id(d, y) + " has no vertical preimage");
  }
  for (int d = 0; d <= kMaxDim; ++d)
    for (int i = 0; i < X.count(d); ++i) {
      const QuotientImage& qc = Q.q[d][i];
      Sym t = image_of_cell(d, i).second;
      const QuotientImage& qc2 = Q.q[d][Phi.at(d, i).cell];
      Image lhs{qc2.cell.index, compose(qc2.sym, t)};
      const Image& e = out.map.at(qc.cell.dim, qc.cell.index);
      Image rhs{e.cell, compose(e.sym, qc.sym)};
      if (qc2.cell.dim != qc.cell.dim || !(lhs == rhs)) out.mismatches.push_back(cell_name(X, d, i));
    }
  return out;
}

bool Ledger::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.ok; });
}

const LedgerEntry* Ledger::find(const std::string& check) const {
  for (const auto& e : entries)
    if (e.check == check) return &e;
  return nullptr;
}

void Ledger::add(std::string check, bool ok, std::string detail) {
  entries.push_back({std::move(check), ok, std::move(detail)});
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string verdict_detail(const Verdict& v) {
  if (v.ok) return {};
  std::string s = v.reason + " at " + v.center;
  if (!v.witness.empty()) s += " [" + join(v.witness) + "]";
  return s;
}

}  // namespace

Ledger certify(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O, const ComplexPtr& R,
               const CubicalMap& iota, const std::vector<CubicalMap>& Phi, Target target) {
  Ledger L;
  auto rep = validate(*R);
  L.add("R.valid", rep.ok(), rep.ok() ? "" : rep.str());
  L.add("dimension", R->dim() == Y->dim(),
        "dim R = " + std::to_string(R->dim()) + ", dim Y = " + std::to_string(Y->dim()));
  auto npc = is_npc(*R);
  L.add("npc", npc.ok, npc.ok ? "" : npc.kind + " at " + cell_name(*R, npc.center.dim, npc.center.index));
  auto corners = detect_empty_k_corners(*R);
  L.add("npc.k-corners", corners.empty() == npc.ok,
        std::to_string(corners.size()) + " empty k-corners");
  if (target == Target::special) {
    auto sp = is_special(*R);
    std::vector<std::string> bad;
    int one_sided = 0;
    for (const auto& h : sp.hyperplanes) {
      if (h.one_sided) ++one_sided;
      if (h.one_sided || h.self_crossing || h.self_osculating) bad.push_back("h" + std::to_string(h.id));
    }
    for (const auto& io : sp.inter) bad.push_back("h" + std::to_string(io.h1) + "~h" + std::to_string(io.h2));
    L.add("special", sp.special, sp.special ? "" : (sp.precondition.empty() ? join(bad) : sp.precondition));
    L.add("two-sided", one_sided == 0, std::to_string(one_sided) + " one-sided hyperplanes");
  }
  bool maps_ok = iota.domain() && iota.codomain() && (iota.domain() == Y || *iota.domain() == *Y) &&
                 (iota.codomain() == R || *iota.codomain() == *R) && check_map(iota).empty();
  L.add("iota.map", maps_ok);
  L.add("iota.embedding", maps_ok && is_injective(iota));
  if (maps_ok) {
    Verdict lc = is_locally_convex(*R, image_of(iota));
    L.add("iota.locally-convex", lc.ok, verdict_detail(lc));
  } else {
    L.add("iota.locally-convex", false, "no valid embedding");
  }
  if (Phi.size() != O.size()) {
    L.add("Phi.count", false, std::to_string(Phi.size()) + " automorphisms for " + std::to_string(O.size()) + " maps");
    return L;
  }
  for (std::size_t j = 0; j < O.size(); ++j) {
    std::string g = "Phi.g" + std::to_string(j + 1);
    L.add(g + ".automorphism", is_automorphism(Phi[j]) && (Phi[j].domain() == R || *Phi[j].domain() == *R));
    if (!maps_ok) {
      L.add(g + ".extends", false, "no valid embedding");
      continue;
    }
    const CubeComplex& D = *O[j].map.domain();
    std::vector<std::string> bad;
    int checked = 0;
    for (int d = 0; d <= std::min(D.dim(), 2); ++d)
      for (int c = 0; c < D.count(d); ++c) {
        int y = Y->find(d, D.id(d, c));
        const Image& a = iota.at(d, y);
        const Image& b = Phi[j].at(d, a.cell);
        Image lhs{b.cell, compose(b.sym, a.sym)};
        const Image& p = O[j].map.at(d, c);
        const Image& r = iota.at(d, p.cell);
        Image rhs{r.cell, compose(r.sym, p.sym)};
        ++checked;
        if (!(lhs == rhs)) bad.push_back(cell_name(D, d, c));
      }
    L.add(g + ".extends", bad.empty(),
          bad.empty() ? std::to_string(checked) + " cells" : "differs on " + join(bad));
  }
  return L;
}

CoverVerification verify_cover(const CoverSpec& cover, const std::vector<PartialLocalIsometry>& O, Target target) {
  CoverVerification V;
  Ledger& L = V.ledger;
  Verdict cv = check_covering(cover);
  L.add("cover.covering", cv.ok, verdict_detail(cv));
  for (int j = 0; j < cover.rank(); ++j) {
    CubicalMap deck = induced_automorphism(cover, j);
    bool ok = is_automorphism(deck) && compose(deck, cover.projection) == cover.projection;
    L.add("cover.deck.g" + std::to_string(j + 1), ok);
  }
  if (target == Target::special) {
    auto c = is_controlled(cover.realization);
    std::string detail;
    if (!c.ok && !c.issues.empty()) detail = c.issues[0].kind + " on " + c.issues[0].edge;
    L.add("realization.controlled", c.ok, detail);
  }
  auto strict = is_strict(cover.total);
  L.add("cover.strict", strict.ok, strict.ok ? "" : "identified: " + join(strict.witness));
  if (!strict.ok) return V;
  V.quotient = horizontal_quotient(cover.total);
  const HorizontalQuotient& Q = *V.quotient;
  if (!Q.strict) {
    L.add("cover.quotient", false, Q.reason);
    return V;
  }
  V.iota = Q.vertex_maps[0];
  for (int j = 0; j < cover.rank(); ++j) {
    Descent D = descend(cover.total, Q, induced_automorphism(cover, j));
    L.add("cover.descent.g" + std::to_string(j + 1), D.exact(),
          D.exact() ? "" : std::to_string(D.mismatches.size()) + " cells, first " + D.mismatches[0]);
    V.Phi.push_back(D.map);
  }
  Ledger C = certify(cover.realization.vertex_spaces[0], O, Q.complex, V.iota, V.Phi, target);
  L.entries.insert(L.entries.end(), C.entries.begin(), C.entries.end());
  return V;
}

namespace {

std::string describe(const FiniteQuotient& q) {
  return "degree " + std::to_string(q.degree) + ", order " + std::to_string(q.order());
}

}  // namespace

CoverSearch search_cover(const GraphOfSpaces& realization, const std::vector<PartialLocalIsometry>& O, Target target,
                         const SearchBudget& budget) {
  int n = static_cast<int>(realization.graph.edges.size());
  check_realization(realization, n);
  if (static_cast<int>(O.size()) != n) throw std::invalid_argument("search_cover: one partial map per loop required");
  auto problems = check_gos(realization);
  if (!problems.empty()) throw std::invalid_argument("search_cover: invalid realization: " + join(problems));
  if (target == Target::special) {
    auto c = is_controlled(realization);
    if (!c.ok) {
      std::string why = c.issues.empty() ? "" : ": " + c.issues[0].kind + " on " + c.issues[0].edge;
      throw std::invalid_argument("search_cover: realization is not controlled" + why);
    }
  }
  CoverSearch out;
  TotalSpace base = assemble(realization);
  std::vector<CosetProduct> products;
  for (auto& sp : strictness_products(base)) products.push_back(std::move(sp.product));
  out.trace.push_back("stage 1: " + std::to_string(products.size()) + " strictness products");
  auto constraints = [](const FiniteQuotient& q) { return !generator_constraint_violation(q); };
  auto s1 = find_separating_quotient(n, products, budget, constraints);
  for (const auto& t : s1.trace) out.trace.push_back("  " + t);
  if (!s1.quotient) {
    out.trace.push_back("exhausted in stage 1 after " + std::to_string(s1.candidates) + " candidates");
    return out;
  }
  const FiniteQuotient phi = *s1.quotient;
  out.trace.push_back("stage 1: " + s1.source + " (" + describe(phi) + ")");

  auto attempt = [&](const FiniteQuotient& q) -> std::optional<std::pair<CoverSpec, CoverVerification>> {
    CoverSpec C = induced_cover(realization, q);
    CoverVerification V = verify_cover(C, O, target);
    if (!V.ok()) return std::nullopt;
    return std::make_pair(std::move(C), std::move(V));
  };

  {
    CoverSpec C = induced_cover(realization, phi);
    CoverVerification V = verify_cover(C, O, target);
    if (V.ok()) {
      out.trace.push_back("stage 2: cover verified");
      out.cover = std::move(C);
      out.verification = std::move(V);
      return out;
    }
    std::vector<std::string> failed;
    for (const auto& e : V.ledger.entries)
      if (!e.ok) failed.push_back(e.check);
    out.trace.push_back("stage 2: verification failed (" + join(failed) + ")");
  }

  // stage 3: refine by intersecting with later catalog quotients
  auto refine = [&](const FiniteQuotient& psi) {
    try {
      FiniteQuotient q = intersect(phi, psi, budget.max_order);
      return attempt(q).has_value();
    } catch (const std::length_error&) {
      return false;
    }
  };
  auto s3 = find_separating_quotient(n, {}, budget, refine);
  for (const auto& t : s3.trace) out.trace.push_back("  " + t);
  if (!s3.quotient) {
    out.trace.push_back("exhausted in stage 3 after " + std::to_string(s3.candidates) + " candidates");
    return out;
  }
  FiniteQuotient q = intersect(phi, *s3.quotient, budget.max_order);
  auto r = attempt(q);
  out.trace.push_back("stage 3: intersected with " + s3.source + " (" + describe(q) + ")");
  out.cover = std::move(r->first);
  out.verification = std::move(r->second);
  return out;
}

std::vector<int> restriction_parents(const std::vector<PartialLocalIsometry>& O) {
  auto restricts = [](const PartialLocalIsometry& a, const PartialLocalIsometry& b) {
    // a is a restriction of b
    if (a.ambient != b.ambient && !(*a.ambient == *b.ambient)) return false;
    const CubeComplex& Da = *a.map.domain();
    const CubeComplex& Db = *b.map.domain();
    for (int d = 0; d <= kMaxDim; ++d)
      for (int c = 0; c < Da.count(d); ++c) {
        int k = Db.find(d, Da.id(d, c));
        if (k < 0 || !(a.map.at(d, c) == b.map.at(d, k))) return false;
      }
    return true;
  };
  int n = static_cast<int>(O.size());
  std::vector<int> parent(n, -1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n && parent[j] < 0; ++k) {
      if (k == j || !restricts(O[j], O[k])) continue;
      bool equal = restricts(O[k], O[j]);
      if (equal && k > j) continue;
      parent[j] = k;
    }
  // follow chains to a map that is kept
  for (int j = 0; j < n; ++j)
    while (parent[j] >= 0 && parent[parent[j]] >= 0) parent[j] = parent[parent[j]];
  return parent;
}

HrushovskiOutcome hrushovski(const ComplexPtr& Y, const std::vector<PartialLocalIsometry>& O, Target target,
                             const PipelineBudget& budget) {
  if (!Y) throw std::invalid_argument("hrushovski: no complex");
  if (Y->dim() > 2) throw std::invalid_argument("hrushovski: dim(Y) must be at most 2");
  if (auto rep = validate(*Y); !rep.ok()) throw std::invalid_argument("hrushovski: invalid complex: " + rep.str());
  for (std::size_t j = 0; j < O.size(); ++j) {
    auto problems = validate_partial_local_isometry(O[j]);
    if (!problems.empty())
      throw std::invalid_argument("hrushovski: map g" + std::to_string(j + 1) + ": " + join(problems));
  }
  if (target == Target::special) {
    auto sp = is_special(*Y);
    if (!sp.special) throw std::invalid_argument("hrushovski: Y is not special");
  }
  std::vector<int> parent(O.size(), -1);
  if (budget.prune_restrictions) parent = restriction_parents(O);
  std::vector<PartialLocalIsometry> kept;
  std::vector<int> kept_index(O.size(), -1);
  for (std::size_t j = 0; j < O.size(); ++j)
    if (parent[j] < 0) {
      kept_index[j] = static_cast<int>(kept.size());
      kept.push_back(O[j]);
    }
  HrushovskiOutcome out;
  if (kept.size() < O.size())
    out.trace.push_back("pruned " + std::to_string(O.size() - kept.size()) + " restricted maps");
  GraphOfSpaces G = realization(Y, kept);
  CoverSearch S = search_cover(G, kept, target, budget.search);
  out.trace.insert(out.trace.end(), S.trace.begin(), S.trace.end());
  if (!S.cover) return out;
  HrushovskiCertificate c;
  c.Y = Y;
  c.O = O;
  c.target = target;
  c.R = S.verification->quotient->complex;
  c.iota = S.verification->iota;
  for (std::size_t j = 0; j < O.size(); ++j)
    c.Phi.push_back(S.verification->Phi[kept_index[parent[j] < 0 ? j : parent[j]]]);
  c.ledger = certify(Y, O, c.R, c.iota, c.Phi, target);
  c.cover_ledger = S.verification->ledger;
  c.quotient_generators = S.cover->phi.gens;
  c.quotient_degree = S.cover->phi.degree;
  c.quotient_order = S.cover->phi.order();
  c.pruned_to = parent;
  out.certificate = std::move(c);
  return out;
}

}  // namespace cubical
