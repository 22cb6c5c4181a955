#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>

#include "cubical/dot.hpp"
#include "cubical/io.hpp"
#include "cubical/pipeline.hpp"

namespace cubical::cli {

namespace {

using io::json;
using io::to_json;

// Library preconditions that come from the input files.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string out;
  std::string target = "npc";
  std::string quotient;
  std::string cell;
  std::string what;
  int hyperplane = -1;
  int budget_degree = 8;
  double budget_seconds = 60;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool prune = false;
};

struct Result {
  int code = pass;
  json report = json::object();
  std::optional<std::string> artifact;  // written to --out when given
  std::optional<std::string> raw;       // printed instead of the report
};

const char* verdict_name(int code) {
  switch (code) {
    case pass: return "pass";
    case fail: return "fail";
    case exhausted: return "exhausted";
    default: return "input-error";
  }
}

json load(const Options& o) { return io::load_json(o.input); }

std::string schema_of(const json& j) { return j.is_object() ? j.value("schema", std::string("cubecomplex.v1")) : ""; }

// Any file that carries a complex: the complex itself, an instance, or a
// certificate (its R).
ComplexPtr complex_of(const json& j) {
  auto s = schema_of(j);
  if (s == "instance.v1") return io::instance_from_json(j).Y;
  if (s == "certificate.v1") return share(io::complex_from_json(j.at("R")));
  if (s == "cubecomplex.v1") return share(io::complex_from_json(j));
  throw io::InputError("expected a cubecomplex.v1, instance.v1 or certificate.v1 file, got " + s);
}

ComplexPtr valid_complex(const json& j) {
  auto X = complex_of(j);
  auto v = validate(*X);
  if (!v.ok()) throw Rejected("invalid complex:\n" + v.str());
  return X;
}

io::Instance valid_instance(const json& j) {
  if (schema_of(j) != "instance.v1") throw io::InputError("expected an instance.v1 file");
  auto inst = io::instance_from_json(j);
  auto v = validate(*inst.Y);
  if (!v.ok()) throw Rejected("invalid complex:\n" + v.str());
  return inst;
}

GraphOfSpaces gos_of(const json& j) {
  auto s = schema_of(j);
  if (s == "gos.v1") return io::gos_from_json(j);
  if (s == "instance.v1") {
    auto inst = valid_instance(j);
    for (std::size_t k = 0; k < inst.O.size(); ++k) {
      auto p = validate_partial_local_isometry(inst.O[k]);
      if (!p.empty()) throw Rejected("map " + std::to_string(k) + " is not a partial local isometry: " + p[0]);
    }
    return realization(inst.Y, inst.O);
  }
  throw io::InputError("expected a gos.v1 or instance.v1 file, got " + s);
}

json cell_json(const CubeComplex& X, CellRef c) { return c.dim < 0 ? json(nullptr) : json(io::cell_key(X, c)); }

SearchBudget budget(const Options& o) {
  SearchBudget b;
  b.max_degree = o.budget_degree;
  b.max_seconds = o.budget_seconds;
  b.seed = o.seed;
  b.jobs = o.jobs;
  return b;
}

Target target(const Options& o) {
  try {
    return parse_target(o.target);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
}

Result cmd_validate(const Options& o) {
  auto X = complex_of(load(o));
  auto v = validate(*X);
  Result r;
  json vs = json::array();
  for (const auto& x : v.violations) vs.push_back({{"dim", x.dim}, {"cell", x.cell}, {"problems", x.problems}});
  r.report["valid"] = v.ok();
  r.report["violations"] = vs;
  r.code = v.ok() ? pass : fail;
  return r;
}

Result cmd_links(const Options& o) {
  auto X = valid_complex(load(o));
  std::vector<CellRef> centers;
  if (!o.cell.empty()) {
    centers.push_back(io::parse_cell_key(*X, o.cell));
    if (centers[0].dim > 2) throw io::InputError("links are defined for cells of dimension <= 2");
  } else {
    for (int v = 0; v < X->count(0); ++v) centers.push_back({0, v});
  }
  Incidence inc(*X);
  Result r;
  json ls = json::array();
  for (auto c : centers) {
    auto L = link(*X, inc, c);
    auto f = is_flag(L);
    json edges = json::array();
    for (std::size_t e = 0; e < L.edges.size(); ++e)
      edges.push_back({L.vertices[L.edges[e][0]], L.vertices[L.edges[e][1]], L.edge_labels[e]});
    ls.push_back({{"center", io::cell_key(*X, c)},
                  {"vertices", L.vertices},
                  {"edges", edges},
                  {"triangles", L.triangles.size()},
                  {"simplicial", L.simplicial()},
                  {"flag", f.ok},
                  {"flag_failure", f.kind}});
  }
  r.report["links"] = ls;
  return r;
}

Result cmd_npc(const Options& o) {
  auto X = valid_complex(load(o));
  auto n = is_npc(*X);
  Result r;
  r.report["npc"] = n.ok;
  r.report["kind"] = n.kind;
  r.report["center"] = cell_json(*X, n.center);
  r.report["witness"] = n.witness;
  r.code = n.ok ? pass : fail;
  return r;
}

Result cmd_special(const Options& o) {
  auto X = valid_complex(load(o));
  auto s = is_special(*X);
  Result r;
  r.report["specialness"] = to_json(s);
  r.artifact = io::dump(to_json(s));
  r.code = s.special ? pass : fail;
  return r;
}

Result cmd_hyperplanes(const Options& o) {
  auto X = valid_complex(load(o));
  Result r;
  json hs = json::array();
  for (const auto& H : hyperplanes(*X)) {
    std::vector<std::string> dual, cycle;
    for (int e : H.dual_edges) dual.push_back(X->id(1, e));
    for (int e : H.reversing_cycle) cycle.push_back(X->id(1, e));
    json carrier = json::array();
    for (auto c : H.carrier.cells()) carrier.push_back(io::cell_key(*X, c));
    json h = {{"id", H.id}, {"dual_edges", dual}, {"two_sided", H.orientation.has_value()}, {"carrier", carrier}};
    if (H.orientation) h["orientation"] = *H.orientation;
    else h["reversing_cycle"] = cycle;
    hs.push_back(h);
  }
  r.report["hyperplanes"] = hs;
  return r;
}

Result cmd_localiso(const Options& o) {
  auto inst = valid_instance(load(o));
  Result r;
  json ms = json::array();
  bool ok = true;
  for (std::size_t k = 0; k < inst.O.size(); ++k) {
    auto p = validate_partial_local_isometry(inst.O[k]);
    ok = ok && p.empty();
    ms.push_back({{"map", k}, {"valid", p.empty()}, {"problems", p}});
  }
  r.report["maps"] = ms;
  r.code = ok ? pass : fail;
  return r;
}

Result cmd_realize(const Options& o) {
  auto inst = valid_instance(load(o));
  Result r;
  for (std::size_t k = 0; k < inst.O.size(); ++k) {
    auto p = validate_partial_local_isometry(inst.O[k]);
    if (!p.empty()) {
      r.code = fail;
      r.report["map"] = k;
      r.report["problems"] = p;
      return r;
    }
  }
  auto G = realization(inst.Y, inst.O);
  r.report["gos"] = to_json(G);
  r.artifact = io::dump(r.report["gos"]);
  return r;
}

TotalSpace assembled(const GraphOfSpaces& G) {
  auto problems = check_gos(G);
  if (!problems.empty()) {
    std::string msg = "invalid graph of spaces:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Rejected(msg);
  }
  return assemble(G);
}

Result cmd_hquotient(const Options& o) {
  auto T = assembled(gos_of(load(o)));
  auto Q = horizontal_quotient(T);
  Result r;
  r.report["strict"] = Q.strict;
  r.report["reason"] = Q.reason;
  r.report["witness"] = Q.witness;
  if (Q.strict) {
    r.report["complex"] = to_json(*Q.complex);
    r.report["npc"] = is_npc(*Q.complex).ok;
    r.artifact = io::dump(r.report["complex"]);
  }
  r.code = Q.strict ? pass : fail;
  return r;
}

Result cmd_controlled(const Options& o) {
  auto G = gos_of(load(o));
  assembled(G);
  auto c = is_controlled(G);
  Result r;
  json issues = json::array();
  for (const auto& i : c.issues)
    issues.push_back({{"edge", i.edge}, {"side", i.side}, {"kind", i.kind}, {"cells", i.cells}});
  r.report["controlled"] = c.ok;
  r.report["precondition_ok"] = c.precondition_ok;
  r.report["issues"] = issues;
  r.code = c.ok ? pass : fail;
  return r;
}

Result cmd_separate(const Options& o) {
  auto j = load(o);
  if (schema_of(j) != "product.v1") throw io::InputError("expected a product.v1 file");
  auto s = io::products_from_json(j);
  auto found = find_separating_quotient(s.rank, s.products, budget(o));
  Result r;
  r.report["trace"] = found.trace;
  r.report["candidates"] = found.candidates;
  if (!found.quotient) {
    r.code = exhausted;
    return r;
  }
  r.report["source"] = found.source;
  r.report["quotient"] = to_json(*found.quotient);
  r.report["order"] = found.quotient->order();
  r.artifact = io::dump(r.report["quotient"]);
  return r;
}

json cover_summary(const CoverSpec& C, const CoverVerification& V) {
  json j = {{"quotient", to_json(C.phi)},
            {"order", C.phi.order()},
            {"ledger", to_json(V.ledger)},
            {"total_cells", {C.total.complex->count(0), C.total.complex->count(1), C.total.complex->count(2),
                             C.total.complex->count(3)}}};
  if (V.quotient) j["R"] = to_json(*V.quotient->complex);
  return j;
}

std::vector<PartialLocalIsometry> valid_maps(const io::Instance& inst) {
  for (std::size_t k = 0; k < inst.O.size(); ++k) {
    auto p = validate_partial_local_isometry(inst.O[k]);
    if (!p.empty()) throw Rejected("map " + std::to_string(k) + " is not a partial local isometry: " + p[0]);
  }
  return inst.O;
}

Result cmd_cover(const Options& o) {
  auto inst = valid_instance(load(o));
  auto O = valid_maps(inst);
  auto G = realization(inst.Y, O);
  auto t = target(o);
  Result r;
  if (!o.quotient.empty()) {
    auto phi = io::quotient_from_json(io::load_json(o.quotient));
    if (phi.rank != static_cast<int>(O.size())) throw io::InputError("quotient rank differs from the number of maps");
    if (auto v = generator_constraint_violation(phi)) {
      r.code = fail;
      r.report["constraint"] = *v;
      return r;
    }
    auto C = induced_cover(G, phi);
    auto V = verify_cover(C, O, t);
    r.report["cover"] = cover_summary(C, V);
    r.code = V.ok() ? pass : fail;
    return r;
  }
  auto s = search_cover(G, O, t, budget(o));
  r.report["trace"] = s.trace;
  if (!s.cover) {
    r.code = exhausted;
    return r;
  }
  r.report["cover"] = cover_summary(*s.cover, *s.verification);
  r.code = s.verification->ok() ? pass : fail;
  return r;
}

Result cmd_hrushovski(const Options& o) {
  auto inst = valid_instance(load(o));
  PipelineBudget b;
  b.search = budget(o);
  b.prune_restrictions = o.prune;
  auto h = hrushovski(inst.Y, inst.O, target(o), b);
  Result r;
  r.report["trace"] = h.trace;
  if (!h.certificate) {
    r.code = exhausted;
    return r;
  }
  r.report["certificate"] = to_json(*h.certificate);
  r.artifact = io::dump(r.report["certificate"]);
  r.code = h.certificate->ledger.ok() && h.certificate->cover_ledger.ok() ? pass : fail;
  return r;
}

Result cmd_replay(const Options& o) {
  auto j = load(o);
  if (schema_of(j) != "certificate.v1") throw io::InputError("expected a certificate.v1 file");
  auto c = io::certificate_from_json(j);
  auto L = certify(c.Y, c.O, c.R, c.iota, c.Phi, c.target);
  Result r;
  bool same = L.entries == c.ledger.entries;
  r.report["matches"] = same;
  r.report["ledger"] = to_json(L);
  r.code = same && L.ok() ? pass : fail;
  return r;
}

Result cmd_export_dot(const Options& o) {
  auto j = load(o);
  auto s = schema_of(j);
  std::string what = o.what.empty() ? (s == "gos.v1" ? "gos" : "skeleton") : o.what;
  Result r;
  if (what == "gos" || what == "horizontal") {
    auto G = gos_of(j);
    if (what == "gos") {
      r.raw = dot::graph_of_spaces(G);
    } else {
      auto T = assembled(G);
      if (o.cell.empty()) throw io::InputError("--cell names the 0-cube of the total space");
      int v = T.complex->find(0, o.cell);
      if (v < 0) throw io::InputError("no 0-cube '" + o.cell + "' in the total space");
      r.raw = dot::horizontal_graph(T, horizontal_graph(T, v));
    }
  } else {
    auto X = what == "skeleton" ? complex_of(j) : valid_complex(j);
    if (what == "skeleton") {
      r.raw = dot::skeleton(*X);
    } else if (what == "link") {
      CellRef c = o.cell.empty() ? CellRef{0, 0} : io::parse_cell_key(*X, o.cell);
      if (c.dim > 2 || c.index >= X->count(c.dim)) throw io::InputError("no such link center");
      r.raw = dot::link(link(*X, c));
    } else if (what == "carrier") {
      auto hs = hyperplanes(*X);
      if (o.hyperplane < 0 || o.hyperplane >= static_cast<int>(hs.size()))
        throw io::InputError("--hyperplane must be in 0.." + std::to_string(static_cast<int>(hs.size()) - 1));
      r.raw = dot::carrier(*X, hs[o.hyperplane]);
    } else {
      throw io::InputError("--what must be skeleton, link, carrier, gos or horizontal");
    }
  }
  r.artifact = r.raw;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cube complexes, graphs of spaces, separable coset products and finite extensions of partial isometries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the command's artifact (or its report) to this file");
  app.add_option("--target", o.target, "npc or special")->check(CLI::IsMember({"npc", "special"}));
  app.add_option("--budget-degree", o.budget_degree, "Largest permutation degree searched")->check(CLI::Range(1, 64));
  app.add_option("--budget-seconds", o.budget_seconds, "Wall-clock limit per search stage")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed of the random search stage");
  app.add_option("--jobs", o.jobs, "Parallel candidate evaluation")->check(CLI::Range(1, 256));

  using Handler = Result (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"validate", "Check a complex for consistency", cmd_validate},
      {"links", "Links of 0-cubes (or of --cell)", cmd_links},
      {"npc", "Nonpositive curvature with witness", cmd_npc},
      {"special", "Hyperplane pathologies (specialness.v1)", cmd_special},
      {"hyperplanes", "Hyperplanes, dual edges, carriers and sidedness", cmd_hyperplanes},
      {"localiso", "Check the partial local isometries of an instance", cmd_localiso},
      {"realize", "Graph of spaces realizing an instance (gos.v1)", cmd_realize},
      {"hquotient", "Horizontal quotient of a graph of spaces", cmd_hquotient},
      {"controlled", "Control conditions of a graph of spaces", cmd_controlled},
      {"separate", "Finite quotient separating coset products from 1", cmd_separate},
      {"cover", "Find (or check with --quotient) a finite cover of a realization", cmd_cover},
      {"hrushovski", "Finite complex extending every partial isometry (certificate.v1)", cmd_hrushovski},
      {"replay", "Recompute a certificate's ledger", cmd_replay},
      {"export-dot", "Graphviz export", cmd_export_dot},
  };
  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Input JSON file")->required();
    if (name == "cover") sub->add_option("--quotient", o.quotient, "quotient.v1 file to check instead of searching");
    if (name == "hrushovski")
      sub->add_flag("--prune-restrictions", o.prune, "Reuse extensions of maps that others restrict");
    if (name == "links" || name == "export-dot") sub->add_option("--cell", o.cell, "Cell key d:id or id");
    if (name == "export-dot") {
      sub->add_option("--what", o.what, "skeleton, link, carrier, gos or horizontal");
      sub->add_option("--hyperplane", o.hyperplane, "Hyperplane index for --what carrier");
    }
    handlers[sub] = {name, fn};
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return pass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return input_error;
  }

  auto* sub = app.get_subcommands().front();
  const auto& [name, fn] = handlers.at(sub);
  Result r;
  try {
    r = fn(o);
  } catch (const io::InputError& e) {
    r.code = input_error;
    r.report["error"] = e.what();
  } catch (const Rejected& e) {
    r.code = input_error;
    r.report["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    r.code = input_error;
    r.report["error"] = e.what();
  }
  if (r.code == input_error) err << name << ": " << r.report["error"].get<std::string>() << "\n";
  if (r.code == exhausted) err << name << ": budget exhausted\n";

  r.report["command"] = name;
  r.report["verdict"] = verdict_name(r.code);
  r.report["exit_code"] = r.code;
  std::string text = r.raw && r.code == pass ? *r.raw : io::dump(r.report) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << name << ": cannot write " << o.out << "\n";
      return input_error;
    }
    f << (r.artifact && r.code == pass ? *r.artifact + (r.raw ? "" : "\n") : text);
    if (!r.raw) out << text;
  } else {
    out << text;
  }
  return r.code;
}

}  // namespace cubical::cli
