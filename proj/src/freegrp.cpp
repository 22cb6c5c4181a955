#include "cubical/freegrp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace cubical {

Word reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("reduce: letter 0");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c >= 'a' && c <= 'z')
      w.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      w.push_back(-(c - 'A' + 1));
    else if (c == '1' && s.size() == 1)
      continue;
    else
      throw std::invalid_argument(std::string("parse_word: bad letter '") + c + "'");
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) {
    if (std::abs(x) > 26) throw std::invalid_argument("format_word: generator index above 26");
    s.push_back(x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
  }
  return s;
}

int StallingsGraph::edge_count() const {
  int n = 0;
  for (const auto& row : out)
    for (int t : row) n += t >= 0;
  return n;
}

int StallingsGraph::trace(int v, const Word& w) const {
  for (int x : w) {
    if (v < 0) return -1;
    int j = std::abs(x) - 1;
    if (j >= rank) return -1;
    v = x > 0 ? out[v][j] : in[v][j];
  }
  return v;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

}  // namespace

StallingsGraph fold_graph(int rank, int vertices, const std::vector<std::array<int, 3>>& edges, int base,
                          std::vector<int>* vertex_map) {
  if (base < 0 || base >= vertices) throw std::invalid_argument("fold_graph: bad base");
  for (const auto& e : edges)
    if (e[0] < 0 || e[0] >= vertices || e[1] < 0 || e[1] >= vertices || e[2] < 0 || e[2] >= rank)
      throw std::invalid_argument("fold_graph: bad edge");
  Dsu d(vertices);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> outm, inm;
    for (const auto& [f, t, l] : edges) {
      int F = d.find(f), T = d.find(t);
      auto [o, fresh_o] = outm.emplace(std::make_pair(F, l), T);
      if (!fresh_o && d.unite(o->second, T)) changed = true;
      auto [i, fresh_i] = inm.emplace(std::make_pair(T, l), F);
      if (!fresh_i && d.unite(i->second, F)) changed = true;
    }
  }
  std::set<std::array<int, 3>> es;
  for (const auto& [f, t, l] : edges) es.insert({d.find(f), d.find(t), l});
  std::vector<int> degree(vertices, 0);
  std::vector<char> alive(vertices, 0);
  for (int v = 0; v < vertices; ++v) alive[d.find(v)] = 1;
  for (const auto& e : es) ++degree[e[0]], ++degree[e[1]];
  int b = d.find(base);
  {
    std::vector<std::vector<int>> nbr(vertices);
    for (const auto& e : es) nbr[e[0]].push_back(e[1]), nbr[e[1]].push_back(e[0]);
    std::vector<int> q;
    for (int v = 0; v < vertices; ++v)
      if (alive[v] && v != b && degree[v] <= 1) q.push_back(v);
    while (!q.empty()) {
      int v = q.back();
      q.pop_back();
      if (!alive[v]) continue;
      alive[v] = 0;
      for (int u : nbr[v])
        if (alive[u] && u != b && --degree[u] <= 1) q.push_back(u);
    }
  }
  // BFS numbering from the base drops parts not connected to it
  std::vector<std::vector<std::array<int, 2>>> adj_out(vertices), adj_in(vertices);
  for (const auto& [f, t, l] : es) {
    if (!alive[f] || !alive[t]) continue;
    adj_out[f].push_back({l, t});
    adj_in[t].push_back({l, f});
  }
  for (auto& a : adj_out) std::sort(a.begin(), a.end());
  for (auto& a : adj_in) std::sort(a.begin(), a.end());
  std::vector<int> num(vertices, -1);
  std::vector<int> order;
  auto visit_from = [&](int s) {
    std::deque<int> q{s};
    num[s] = static_cast<int>(order.size());
    order.push_back(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto* adj : {&adj_out[v], &adj_in[v]})
        for (const auto& [l, u] : *adj)
          if (num[u] < 0) {
            num[u] = static_cast<int>(order.size());
            order.push_back(u);
            q.push_back(u);
          }
    }
  };
  visit_from(b);
  StallingsGraph G;
  G.rank = rank;
  G.base = 0;
  int n = static_cast<int>(order.size());
  G.out.assign(n, std::vector<int>(rank, -1));
  G.in.assign(n, std::vector<int>(rank, -1));
  for (const auto& [f, t, l] : es) {
    if (num[f] < 0 || num[t] < 0) continue;
    G.out[num[f]][l] = num[t];
    G.in[num[t]][l] = num[f];
  }
  if (vertex_map) {
    vertex_map->assign(vertices, -1);
    for (int v = 0; v < vertices; ++v) (*vertex_map)[v] = num[d.find(v)];
  }
  return G;
}


namespace {

// Add a path reading w from `from` to `to`, creating interior vertices.
void add_path(int& vertices, std::vector<std::array<int, 3>>& edges, int from, int to, const Word& w) {
  int v = from;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int u = k + 1 == w.size() ? to : vertices++;
    int j = std::abs(w[k]) - 1;
    if (w[k] > 0)
      edges.push_back({v, u, j});
    else
      edges.push_back({u, v, j});
    v = u;
  }
  if (w.empty() && from != to) throw std::logic_error("add_path: empty path between distinct vertices");
}

void check_word(int rank, const Word& w, const char* who) {
  for (int x : w)
    if (x == 0 || std::abs(x) > rank) throw std::invalid_argument(std::string(who) + ": letter outside the rank");
}

}  // namespace

StallingsGraph stallings(int rank, const std::vector<Word>& generators) {
  int vertices = 1;
  std::vector<std::array<int, 3>> edges;
  for (const auto& g : generators) {
    check_word(rank, g, "stallings");
    Word r = reduce(g);
    if (!r.empty()) add_path(vertices, edges, 0, 0, r);
  }
  return fold_graph(rank, vertices, edges, 0);
}

bool member(const StallingsGraph& H, const Word& w) { return H.trace(H.base, reduce(w)) == H.base; }

std::vector<Word> subgroup_generators(const StallingsGraph& H) {
  int n = H.vertex_count();
  std::vector<Word> path(n);
  std::vector<char> seen(n, 0);
  std::set<std::array<int, 3>> tree;  // (from, label, to)
  std::deque<int> q{H.base};
  seen[H.base] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int j = 0; j < H.rank; ++j) {
      int u = H.out[v][j];
      if (u >= 0 && !seen[u]) {
        seen[u] = 1;
        path[u] = path[v];
        path[u].push_back(j + 1);
        tree.insert({v, j, u});
        q.push_back(u);
      }
      u = H.in[v][j];
      if (u >= 0 && !seen[u]) {
        seen[u] = 1;
        path[u] = path[v];
        path[u].push_back(-(j + 1));
        tree.insert({u, j, v});
        q.push_back(u);
      }
    }
  }
  std::vector<Word> gens;
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < H.rank; ++j) {
      int u = H.out[v][j];
      if (u < 0 || tree.count({v, j, u})) continue;
      Word w = path[v];
      w.push_back(j + 1);
      gens.push_back(concat(w, inverse(path[u])));
    }
  return gens;
}

namespace {

// y in A B: y = y1 y2 with y1 z in A and z^-1 y2 in B for some z, that is
// the end of y1 in A and the start of y2 in B are joined to the two bases by
// a common word, a path in the pullback A x B.
bool in_product(const StallingsGraph& A, const StallingsGraph& B, const Word& y) {
  int nb = B.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(A.vertex_count()) * nb, 0);
  std::deque<std::pair<int, int>> q{{A.base, B.base}};
  seen[A.base * nb + B.base] = 1;
  while (!q.empty()) {
    auto [u, v] = q.front();
    q.pop_front();
    for (int j = 0; j < A.rank; ++j)
      for (const auto& [s, t] : {std::make_pair(A.out[u][j], B.out[v][j]), std::make_pair(A.in[u][j], B.in[v][j])})
        if (s >= 0 && t >= 0 && !seen[s * nb + t]) {
          seen[s * nb + t] = 1;
          q.push_back({s, t});
        }
  }
  for (std::size_t i = 0; i <= y.size(); ++i) {
    int p = A.trace(A.base, Word(y.begin(), y.begin() + static_cast<long>(i)));
    if (p < 0) break;
    int r = B.trace(B.base, inverse(Word(y.begin() + static_cast<long>(i), y.end())));
    if (r >= 0 && seen[p * nb + r]) return true;
  }
  return false;
}

}  // namespace

bool in_double_coset(const StallingsGraph& H1, const Word& x, const StallingsGraph& H2, const Word& w) {
  if (H1.rank != H2.rank) throw std::invalid_argument("in_double_coset: rank mismatch");
  check_word(H1.rank, x, "in_double_coset");
  check_word(H1.rank, w, "in_double_coset");
  // H1 x H2 = H1 (x H2 x^-1) x
  Word rx = reduce(x);
  std::vector<Word> conj;
  for (const auto& g : subgroup_generators(H2)) conj.push_back(concat(concat(rx, g), inverse(rx)));
  return in_product(H1, stallings(H1.rank, conj), concat(w, inverse(rx)));
}

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int FiniteQuotient::mul(int x, int y) const { return index.at(perm_mul(elements.at(x), elements.at(y))); }

int FiniteQuotient::eval(const Word& w) const {
  int x = 0;
  for (int l : w) {
    int j = std::abs(l) - 1;
    if (l == 0 || j >= rank) throw std::invalid_argument("FiniteQuotient::eval: letter outside the rank");
    x = l > 0 ? right[j][x] : right_inv[j][x];
  }
  return x;
}

std::optional<FiniteQuotient> make_quotient(int rank, int degree, const std::vector<Perm>& gens, std::size_t max_order) {
  if (static_cast<int>(gens.size()) != rank) throw std::invalid_argument("make_quotient: need one image per generator");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("make_quotient: image has the wrong degree");
    std::vector<char> hit(degree, 0);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) throw std::invalid_argument("make_quotient: image is not a permutation");
      hit[x] = 1;
    }
  }
  FiniteQuotient Q;
  Q.rank = rank;
  Q.degree = degree;
  Q.gens = gens;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  Q.elements.push_back(id);
  Q.index.emplace(id, 0);
  Q.right.assign(rank, {});
  for (std::size_t x = 0; x < Q.elements.size(); ++x)
    for (int s = 0; s < rank; ++s) {
      Perm y = perm_mul(Q.elements[x], gens[s]);
      auto [it, fresh] = Q.index.emplace(y, static_cast<int>(Q.elements.size()));
      if (fresh) {
        if (Q.elements.size() >= max_order) return std::nullopt;
        Q.elements.push_back(std::move(y));
      }
      Q.right[s].push_back(it->second);
    }
  Q.right_inv.assign(rank, std::vector<int>(Q.elements.size()));
  for (int s = 0; s < rank; ++s)
    for (std::size_t x = 0; x < Q.elements.size(); ++x) Q.right_inv[s][Q.right[s][x]] = static_cast<int>(x);
  return Q;
}

namespace {

int act(const FiniteQuotient& phi, int x, const Word& w) {
  for (int l : w) x = l > 0 ? phi.right[l - 1][x] : phi.right_inv[-l - 1][x];
  return x;
}

// Right closure of a set under the images of the words.
void close_right(const FiniteQuotient& phi, std::vector<char>& in, const std::vector<Word>& gens) {
  std::vector<int> stack;
  for (int x = 0; x < phi.order(); ++x)
    if (in[x]) stack.push_back(x);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = act(phi, x, g);
      if (!in[y]) in[y] = 1, stack.push_back(y);
    }
  }
}

struct Prepared {
  std::vector<Word> words;
  std::vector<std::vector<Word>> gens;
};

Prepared prepare(int rank, const CosetProduct& P) {
  if (P.words.size() != P.subgroups.size() + 1)
    throw std::invalid_argument("coset product: need one more word than subgroups");
  Prepared r;
  for (const auto& w : P.words) {
    check_word(rank, w, "coset product");
    r.words.push_back(reduce(w));
  }
  for (const auto& H : P.subgroups) {
    if (H.rank != rank) throw std::invalid_argument("coset product: subgroup rank mismatch");
    r.gens.push_back(subgroup_generators(H));
  }
  return r;
}

std::vector<char> image_mask(const FiniteQuotient& phi, const Prepared& P) {
  std::vector<char> in(phi.order(), 0);
  in[act(phi, 0, P.words[0])] = 1;
  for (std::size_t i = 0; i < P.gens.size(); ++i) {
    close_right(phi, in, P.gens[i]);
    std::vector<char> next(phi.order(), 0);
    for (int x = 0; x < phi.order(); ++x)
      if (in[x]) next[act(phi, x, P.words[i + 1])] = 1;
    in.swap(next);
  }
  return in;
}

std::vector<int> mask_to_list(const std::vector<char>& m) {
  std::vector<int> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x]) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

std::vector<int> image_in_quotient(const FiniteQuotient& phi, const StallingsGraph& H) {
  if (H.rank != phi.rank) throw std::invalid_argument("image_in_quotient: rank mismatch");
  std::vector<char> in(phi.order(), 0);
  in[0] = 1;
  close_right(phi, in, subgroup_generators(H));
  return mask_to_list(in);
}

std::vector<int> product_image(const FiniteQuotient& phi, const CosetProduct& P) {
  return mask_to_list(image_mask(phi, prepare(phi.rank, P)));
}

bool separates(const FiniteQuotient& phi, const CosetProduct& P) { return !image_mask(phi, prepare(phi.rank, P))[0]; }

namespace {

struct CatalogGroup {
  std::string name;
  int degree;
  std::vector<Perm> gens;
};

Perm cycle_perm(int degree, const std::vector<int>& cyc) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

std::vector<int> range(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

CatalogGroup cyclic(int n) { return {"C" + std::to_string(n), n, {cycle_perm(n, range(n))}}; }

CatalogGroup dihedral(int n) {
  Perm refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return {"D" + std::to_string(n), n, {cycle_perm(n, range(n)), refl}};
}

CatalogGroup symmetric(int n) { return {"S" + std::to_string(n), n, {cycle_perm(n, {0, 1}), cycle_perm(n, range(n))}}; }

CatalogGroup alternating4() { return {"A4", 4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})}}; }

CatalogGroup direct_square(const CatalogGroup& g) {
  CatalogGroup r{g.name + "x" + g.name, 2 * g.degree, {}};
  for (int side = 0; side < 2; ++side)
    for (const auto& p : g.gens) {
      Perm q = range(r.degree);
      for (int i = 0; i < g.degree; ++i) q[side * g.degree + i] = side * g.degree + p[i];
      r.gens.push_back(q);
    }
  return r;
}

std::vector<CatalogGroup> catalog() {
  std::vector<CatalogGroup> c = {
      {"trivial", 1, {Perm{0}}},
      cyclic(2),
      cyclic(3),
      symmetric(3),
      cyclic(4),
      direct_square(cyclic(2)),
      dihedral(4),
      alternating4(),
      symmetric(4),
      cyclic(5),
      dihedral(5),
      symmetric(5),
      cyclic(6),
      dihedral(6),
      direct_square(cyclic(3)),
      direct_square(symmetric(3)),
      cyclic(7),
      dihedral(7),
      cyclic(8),
      dihedral(8),
      direct_square(cyclic(4)),
      direct_square(dihedral(4)),
      direct_square(alternating4()),
      direct_square(symmetric(4)),
  };
  return c;
}

using Tuple = std::vector<Perm>;

class Searcher {
 public:
  Searcher(int rank, const std::vector<CosetProduct>& products, const SearchBudget& budget,
           const std::function<bool(const FiniteQuotient&)>& accept)
      : rank_(rank), budget_(budget), accept_(accept), start_(std::chrono::steady_clock::now()) {
    for (const auto& P : products) prepared_.push_back(prepare(rank, P));
  }

  bool out_of_time() const {
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
    return el.count() > budget_.max_seconds;
  }

  // Index of the first separating tuple of the batch, evaluated by up to
  // `jobs` threads; the answer does not depend on the thread count.
  std::optional<std::pair<std::size_t, FiniteQuotient>> first_good(const std::vector<Tuple>& batch, int degree) {
    std::vector<std::optional<FiniteQuotient>> res(batch.size());
    auto work = [&](std::size_t lo, std::size_t step) {
      for (std::size_t i = lo; i < batch.size(); i += step) res[i] = evaluate(batch[i], degree);
    };
    std::size_t jobs = std::max(1, budget_.jobs);
    if (jobs == 1 || batch.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::thread> ts;
      for (std::size_t t = 0; t < jobs; ++t) ts.emplace_back(work, t, jobs);
      for (auto& t : ts) t.join();
    }
    candidates_ += static_cast<long>(batch.size());
    for (std::size_t i = 0; i < res.size(); ++i)
      if (res[i]) return std::make_pair(i, std::move(*res[i]));
    return std::nullopt;
  }

  long candidates() const { return candidates_; }

 private:
  std::optional<FiniteQuotient> evaluate(const Tuple& t, int degree) const {
    auto Q = make_quotient(rank_, degree, t, budget_.max_order);
    if (!Q) return std::nullopt;
    for (const auto& P : prepared_)
      if (image_mask(*Q, P)[0]) return std::nullopt;
    if (accept_ && !accept_(*Q)) return std::nullopt;
    return Q;
  }

  int rank_;
  SearchBudget budget_;
  std::function<bool(const FiniteQuotient&)> accept_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Prepared> prepared_;
  long candidates_ = 0;
};

constexpr std::size_t kBatch = 256;

}  // namespace

SearchOutcome find_separating_quotient(int rank, const std::vector<CosetProduct>& products, const SearchBudget& budget,
                                       const std::function<bool(const FiniteQuotient&)>& accept) {
  if (rank < 0) throw std::invalid_argument("find_separating_quotient: negative rank");
  SearchOutcome out;
  Searcher S(rank, products, budget, accept);
  std::mt19937_64 rng(budget.seed);

  // Runs batches from `next` until one succeeds, the source is exhausted or
  // time runs out. Returns true when the search should stop.
  auto run = [&](const std::string& name, int degree, std::size_t total, const std::function<Tuple(std::size_t)>& next,
                 const std::string& what) {
    std::size_t done = 0;
    while (done < total) {
      if (S.out_of_time()) {
        out.trace.push_back(name + " (degree " + std::to_string(degree) + "): time budget exhausted after " +
                            std::to_string(done) + " " + what);
        return true;
      }
      std::vector<Tuple> batch;
      for (std::size_t k = 0; k < kBatch && done + k < total; ++k) batch.push_back(next(done + k));
      if (auto hit = S.first_good(batch, degree)) {
        out.quotient = std::move(hit->second);
        out.source = name + " #" + std::to_string(done + hit->first);
        out.trace.push_back(name + " (degree " + std::to_string(degree) + "): accepted " + what + " #" +
                            std::to_string(done + hit->first));
        return true;
      }
      done += batch.size();
    }
    out.trace.push_back(name + " (degree " + std::to_string(degree) + "): " + std::to_string(done) + " " + what +
                        ", none accepted");
    return false;
  };

  bool stop = false;
  for (const auto& g : catalog()) {
    if (stop) break;
    if (g.degree > budget.max_degree) continue;
    auto G = make_quotient(static_cast<int>(g.gens.size()), g.degree, g.gens, budget.max_order);
    if (!G) continue;
    std::size_t n = G->elements.size();
    double space = std::pow(static_cast<double>(n), rank);
    if (space <= static_cast<double>(budget.tuple_cap)) {
      auto total = static_cast<std::size_t>(space);
      stop = run(g.name, g.degree, total, [&](std::size_t code) {
        Tuple t(rank);
        for (int j = 0; j < rank; ++j, code /= n) t[j] = G->elements[code % n];
        return t;
      }, "tuples");
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      stop = run(g.name, g.degree, budget.tuple_cap, [&](std::size_t) {
        Tuple t(rank);
        for (int j = 0; j < rank; ++j) t[j] = G->elements[pick(rng)];
        return t;
      }, "sampled tuples");
    }
  }
  for (int d = 2; !stop && d <= budget.max_degree; ++d) {
    stop = run("random", d, static_cast<std::size_t>(std::max(0, budget.random_per_degree)), [&](std::size_t) {
      Tuple t(rank);
      for (auto& p : t) {
        p = range(d);
        std::shuffle(p.begin(), p.end(), rng);
      }
      return t;
    }, "random tuples");
  }
  out.candidates = S.candidates();
  return out;
}

FiniteQuotient intersect(const FiniteQuotient& a, const FiniteQuotient& b, std::size_t max_order) {
  if (a.rank != b.rank) throw std::invalid_argument("intersect: rank mismatch");
  std::vector<Perm> gens;
  for (int j = 0; j < a.rank; ++j) {
    Perm p(a.degree + b.degree);
    for (int i = 0; i < a.degree; ++i) p[i] = a.gens[j][i];
    for (int i = 0; i < b.degree; ++i) p[a.degree + i] = a.degree + b.gens[j][i];
    gens.push_back(std::move(p));
  }
  auto Q = make_quotient(a.rank, a.degree + b.degree, gens, max_order);
  if (!Q) throw std::length_error("intersect: diagonal quotient exceeds the order bound");
  return *Q;
}

namespace {

int bouquet_rank(const TotalSpace& T) { return static_cast<int>(T.gos.graph.edges.size()); }

// BFS words from c to every 0-cube of its horizontal graph.
std::map<int, Word> horizontal_paths(const HorizontalGraph& H, int c) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbour, letter)
  for (const auto& e : H.edges) {
    adj[e.from].push_back({e.to, e.graph_edge + 1});
    adj[e.to].push_back({e.from, -(e.graph_edge + 1)});
  }
  std::map<int, Word> path{{c, {}}};
  std::deque<int> q{c};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& [u, l] : adj[v])
      if (!path.count(u)) {
        path[u] = path[v];
        path[u].push_back(l);
        q.push_back(u);
      }
  }
  for (auto& [v, w] : path) w = reduce(w);
  return path;
}

StallingsGraph fold_horizontal(const TotalSpace& T, const HorizontalGraph& H, int c) {
  std::map<int, int> local;
  for (int v : H.vertices) local.emplace(v, static_cast<int>(local.size()));
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : H.edges) edges.push_back({local.at(e.from), local.at(e.to), e.graph_edge});
  return fold_graph(bouquet_rank(T), static_cast<int>(local.size()), edges, local.at(c));
}

void check_vertex(const TotalSpace& T, int c, const char* who) {
  if (c < 0 || c >= T.complex->count(0)) throw std::out_of_range(std::string(who) + ": no such 0-cube");
  if (!T.provenance[0][c].vertical) throw std::invalid_argument(std::string(who) + ": 0-cube is not vertical");
}

}  // namespace

StallingsGraph horizontal_subgroup(const TotalSpace& T, int c) {
  check_vertex(T, c, "horizontal_subgroup");
  return fold_horizontal(T, horizontal_graph(T, c), c);
}

std::optional<Word> connecting_word(const TotalSpace& T, int ci, int cj) {
  check_vertex(T, ci, "connecting_word");
  check_vertex(T, cj, "connecting_word");
  auto paths = horizontal_paths(horizontal_graph(T, ci), ci);
  auto it = paths.find(cj);
  if (it == paths.end()) return std::nullopt;
  return it->second;
}

std::vector<StrictnessProduct> strictness_products(const TotalSpace& T) {
  std::vector<StrictnessProduct> out;
  std::set<int> done;
  for (int c = 0; c < T.complex->count(0); ++c) {
    if (!T.provenance[0][c].vertical || done.count(c)) continue;
    HorizontalGraph H = horizontal_graph(T, c);
    done.insert(H.vertices.begin(), H.vertices.end());
    if (H.vertices.size() < 2) continue;
    auto paths = horizontal_paths(H, c);
    std::map<int, StallingsGraph> K;
    for (int v : H.vertices) K.emplace(v, fold_horizontal(T, H, v));
    for (int a : H.vertices)
      for (int b : H.vertices) {
        if (a == b || T.provenance[0][a].node != T.provenance[0][b].node) continue;
        StrictnessProduct sp;
        sp.ci = a;
        sp.cj = b;
        sp.product.words = {{}, concat(inverse(paths.at(a)), paths.at(b)), {}};
        sp.product.subgroups = {K.at(a), K.at(b)};
        out.push_back(std::move(sp));
      }
  }
  return out;
}

}  // namespace cubical
