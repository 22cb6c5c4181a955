#include "cubical/sym.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubical {

int Pos::free_count() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += v[i] == 0;
  return c;
}

int Pos::code() const {
  int c = 0;
  for (int i = n - 1; i >= 0; --i) c = c * 3 + (v[i] + 1);
  return c;
}

Pos Pos::corner(int n, int k) {
  Pos p;
  p.n = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.v[i] = ((k >> i) & 1) ? 1 : -1;
  return p;
}

int Pos::corner_index() const {
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (v[i] > 0) k |= 1 << i;
  return k;
}

std::string Pos::str() const {
  std::string s;
  for (int i = 0; i < n; ++i) s += v[i] < 0 ? '-' : (v[i] > 0 ? '+' : '0');
  return s;
}

namespace {

int perm_rank(const std::array<std::uint8_t, 3>& p, int n) {
  std::array<std::uint8_t, 3> id{0, 1, 2};
  int rank = 0;
  do {
    if (std::equal(id.begin(), id.begin() + n, p.begin())) return rank;
    ++rank;
  } while (std::next_permutation(id.begin(), id.begin() + n));
  return -1;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

Sym Sym::identity(int n) {
  Sym s;
  s.n = static_cast<std::uint8_t>(n);
  return s;
}

int Sym::order(int n) { return factorial(n) << n; }

Sym Sym::from_index(int n, int index) {
  if (n < 0 || n > 3) throw std::out_of_range("symmetry dimension out of range");
  if (index < 0 || index >= order(n))
    throw std::out_of_range("symmetry index " + std::to_string(index) + " out of range for dimension " +
                            std::to_string(n));
  Sym s = identity(n);
  s.flips = static_cast<std::uint8_t>(index & ((1 << n) - 1));
  int rank = index >> n;
  for (int r = 0; r < rank; ++r) std::next_permutation(s.perm.begin(), s.perm.begin() + n);
  return s;
}

int Sym::index() const { return (perm_rank(perm, n) << n) | flips; }

bool Sym::is_identity() const {
  if (flips) return false;
  for (int i = 0; i < n; ++i)
    if (perm[i] != i) return false;
  return true;
}

Sym Sym::inverse() const {
  Sym r = identity(n);
  for (int i = 0; i < n; ++i) {
    r.perm[perm[i]] = static_cast<std::uint8_t>(i);
    if (sign(i) < 0) r.flips |= static_cast<std::uint8_t>(1 << perm[i]);
  }
  return r;
}

Pos Sym::apply(const Pos& p) const {
  Pos out;
  out.n = n;
  for (int i = 0; i < n; ++i) out.v[i] = static_cast<std::int8_t>(sign(i) * p.v[perm[i]]);
  return out;
}

int Sym::apply_corner(int k) const { return apply(Pos::corner(n, k)).corner_index(); }

Sym compose(const Sym& g, const Sym& h) {
  if (g.n != h.n) throw std::invalid_argument("composing symmetries of different dimension");
  Sym r = Sym::identity(g.n);
  for (int i = 0; i < g.n; ++i) {
    r.perm[i] = h.perm[g.perm[i]];
    if (g.sign(i) * h.sign(g.perm[i]) < 0) r.flips |= static_cast<std::uint8_t>(1 << i);
  }
  return r;
}

Sym restrict_to(const Sym& g, const Pos& src) {
  std::array<int, 3> src_rank{-1, -1, -1};
  int m = 0;
  for (int i = 0; i < src.n; ++i)
    if (src.v[i] == 0) src_rank[i] = m++;
  Sym r = Sym::identity(m);
  int j = 0;
  for (int i = 0; i < g.n; ++i) {
    if (src.v[g.perm[i]] != 0) continue;  // target axis i is fixed
    r.perm[j] = static_cast<std::uint8_t>(src_rank[g.perm[i]]);
    if (g.sign(i) < 0) r.flips |= static_cast<std::uint8_t>(1 << j);
    ++j;
  }
  return r;
}

Sym dir_sym(int dir) {
  Sym s = Sym::identity(1);
  if (dir < 0) s.flips = 1;
  return s;
}

Sym extend(const Sym& h) {
  Sym g = Sym::identity(h.n + 1);
  for (int i = 0; i < h.n; ++i) g.perm[i] = h.perm[i];
  g.flips = h.flips;
  return g;
}

}  // namespace cubical
