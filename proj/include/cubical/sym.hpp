#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cubical {

/// Position of a subcube inside the standard n-cube: each coordinate is
/// -1 or +1 (fixed) or 0 (free).
struct Pos {
  std::array<std::int8_t, 3> v{0, 0, 0};
  std::uint8_t n = 0;

  int free_count() const;
  int fixed_count() const { return n - free_count(); }
  /// Base-3 code, unique per (n, v).
  int code() const;
  static Pos corner(int n, int k);  // bit i of k set: coordinate i is +1
  int corner_index() const;         // only for positions with no free axis
  std::string str() const;          // e.g. "-0+"
  bool operator==(const Pos&) const = default;
};

/// Signed permutation of n <= 3 coordinates (the symmetry group of the
/// standard n-cube). Acts on points by g(p)_i = sign_i * p_{perm_i}.
struct Sym {
  std::uint8_t n = 0;
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  std::uint8_t flips = 0;  // bit i set: coordinate i is negated

  static Sym identity(int n);
  /// Index = lexicographic rank of perm * 2^n + flips. Throws on bad input.
  static Sym from_index(int n, int index);
  static int order(int n);  // 1, 2, 8, 48
  int index() const;

  int sign(int i) const { return ((flips >> i) & 1) ? -1 : 1; }
  bool is_identity() const;
  Sym inverse() const;
  Pos apply(const Pos& p) const;
  int apply_corner(int k) const;

  bool operator==(const Sym&) const = default;
};

/// g after h.
Sym compose(const Sym& g, const Sym& h);

/// Restriction of g to the free coordinates of the subcube at `src`. The
/// result maps the subcube's own coordinates to those of g(src).
Sym restrict_to(const Sym& g, const Pos& src);

/// g acting on the first n coordinates of an (n+1)-cube, fixing the last.
Sym extend(const Sym& g);

/// 1-dimensional symmetry from an edge direction flag (+1 keeps, -1 flips).
Sym dir_sym(int dir);
inline int sym_dir(const Sym& s) { return s.flips ? -1 : 1; }

}  // namespace cubical
