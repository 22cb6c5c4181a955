#pragma once

// Brute-force free-group oracles shared by unit and acceptance tests. They
// use no code from the library except the Word and Perm types.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cubical/freegrp.hpp"

namespace oracle {

using cubical::Perm;
using cubical::Word;

inline Word free_reduce(Word w) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        again = true;
        break;
      }
  }
  return w;
}

// Reduced products of at most L generators or inverses.
inline std::set<Word> products_upto(const std::vector<Word>& gens, int L) {
  std::vector<Word> letters;
  for (const auto& g : gens) {
    letters.push_back(free_reduce(g));
    Word inv(g.rbegin(), g.rend());
    for (int& x : inv) x = -x;
    letters.push_back(free_reduce(inv));
  }
  std::set<Word> all{Word{}};
  std::vector<Word> frontier{Word{}};
  for (int k = 0; k < L; ++k) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        Word x = w;
        x.insert(x.end(), l.begin(), l.end());
        x = free_reduce(x);
        if (all.insert(x).second) next.push_back(x);
      }
    frontier.swap(next);
  }
  return all;
}

// All reduced words of length <= L in the given rank.
inline std::vector<Word> reduced_words(int rank, int L) {
  std::vector<Word> out{Word{}};
  std::size_t lo = 0;
  for (int k = 0; k < L; ++k) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int g = -rank; g <= rank; ++g) {
        if (g == 0 || (!out[i].empty() && out[i].back() == -g)) continue;
        Word w = out[i];
        w.push_back(g);
        out.push_back(w);
      }
    lo = hi;
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int len) {
  Word w;
  std::uniform_int_distribution<int> g(1, rank), s(0, 1);
  while (static_cast<int>(w.size()) < len) {
    int x = g(rng) * (s(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

// Apply the letters of w left to right: (p*q)[i] = q[p[i]].
inline Perm eval_perm(const std::vector<Perm>& gens, int degree, const Word& w) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (int x : w) {
    const Perm& g = gens[std::abs(x) - 1];
    Perm step(degree);
    for (int i = 0; i < degree; ++i) step[x > 0 ? i : g[i]] = x > 0 ? g[i] : i;
    for (int& v : p) v = step[v];
  }
  return p;
}

// Naive folding without trimming: returns the folded edge set and the class
// of every vertex.
struct NaiveFold {
  std::vector<int> cls;
  std::set<std::array<int, 3>> edges;
};

inline NaiveFold naive_fold(int n, std::vector<std::array<int, 3>> edges) {
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  auto relabel = [&](int from, int to) {
    for (int& c : cls)
      if (c == from) c = to;
  };
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < edges.size() && !again; ++i)
      for (std::size_t j = i + 1; j < edges.size() && !again; ++j) {
        const auto& a = edges[i];
        const auto& b = edges[j];
        if (a[2] != b[2]) continue;
        int ca0 = cls[a[0]], ca1 = cls[a[1]], cb0 = cls[b[0]], cb1 = cls[b[1]];
        if (ca0 == cb0 && ca1 != cb1) relabel(cb1, ca1), again = true;
        else if (ca1 == cb1 && ca0 != cb0) relabel(cb0, ca0), again = true;
      }
  }
  NaiveFold f{cls, {}};
  for (const auto& e : edges) f.edges.insert({cls[e[0]], cls[e[1]], e[2]});
  return f;
}

inline int naive_trace(const NaiveFold& f, int v, const Word& w) {
  for (int x : w) {
    int j = std::abs(x) - 1, next = -1;
    for (const auto& e : f.edges)
      if (e[2] == j && (x > 0 ? e[0] : e[1]) == v) next = x > 0 ? e[1] : e[0];
    if (next < 0) return -1;
    v = next;
  }
  return v;
}

}  // namespace oracle
