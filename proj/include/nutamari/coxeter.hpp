#pragma once

// Exact arithmetic for the symmetric group S_{n+1}: one-line permutations,
// words in the simple transpositions s_p = (p p+1), roots e_i - e_j,
// fundamental weights, Bruhat order and Demazure products.
//
// Conventions (pinned by the test suite):
//  - A word (q_1,...,q_m) evaluates left to right: start from the identity
//    window and let each letter swap the adjacent *positions* q_k, q_k+1.
//    Equivalently the group product u.v acts as (u.v)(x) = u(v(x)).
//  - Permutations act on roots and weights by permuting coordinates:
//    w(e_i - e_j) = e_{w(i)} - e_{w(j)}.
//  - The reflection s_beta for beta = e_i - e_j multiplies on the left,
//    i.e. it swaps the *values* i and j in the window.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutamari/linalg.hpp"

namespace nutamari {

using GenWord = std::vector<int>;  // generator indices, 1-based

struct Permutation {
  std::vector<int> window;  // one-line notation, values 1..k

  Permutation() = default;
  explicit Permutation(std::vector<int> w) : window(std::move(w)) {}

  static Permutation identity(int k) {
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(window.size()); }
  int operator()(int i) const { return window[i - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (window[i - 1] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.window == b.window;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.window < b.window;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(window[i]);
    }
    return s + "]";
  }
};

struct Root {
  int i = 0;
  int j = 0;  // e_i - e_j, i != j

  bool positive() const { return i < j; }
  Root negated() const { return Root{j, i}; }

  friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }

  IntVec coords(int k) const {
    IntVec v(k, 0);
    v[i - 1] = 1;
    v[j - 1] = -1;
    return v;
  }

  std::string str() const {
    return "e" + std::to_string(i) + "-e" + std::to_string(j);
  }
};

using Weight = IntVec;

inline Root simple_root(int p) { return Root{p, p + 1}; }

inline Weight fundamental_weight(int p, int k) {
  Weight w(k, 0);
  for (int q = 0; q < p; ++q) w[q] = 1;
  return w;
}

// w <- w . s_p  (swap adjacent positions p, p+1 of the window).
inline void apply_gen_inplace(Permutation& w, int p) {
  if (p < 1 || p + 1 > w.size())
    throw std::invalid_argument("generator index out of range: s" + std::to_string(p));
  std::swap(w.window[p - 1], w.window[p]);
}

inline Permutation evaluate(const GenWord& word, int window_size) {
  Permutation w = Permutation::identity(window_size);
  for (int p : word) apply_gen_inplace(w, p);
  return w;
}

// (a.b)(x) = a(b(x)).
inline Permutation mult(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mult: rank mismatch");
  std::vector<int> w(a.size());
  for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (int i = 1; i <= w.size(); ++i) inv[w(i) - 1] = i;
  return Permutation(std::move(inv));
}

inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w.window[i] > w.window[j]) ++inv;
  return inv;
}

inline bool is_reduced(const GenWord& word, int window_size) {
  return length(evaluate(word, window_size)) == static_cast<int>(word.size());
}

// Rank-matrix (dot) criterion: u <= w iff for all a,b
// #{c <= a : u(c) >= b} <= #{c <= a : w(c) >= b}.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  int k = u.size();
  std::vector<int> cu(k + 2, 0), cw(k + 2, 0);
  for (int a = 1; a <= k; ++a) {
    // update counts of prefix values >= b incrementally
    for (int b = u(a); b >= 1; --b) ++cu[b];
    for (int b = w(a); b >= 1; --b) ++cw[b];
    for (int b = 1; b <= k; ++b)
      if (cu[b] > cw[b]) return false;
  }
  return true;
}

// s_beta . w : swap the values beta.i and beta.j in the window.
inline Permutation left_reflect(const Permutation& w, const Root& beta) {
  std::vector<int> out = w.window;
  for (int& v : out) {
    if (v == beta.i) v = beta.j;
    else if (v == beta.j) v = beta.i;
  }
  return Permutation(std::move(out));
}

inline bool bruhat_cover_up(const Permutation& w, const Root& beta) {
  if (!beta.positive()) throw std::invalid_argument("bruhat_cover_up: root not positive");
  return length(left_reflect(w, beta)) == length(w) + 1;
}

// 0-Hecke fold: drop a letter whenever it would decrease the length.
inline Permutation demazure_product(const GenWord& word, int window_size) {
  Permutation w = Permutation::identity(window_size);
  for (int p : word) {
    if (p < 1 || p + 1 > window_size)
      throw std::invalid_argument("generator index out of range: s" + std::to_string(p));
    if (w.window[p - 1] < w.window[p]) std::swap(w.window[p - 1], w.window[p]);
  }
  return w;
}

inline Root act_on_root(const Permutation& w, const Root& r) {
  return Root{w(r.i), w(r.j)};
}

inline Weight act_on_weight(const Permutation& w, const Weight& v) {
  if (static_cast<int>(v.size()) != w.size())
    throw std::invalid_argument("act_on_weight: rank mismatch");
  Weight out(v.size(), 0);
  for (int q = 1; q <= w.size(); ++q) out[w(q) - 1] = v[q - 1];
  return out;
}

// A reduced word for w, peeled off right descents.
inline GenWord reduced_word(const Permutation& w) {
  Permutation u = w;
  GenWord rev;
  while (!u.is_identity()) {
    int p = 0;
    for (int i = 1; i < u.size(); ++i)
      if (u(i) > u(i + 1)) { p = i; break; }
    apply_gen_inplace(u, p);
    rev.push_back(p);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Generators appearing in reduced words of w (well defined across all of them).
inline std::set<int> support(const Permutation& w) {
  GenWord rw = reduced_word(w);
  return std::set<int>(rw.begin(), rw.end());
}

}  // namespace nutamari
