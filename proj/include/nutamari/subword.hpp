#pragma once

// The subword complex attached to a lattice path: facets as position sets,
// the target permutation, root and weight functions, flips, definitional
// brick vectors, and Bruhat cone generators.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nutamari/trees.hpp"

namespace nutamari {

struct Facet {
  std::vector<int> positions;  // sorted, 1-based

  explicit Facet(std::vector<int> p = {}) : positions(std::move(p)) {
    std::sort(positions.begin(), positions.end());
  }
  bool contains(int k) const {
    return std::binary_search(positions.begin(), positions.end(), k);
  }
  int size() const { return static_cast<int>(positions.size()); }

  friend bool operator==(const Facet& a, const Facet& b) { return a.positions == b.positions; }
  friend bool operator<(const Facet& a, const Facet& b) { return a.positions < b.positions; }
};

struct SubwordInstance {
  GenWord Q;
  Permutation w;
  int m = 0;        // word length
  int rank_n = 0;   // ambient group S_{rank_n + 1}

  int window_size() const { return rank_n + 1; }
};

inline std::vector<int> complement_positions(const Facet& I, int m) {
  std::vector<int> out;
  for (int k = 1; k <= m; ++k)
    if (!I.contains(k)) out.push_back(k);
  return out;
}

// Product over the complement of a tree, in increasing position order. The
// result does not depend on the chosen tree; we use the minimal one.
inline Permutation w_nu(const FerrersRegion& f) {
  NuTree t = min_tree(f);
  Permutation w = Permutation::identity(f.rank_n + 1);
  for (int k = 1; k <= f.m(); ++k)
    if (!t.contains(f.pos_to_point[k - 1])) apply_gen_inplace(w, f.word[k - 1]);
  return w;
}

inline SubwordInstance make_instance(const FerrersRegion& f) {
  SubwordInstance s;
  s.Q = f.word;
  s.m = f.m();
  s.rank_n = f.rank_n;
  s.w = w_nu(f);
  return s;
}

inline bool is_facet(const SubwordInstance& s, const Facet& I) {
  if (I.size() != s.m - length(s.w)) return false;
  Permutation u = Permutation::identity(s.window_size());
  for (int k = 1; k <= s.m; ++k) {
    if (I.contains(k)) continue;
    int p = s.Q[k - 1];
    if (u.window[p - 1] > u.window[p]) return false;  // complement not reduced
    apply_gen_inplace(u, p);
  }
  return u == s.w;
}

inline Facet tree_facet(const NuTree& t, const FerrersRegion& f) {
  std::vector<int> pos;
  pos.reserve(t.nodes.size());
  for (const auto& p : t.nodes) pos.push_back(f.position_of(p));
  return Facet(std::move(pos));
}

inline NuTree facet_tree(const Facet& I, const FerrersRegion& f, const SubwordInstance& s) {
  if (!is_facet(s, I))
    throw std::invalid_argument("facet_tree: complement is not a reduced word for the target");
  std::vector<GridPoint> nodes;
  nodes.reserve(I.positions.size());
  for (int k : I.positions) nodes.push_back(f.pos_to_point[k - 1]);
  return NuTree(std::move(nodes));
}

// Root and weight functions in one sweep: at step k the accumulated prefix
// permutation is the product of the complement letters before k.
struct RootWeightTable {
  std::vector<Root> roots;      // r(I, k) at index k-1
  std::vector<Weight> weights;  // w(I, k) at index k-1
};

inline RootWeightTable root_weight_table(const SubwordInstance& s, const Facet& I) {
  RootWeightTable tab;
  tab.roots.reserve(s.m);
  tab.weights.reserve(s.m);
  Permutation u = Permutation::identity(s.window_size());
  for (int k = 1; k <= s.m; ++k) {
    int p = s.Q[k - 1];
    tab.roots.push_back(act_on_root(u, simple_root(p)));
    tab.weights.push_back(act_on_weight(u, fundamental_weight(p, s.window_size())));
    if (!I.contains(k)) apply_gen_inplace(u, p);
  }
  return tab;
}

inline Root root_function(const SubwordInstance& s, const Facet& I, int k) {
  if (k < 1 || k > s.m) throw std::out_of_range("root_function: position out of range");
  return root_weight_table(s, I).roots[k - 1];
}

inline Weight weight_function(const SubwordInstance& s, const Facet& I, int k) {
  if (k < 1 || k > s.m) throw std::out_of_range("weight_function: position out of range");
  return root_weight_table(s, I).weights[k - 1];
}

// Multiset of roots at the facet's own positions, as a sorted list.
inline std::vector<Root> root_configuration(const SubwordInstance& s, const Facet& I) {
  RootWeightTable tab = root_weight_table(s, I);
  std::vector<Root> out;
  out.reserve(I.size());
  for (int k : I.positions) out.push_back(tab.roots[k - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

inline IntVec brick_vector_def(const SubwordInstance& s, const Facet& I) {
  RootWeightTable tab = root_weight_table(s, I);
  IntVec b(s.window_size(), 0);
  for (const auto& w : tab.weights)
    for (size_t c = 0; c < b.size(); ++c) b[c] -= w[c];
  return b;
}

// The unique exchange partner of k in I, if any.
inline std::optional<int> flip_partner(const SubwordInstance& s, const Facet& I, int k) {
  if (!I.contains(k)) throw std::invalid_argument("flip: position not in facet");
  std::optional<int> partner;
  for (int k2 = 1; k2 <= s.m; ++k2) {
    if (I.contains(k2)) continue;
    std::vector<int> pos;
    pos.reserve(I.size());
    for (int p : I.positions)
      if (p != k) pos.push_back(p);
    pos.push_back(k2);
    if (is_facet(s, Facet(std::move(pos)))) {
      if (partner) throw std::logic_error("flip: exchange partner not unique");
      partner = k2;
    }
  }
  return partner;
}

inline Facet flip(const SubwordInstance& s, const Facet& I, int k) {
  auto partner = flip_partner(s, I, k);
  if (!partner) throw std::invalid_argument("flip: position is not flippable");
  std::vector<int> pos;
  for (int p : I.positions)
    if (p != k) pos.push_back(p);
  pos.push_back(*partner);
  return Facet(std::move(pos));
}

inline bool is_increasing_flip(const SubwordInstance& s, const Facet& I, int k) {
  return root_weight_table(s, I).roots[k - 1].positive();
}

// Generators of the Bruhat cone: positive roots beta with
// w covered by s_beta.w and s_beta.w below the Demazure bound. The bound is
// taken over the subword of letters in the support of w; letters outside the
// support lie in every facet and contribute translation rays only, and the
// cone of the flippable core is the recession cone of the bounded picture.
inline std::vector<Root> bruhat_cone_generators_for(const GenWord& Q, const Permutation& w,
                                                    int window_size) {
  Permutation dem = demazure_product(Q, window_size);
  std::vector<Root> out;
  for (int i = 1; i <= window_size; ++i) {
    for (int j = i + 1; j <= window_size; ++j) {
      Root beta{i, j};
      if (!bruhat_cover_up(w, beta)) continue;
      if (bruhat_leq(left_reflect(w, beta), dem)) out.push_back(beta);
    }
  }
  return out;
}

inline std::vector<Root> bruhat_cone(const SubwordInstance& s) {
  auto supp = support(s.w);
  GenWord core;
  for (int p : s.Q)
    if (supp.count(p)) core.push_back(p);
  return bruhat_cone_generators_for(core, s.w, s.window_size());
}

// Literal definition against the Demazure product of the full word; a
// superset of the core cone (the extra generators point along the
// translation rays of the unbounded part).
inline std::vector<Root> bruhat_cone_full(const SubwordInstance& s) {
  return bruhat_cone_generators_for(s.Q, s.w, s.window_size());
}

}  // namespace nutamari
