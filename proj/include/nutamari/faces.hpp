#pragma once

// Bounded faces of the brick polyhedron: marked-tree constraint systems and
// their exact feasibility, the bounded-face complex built from interior
// faces, minimal vertices, and the local-cone and root-independence checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nutamari/linalg.hpp"
#include "nutamari/pipedream.hpp"

namespace nutamari {

// Mixed system over x_1..x_nvars: strict pairs (i, j) mean x_i > x_j,
// equal pairs mean x_i = x_j.
struct ConstraintSystem {
  int nvars = 0;
  std::vector<std::pair<int, int>> strict;
  std::vector<std::pair<int, int>> equal;
};

// One constraint per node, from the facet's root at that node's position.
inline ConstraintSystem constraint_system(const SubwordInstance& s, const FerrersRegion& f,
                                          const MarkedTree& mt) {
  for (const auto& m : mt.marks)
    if (!mt.tree.contains(m))
      throw std::invalid_argument("constraint_system: mark is not a tree node");
  ConstraintSystem cs;
  cs.nvars = s.window_size();
  Facet I = tree_facet(mt.tree, f);
  RootWeightTable tab = root_weight_table(s, I);
  for (const auto& t : mt.tree.nodes) {
    Root beta = tab.roots[f.position_of(t) - 1];
    bool marked = std::find(mt.marks.begin(), mt.marks.end(), t) != mt.marks.end();
    if (marked) cs.equal.emplace_back(std::min(beta.i, beta.j), std::max(beta.i, beta.j));
    else cs.strict.emplace_back(beta.i, beta.j);
  }
  std::sort(cs.strict.begin(), cs.strict.end());
  std::sort(cs.equal.begin(), cs.equal.end());
  return cs;
}

struct Feasibility {
  bool feasible = false;
  IntVec witness;  // nvars entries satisfying the system, when feasible
};

// Contract equality classes, then the strict part is feasible iff the
// comparison digraph on classes is acyclic; a topological order gives an
// integer witness.
inline Feasibility feasible(const ConstraintSystem& cs) {
  std::vector<int> parent(cs.nvars + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : cs.equal) parent[find(i)] = find(j);

  std::vector<std::vector<int>> adj(cs.nvars + 1);
  std::vector<int> indeg(cs.nvars + 1, 0);
  for (auto [i, j] : cs.strict) {
    int a = find(i), b = find(j);
    if (a == b) return {};  // x > x
    adj[a].push_back(b);
    ++indeg[b];
  }

  std::vector<int> order;
  std::vector<int> ready;
  for (int v = 1; v <= cs.nvars; ++v)
    if (find(v) == v && indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int u : adj[v])
      if (--indeg[u] == 0) ready.push_back(u);
  }
  int nclasses = 0;
  for (int v = 1; v <= cs.nvars; ++v)
    if (find(v) == v) ++nclasses;
  if (static_cast<int>(order.size()) != nclasses) return {};  // cycle

  std::vector<long long> value(cs.nvars + 1, 0);
  for (size_t rank = 0; rank < order.size(); ++rank)
    value[order[rank]] = static_cast<long long>(order.size() - rank);
  Feasibility out;
  out.feasible = true;
  out.witness.resize(cs.nvars);
  for (int v = 1; v <= cs.nvars; ++v) out.witness[v - 1] = value[find(v)];
  for (auto [i, j] : cs.strict)
    if (!(out.witness[i - 1] > out.witness[j - 1]))
      throw std::logic_error("feasible: witness fails a strict constraint");
  for (auto [i, j] : cs.equal)
    if (out.witness[i - 1] != out.witness[j - 1])
      throw std::logic_error("feasible: witness fails an equality");
  return out;
}

struct BoundedFace {
  InteriorFace face;
  std::vector<int> vertex_tree_ids;  // trees whose facet contains the face
  int dim = 0;
};

struct BoundedFaceComplex {
  FerrersRegion region;
  SubwordInstance instance;
  std::vector<NuTree> trees;
  std::vector<IntVec> bricks;        // by tree id
  std::vector<BoundedFace> faces;    // one per interior face

  // Reverse containment of position sets: smaller interior face = larger cell.
  static bool face_leq(const BoundedFace& a, const BoundedFace& b) {
    return std::includes(a.face.positions.begin(), a.face.positions.end(),
                         b.face.positions.begin(), b.face.positions.end());
  }
};

inline BoundedFaceComplex bounded_faces(const FerrersRegion& f) {
  BoundedFaceComplex c;
  c.region = f;
  c.instance = make_instance(f);
  c.trees = enumerate_trees(f);
  c.bricks.reserve(c.trees.size());
  for (const auto& t : c.trees) c.bricks.push_back(brick_vector_fast(t, f));
  for (auto& face : interior_faces(f)) {
    BoundedFace bf;
    bf.dim = face.dim();
    std::vector<GridPoint> pts;
    for (int k : face.positions) pts.push_back(f.pos_to_point[k - 1]);
    for (size_t id = 0; id < c.trees.size(); ++id) {
      bool all = std::all_of(pts.begin(), pts.end(),
                             [&](const GridPoint& p) { return c.trees[id].contains(p); });
      if (all) bf.vertex_tree_ids.push_back(static_cast<int>(id));
    }
    bf.face = std::move(face);
    c.faces.push_back(std::move(bf));
  }
  return c;
}

inline IntVec default_eta(int window_size) {
  IntVec eta(window_size);
  for (int i = 0; i < window_size; ++i) eta[i] = window_size - i;
  return eta;
}

// Unique vertex minimizing <eta, b(J)> over the face; eta must be positive
// on positive roots (strictly decreasing coordinates suffice). A tie would
// break the convention and is reported as an internal error.
inline int minimal_vertex(const BoundedFaceComplex& c, const BoundedFace& bf, const IntVec& eta) {
  for (size_t i = 0; i + 1 < eta.size(); ++i)
    if (eta[i] <= eta[i + 1])
      throw std::invalid_argument("minimal_vertex: eta must be strictly decreasing");
  long long best = 0;
  int best_id = -1;
  bool tie = false;
  for (int id : bf.vertex_tree_ids) {
    long long v = 0;
    for (size_t i = 0; i < eta.size(); ++i) v += eta[i] * c.bricks[id][i];
    if (best_id < 0 || v < best) { best = v; best_id = id; tie = false; }
    else if (v == best) tie = true;
  }
  if (best_id < 0) throw std::invalid_argument("minimal_vertex: empty face");
  if (tie) throw std::logic_error("minimal_vertex: functional has a tie");
  return best_id;
}

// Every other brick vector lies in the cone of this facet's root
// configuration, based at b(T).
inline bool local_cone_check(const BoundedFaceComplex& c, int tree_id) {
  Facet I = tree_facet(c.trees[tree_id], c.region);
  std::vector<Root> conf = root_configuration(c.instance, I);
  std::vector<IntVec> gens;
  gens.reserve(conf.size());
  for (const auto& r : conf) gens.push_back(r.coords(c.instance.window_size()));
  for (size_t other = 0; other < c.trees.size(); ++other) {
    if (static_cast<int>(other) == tree_id) continue;
    IntVec diff(c.bricks[other].size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = c.bricks[other][i] - c.bricks[tree_id][i];
    if (!cone_contains(gens, diff)) return false;
  }
  return true;
}

// {r(T, a) : a in A} is linearly independent for every ascent subset A.
inline bool independence_check(const SubwordInstance& s, const FerrersRegion& f,
                               const NuTree& t, const std::vector<GridPoint>& marks) {
  Facet I = tree_facet(t, f);
  RootWeightTable tab = root_weight_table(s, I);
  std::vector<IntVec> rows;
  rows.reserve(marks.size());
  for (const auto& a : marks)
    rows.push_back(tab.roots[f.position_of(a) - 1].coords(s.window_size()));
  return rank_rational(rows) == static_cast<int>(marks.size());
}

}  // namespace nutamari
