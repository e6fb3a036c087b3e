#pragma once

// Cross-module invariant suite backing the `check` command: every structural
// claim the library relies on, tested exhaustively on one region. Oracles
// here are deliberately naive (subset enumeration, definitional recomputes)
// so they stay independent of the production code paths they vet.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nutamari/bundle.hpp"

namespace nutamari {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// All maximal pairwise-compatible subsets, by scanning every subset.
inline std::vector<NuTree> oracle_trees(const FerrersRegion& f) {
  int n = static_cast<int>(f.points.size());
  if (n > 24) throw std::invalid_argument("oracle_trees: region too large");
  std::vector<std::vector<bool>> comp(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comp[i][j] = compatible(f.points[i], f.points[j], f);
  std::vector<NuTree> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1) && !comp[i][j]) ok = false;
    }
    if (!ok) continue;
    bool maximal = true;
    for (int p = 0; p < n && maximal; ++p) {
      if (mask >> p & 1) continue;
      bool fits = true;
      for (int i = 0; i < n && fits; ++i)
        if ((mask >> i & 1) && !comp[p][i]) fits = false;
      if (fits) maximal = false;
    }
    if (!maximal) continue;
    std::vector<GridPoint> pts;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) pts.push_back(f.points[i]);
    out.push_back(NuTree(std::move(pts)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void add_result(std::vector<CheckResult>& rs, const std::string& name, bool pass,
                       const std::string& detail = "") {
  rs.push_back(CheckResult{name, pass, pass ? "" : detail});
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite(const FerrersRegion& f) {
  using detail::add_result;
  std::vector<CheckResult> rs;

  SubwordInstance s = make_instance(f);
  std::vector<NuTree> trees = enumerate_trees(f);
  std::vector<Facet> facets;
  for (const auto& t : trees) facets.push_back(tree_facet(t, f));

  // Flip search against subset enumeration.
  add_result(rs, "tree-enumeration-oracle", trees == oracle_trees(f),
             "flip BFS and maximal-set enumeration disagree");

  // Complements of facets are reduced words for the target element.
  bool reduced_ok = true;
  for (const auto& I : facets)
    if (!is_facet(s, I)) reduced_ok = false;
  add_result(rs, "facet-complements-reduced", reduced_ok,
             "a tree complement is not a reduced word for the target");

  // Tree cardinality law.
  bool size_ok = true;
  for (const auto& t : trees)
    if (t.size() != s.m - length(s.w)) size_ok = false;
  add_result(rs, "facet-size", size_ok, "tree size differs from m - length(w)");

  // Pipe dreams: exit permutation, fast brick vectors, weight description,
  // elbow labels, turn bound.
  bool exit_ok = true, brick_ok = true, weight_ok = true, elbow_ok = true, turns_ok = true;
  std::vector<IntVec> bricks;
  for (size_t id = 0; id < trees.size(); ++id) {
    PipeDream pd = pipe_dream(trees[id], f);
    if (exit_permutation(pd) != s.w) exit_ok = false;
    IntVec fast = brick_vector_fast(trees[id], f);
    bricks.push_back(fast);
    if (fast != brick_vector_def(s, facets[id])) brick_ok = false;
    RootWeightTable tab = root_weight_table(s, facets[id]);
    for (int k = 1; k <= s.m; ++k) {
      Weight expect(s.window_size(), 0);
      for (int i = 1; i <= s.window_size(); ++i)
        if (pipe_above_point(pd, i, f.pos_to_point[k - 1])) expect[i - 1] = 1;
      if (expect != tab.weights[k - 1]) weight_ok = false;
    }
    for (const auto& node : trees[id].nodes) {
      auto [west, south] = elbow_pipes(pd, node);
      Root r = tab.roots[f.position_of(node) - 1];
      if (r != Root{west, south}) elbow_ok = false;
    }
    if (max_turns_in_region(pd) > 2) turns_ok = false;
  }
  add_result(rs, "exit-permutation-constant", exit_ok, "exit permutation differs from w");
  add_result(rs, "brick-fast-equals-def", brick_ok, "point counts disagree with weight sums");
  add_result(rs, "weights-count-pipes", weight_ok, "weight function is not the above-pipe indicator");
  add_result(rs, "roots-label-elbows", elbow_ok, "facet root differs from its elbow pipe pair");
  add_result(rs, "pipe-turn-bound", turns_ok, "a pipe turns more than twice inside the region");

  // First/last brick coordinates are constant across trees.
  bool const_ok = true;
  for (const auto& b : bricks)
    if (b.front() != -static_cast<long long>(f.points.size()) || b.back() != 0) const_ok = false;
  add_result(rs, "edge-coordinates-constant", const_ok,
             "first/last brick coordinate is not the expected constant");

  // Flips: rotations and facet flips agree; the exchange rule reflects the
  // roots strictly between the exchanged positions; brick vectors move by a
  // positive multiple of the flipped root.
  TamariGraph g = tamari_hasse(f);
  bool flip_rot_ok = true, exchange_ok = true, delta_ok = true, crossing_swap_ok = true;
  for (size_t id = 0; id < trees.size(); ++id) {
    const Facet& I = facets[id];
    RootWeightTable tab = root_weight_table(s, I);
    for (int k : I.positions) {
      auto partner = flip_partner(s, I, k);
      if (!partner) continue;
      Facet J = flip(s, I, k);
      Root beta = tab.roots[k - 1];
      if (beta.positive() != is_increasing_flip(s, I, k)) exchange_ok = false;
      RootWeightTable tab2 = root_weight_table(s, J);
      int lo = std::min(k, *partner), hi = std::max(k, *partner);
      for (int pos = 1; pos <= s.m; ++pos) {
        Root expect = tab.roots[pos - 1];
        if (pos > lo && pos <= hi) {
          auto swap_val = [&](int v) { return v == beta.i ? beta.j : v == beta.j ? beta.i : v; };
          expect = Root{swap_val(expect.i), swap_val(expect.j)};
        }
        if (tab2.roots[pos - 1] != expect) exchange_ok = false;
      }
      IntVec b1 = brick_vector_def(s, I), b2 = brick_vector_def(s, J);
      IntVec diff(b1.size());
      for (size_t c = 0; c < b1.size(); ++c) diff[c] = b2[c] - b1[c];
      IntVec root = beta.coords(s.window_size());
      long long num = diff[beta.i - 1];
      bool prop = num != 0;
      for (size_t c = 0; c < diff.size(); ++c)
        if (diff[c] != num * root[c]) prop = false;
      if (!prop || num <= 0) delta_ok = false;  // b moves by a positive multiple of the root
    }
  }
  for (const auto& e : g.edges) {
    const NuTree& t1 = trees[e.from];
    const NuTree& t2 = trees[e.to];
    if (rotate(t1, e.rotated, f) != t2) flip_rot_ok = false;
    Facet I1 = facets[e.from];
    int k = f.position_of(e.rotated);
    if (flip(s, I1, k) != facets[e.to]) flip_rot_ok = false;
    // Rotation exchanges the elbow of two pipes with their unique crossing.
    PipeDream pd1 = pipe_dream(t1, f);
    PipeDream pd2 = pipe_dream(t2, f);
    auto [w1, s1] = elbow_pipes(pd1, e.rotated);
    auto use = pd2.cell_use.find(e.rotated);
    if (use == pd2.cell_use.end() || !pd2.is_cross(e.rotated.x, e.rotated.y) ||
        std::minmax(use->second.west, use->second.south) != std::minmax(w1, s1))
      crossing_swap_ok = false;
  }
  add_result(rs, "flips-are-rotations", flip_rot_ok, "facet flip disagrees with tree rotation");
  add_result(rs, "flip-exchange-rule", exchange_ok, "root table after a flip violates the exchange rule");
  add_result(rs, "brick-flip-delta", delta_ok, "brick difference is not a positive multiple of the root");
  add_result(rs, "rotation-swaps-crossing", crossing_swap_ok,
             "rotated elbow does not become the crossing of the same pipes");

  // Target element is independent of the tree used to compute it.
  bool w_ok = true;
  for (const auto& I : facets) {
    Permutation u = Permutation::identity(s.window_size());
    for (int k = 1; k <= s.m; ++k)
      if (!I.contains(k)) apply_gen_inplace(u, s.Q[k - 1]);
    if (u != s.w) w_ok = false;
  }
  add_result(rs, "target-tree-independent", w_ok, "complement products differ between trees");

  // Bounded faces: feasibility of every marked ascent subset, unique
  // representation, root independence, dimension law, vertex counts,
  // minimal vertices, anti-isomorphism, skeleton.
  BoundedFaceComplex complex = bounded_faces(f);
  bool feas_ok = true, indep_ok = true, dim_ok = true, edge2_ok = true, min_ok = true;
  IntVec eta = default_eta(s.window_size());
  for (const auto& bf : complex.faces) {
    MarkedTree mt{bf.face.base, bf.face.marks};
    if (!feasible(constraint_system(s, f, mt)).feasible) feas_ok = false;
    if (!independence_check(s, f, bf.face.base, bf.face.marks)) indep_ok = false;
    std::vector<IntVec> verts;
    for (int id : bf.vertex_tree_ids) verts.push_back(complex.bricks[id]);
    if (affine_rank(verts) != bf.dim) dim_ok = false;
    if (bf.dim == 1 && bf.vertex_tree_ids.size() != 2) edge2_ok = false;
    if (minimal_vertex(complex, bf, eta) != bf.face.tree_id) min_ok = false;
  }
  add_result(rs, "marked-ascents-feasible", feas_ok, "an ascent-marked system is infeasible");
  add_result(rs, "roots-independent", indep_ok, "ascent roots are linearly dependent");
  add_result(rs, "face-dimension-law", dim_ok, "affine rank of a face differs from |A|");
  add_result(rs, "edges-have-two-vertices", edge2_ok, "a 1-face has more than two vertex trees");
  add_result(rs, "minimal-vertex-is-base", min_ok, "functional minimum is not the base tree");

  bool anti_ok = true;
  for (const auto& f1 : complex.faces) {
    for (const auto& f2 : complex.faces) {
      bool i_leq = std::includes(f2.face.positions.begin(), f2.face.positions.end(),
                                 f1.face.positions.begin(), f1.face.positions.end());
      bool v_geq = std::includes(f1.vertex_tree_ids.begin(), f1.vertex_tree_ids.end(),
                                 f2.vertex_tree_ids.begin(), f2.vertex_tree_ids.end());
      if (i_leq != v_geq) anti_ok = false;
    }
  }
  add_result(rs, "face-anti-isomorphism", anti_ok,
             "interior-face containment does not reverse vertex-set containment");

  std::set<std::pair<int, int>> hasse_edges, skel_edges;
  for (const auto& e : g.edges) hasse_edges.insert(std::minmax(e.from, e.to));
  for (const auto& bf : complex.faces)
    if (bf.dim == 1 && bf.vertex_tree_ids.size() == 2)
      skel_edges.insert({bf.vertex_tree_ids[0], bf.vertex_tree_ids[1]});
  add_result(rs, "one-skeleton-is-hasse", hasse_edges == skel_edges,
             "1-skeleton differs from the rotation Hasse diagram");

  // Rotation poset is a lattice (unique joins and meets).
  {
    size_t nt = trees.size();
    std::vector<std::vector<bool>> reach(nt, std::vector<bool>(nt, false));
    for (size_t i = 0; i < nt; ++i) reach[i][i] = true;
    std::vector<std::vector<int>> up(nt);
    for (const auto& e : g.edges) up[e.from].push_back(e.to);
    // transitive closure by DFS from each node
    for (size_t i = 0; i < nt; ++i) {
      std::vector<int> stack{static_cast<int>(i)};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : up[v])
          if (!reach[i][u]) { reach[i][u] = true; stack.push_back(u); }
      }
    }
    auto unique_join = [&](size_t a, size_t b) {
      std::vector<int> ubs;
      for (size_t c = 0; c < nt; ++c)
        if (reach[a][c] && reach[b][c]) ubs.push_back(static_cast<int>(c));
      for (int c : ubs) {
        bool least = true;
        for (int d : ubs)
          if (!reach[c][d]) { least = false; break; }
        if (least) return true;
      }
      return false;
    };
    auto unique_meet = [&](size_t a, size_t b) {
      std::vector<int> lbs;
      for (size_t c = 0; c < nt; ++c)
        if (reach[c][a] && reach[c][b]) lbs.push_back(static_cast<int>(c));
      for (int c : lbs) {
        bool greatest = true;
        for (int d : lbs)
          if (!reach[d][c]) { greatest = false; break; }
        if (greatest) return true;
      }
      return false;
    };
    bool lattice_ok = g.source() >= 0 && g.sink() >= 0;
    for (size_t a = 0; a < nt && lattice_ok; ++a)
      for (size_t b = a + 1; b < nt && lattice_ok; ++b)
        if (!unique_join(a, b) || !unique_meet(a, b)) lattice_ok = false;
    add_result(rs, "rotation-poset-lattice", lattice_ok, "joins or meets missing");
  }

  // Local cones and cone generators.
  bool local_ok = true;
  for (size_t id = 0; id < trees.size(); ++id)
    if (!local_cone_check(complex, static_cast<int>(id))) local_ok = false;
  add_result(rs, "local-cones", local_ok,
             "a brick difference leaves the facet's root cone");

  bool cone_ok = true;
  std::vector<Root> gens = bruhat_cone(s);
  for (const auto& I : facets) {
    std::vector<Root> conf = root_configuration(s, I);
    std::vector<IntVec> cg;
    for (const auto& r : conf) cg.push_back(r.coords(s.window_size()));
    for (const auto& r : gens)
      if (!cone_contains(cg, r.coords(s.window_size()))) cone_ok = false;
    for (const auto& r : bruhat_cone_full(s))
      if (!cone_contains(cg, r.coords(s.window_size()))) cone_ok = false;
  }
  add_result(rs, "cone-in-facet-cones", cone_ok,
             "a cone generator escapes some facet's root cone");

  // Projection identities, staircase paths only.
  if (is_staircase_normal(f.path)) {
    ProjectionSpec spec = parse_staircase(f);
    bool y_ok = true;
    std::vector<IntVec> ys;
    for (const auto& t : trees) {
      IntVec y = y_coords(t, f, spec);
      ys.push_back(y);
      if (y != area_coords(t, f)) y_ok = false;
      for (long long v : y)
        if (v < 0) y_ok = false;
    }
    add_result(rs, "y-equals-area", y_ok, "projected coordinates differ from path areas");

    bool update_ok = true;
    for (const auto& e : g.edges) {
      const IntVec& b1 = complex.bricks[e.from];
      const IntVec& b2 = complex.bricks[e.to];
      long long area = rotation_area(trees[e.from], e.rotated);
      int pi = -1, pj = -1;
      for (size_t c = 0; c < b1.size(); ++c) {
        long long d = b2[c] - b1[c];
        if (d == area && pi < 0) pi = static_cast<int>(c) + 1;
        else if (d == -area && pj < 0) pj = static_cast<int>(c) + 1;
        else if (d != 0) update_ok = false;
      }
      if (pi < 0 || pj < 0 || area <= 0) { update_ok = false; continue; }
      auto group_of = [&](int reduced_index) {
        for (int gidx = 0; gidx < spec.blocks; ++gidx)
          for (int v : spec.m_sets[gidx])
            if (v == reduced_index) return gidx + 1;
        return -1;
      };
      int gi = group_of(pi - 1), gj = group_of(pj - 1);
      if (gi < 0 || gj < 0) { update_ok = false; continue; }
      const IntVec& y1 = ys[e.from];
      const IntVec& y2 = ys[e.to];
      for (int c = 1; c <= spec.blocks - 1; ++c) {
        long long expect = (c >= gi && c <= gj - 1) ? area : 0;
        if (y2[c - 1] - y1[c - 1] != expect) update_ok = false;
      }
    }
    add_result(rs, "flip-update-law", update_ok,
               "a rotation does not shift y by its area on a coordinate range");

    int max_asc = 0;
    for (const auto& t : trees)
      max_asc = std::max(max_asc, static_cast<int>(ascents(t, f).size()));
    bool dim_claim = affine_rank(ys) == spec.blocks - 1 && max_asc == spec.blocks - 1;
    add_result(rs, "projected-dimension", dim_claim,
               "projected vertex set does not span dimension n-1");

    bool face_rank_ok = true;
    for (const auto& bf : complex.faces) {
      std::vector<IntVec> pts;
      for (int id : bf.vertex_tree_ids) pts.push_back(ys[id]);
      if (affine_rank(pts) != bf.dim) face_rank_ok = false;
    }
    add_result(rs, "projection-preserves-faces", face_rank_ok,
               "a face collapses under the projection");
  }

  return rs;
}

}  // namespace nutamari
