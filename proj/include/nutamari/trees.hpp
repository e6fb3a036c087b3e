#pragma once

// Maximal compatible point sets (nu-trees), ascents and right rotations, the
// rotation lattice, and interior faces (tree, ascent subset).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "nutamari/grid.hpp"

namespace nutamari {

struct NuTree {
  std::vector<GridPoint> nodes;  // sorted by (x, y)

  explicit NuTree(std::vector<GridPoint> n = {}) : nodes(std::move(n)) {
    std::sort(nodes.begin(), nodes.end());
  }

  bool contains(const GridPoint& p) const {
    return std::binary_search(nodes.begin(), nodes.end(), p);
  }
  int size() const { return static_cast<int>(nodes.size()); }

  friend bool operator==(const NuTree& a, const NuTree& b) { return a.nodes == b.nodes; }
  friend bool operator!=(const NuTree& a, const NuTree& b) { return !(a == b); }
  friend bool operator<(const NuTree& a, const NuTree& b) { return a.nodes < b.nodes; }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (i) s += ",";
      s += nodes[i].str();
    }
    return s + "}";
  }
};

inline bool is_compatible_set(const std::vector<GridPoint>& pts, const FerrersRegion& f) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (!compatible(pts[i], pts[j], f)) return false;
  return true;
}

inline bool is_nu_tree(const NuTree& t, const FerrersRegion& f) {
  if (!is_compatible_set(t.nodes, f)) return false;
  for (const auto& p : f.points) {
    if (t.contains(p)) continue;
    bool clashes = false;
    for (const auto& q : t.nodes)
      if (!compatible(p, q, f)) { clashes = true; break; }
    if (!clashes) return false;  // p could be added, so t is not maximal
  }
  return true;
}

inline std::optional<GridPoint> nearest_north(const NuTree& t, const GridPoint& q) {
  std::optional<GridPoint> best;
  for (const auto& p : t.nodes)
    if (p.x == q.x && p.y < q.y && (!best || p.y > best->y)) best = p;
  return best;
}

inline std::optional<GridPoint> nearest_south(const NuTree& t, const GridPoint& q) {
  std::optional<GridPoint> best;
  for (const auto& p : t.nodes)
    if (p.x == q.x && p.y > q.y && (!best || p.y < best->y)) best = p;
  return best;
}

inline std::optional<GridPoint> nearest_east(const NuTree& t, const GridPoint& q) {
  std::optional<GridPoint> best;
  for (const auto& p : t.nodes)
    if (p.y == q.y && p.x > q.x && (!best || p.x < best->x)) best = p;
  return best;
}

inline std::optional<GridPoint> nearest_west(const NuTree& t, const GridPoint& q) {
  std::optional<GridPoint> best;
  for (const auto& p : t.nodes)
    if (p.y == q.y && p.x < q.x && (!best || p.x > best->x)) best = p;
  return best;
}

// Nodes admitting a right rotation: some node due north and some due east.
inline std::vector<GridPoint> ascents(const NuTree& t, const FerrersRegion&) {
  std::vector<GridPoint> out;
  for (const auto& q : t.nodes)
    if (nearest_north(t, q) && nearest_east(t, q)) out.push_back(q);
  return out;
}

// Nodes admitting a left rotation: some node due west and some due south.
inline std::vector<GridPoint> descents(const NuTree& t, const FerrersRegion&) {
  std::vector<GridPoint> out;
  for (const auto& q : t.nodes)
    if (nearest_west(t, q) && nearest_south(t, q)) out.push_back(q);
  return out;
}

struct RotationInfo {
  GridPoint north;   // nearest node above q in its column
  GridPoint east;    // nearest node right of q in its row
  GridPoint target;  // the fourth rectangle corner replacing q
};

inline RotationInfo rotation_info(const NuTree& t, const GridPoint& q) {
  auto p = nearest_north(t, q);
  auto r = nearest_east(t, q);
  if (!p || !r) throw std::invalid_argument("rotate: node is not an ascent " + q.str());
  return RotationInfo{*p, *r, GridPoint{r->x, p->y}};
}

inline NuTree rotate(const NuTree& t, const GridPoint& q, const FerrersRegion& f) {
  if (!t.contains(q)) throw std::invalid_argument("rotate: node not in tree " + q.str());
  RotationInfo info = rotation_info(t, q);
  std::vector<GridPoint> nodes;
  nodes.reserve(t.nodes.size());
  for (const auto& p : t.nodes)
    if (p != q) nodes.push_back(p);
  nodes.push_back(info.target);
  NuTree out(std::move(nodes));
  if (!is_nu_tree(out, f)) throw std::logic_error("rotate: result is not a nu-tree");
  return out;
}

inline NuTree rotate_left(const NuTree& t, const GridPoint& q, const FerrersRegion& f) {
  auto p = nearest_west(t, q);
  auto r = nearest_south(t, q);
  if (!p || !r) throw std::invalid_argument("rotate_left: node is not a descent " + q.str());
  std::vector<GridPoint> nodes;
  for (const auto& u : t.nodes)
    if (u != q) nodes.push_back(u);
  nodes.push_back(GridPoint{p->x, r->y});
  NuTree out(std::move(nodes));
  if (!is_nu_tree(out, f)) throw std::logic_error("rotate_left: result is not a nu-tree");
  return out;
}

// Greedy sweep in reading order; the result is validated to be the bottom of
// the rotation lattice (a nu-tree with no descents).
inline NuTree min_tree(const FerrersRegion& f) {
  std::vector<GridPoint> chosen;
  for (int x = 0; x <= f.width; ++x) {
    for (int y = f.col_max[x]; y >= 0; --y) {
      GridPoint p{x, y};
      bool ok = true;
      for (const auto& q : chosen)
        if (!compatible(p, q, f)) { ok = false; break; }
      if (ok) chosen.push_back(p);
    }
  }
  NuTree t(std::move(chosen));
  if (!is_nu_tree(t, f)) throw std::logic_error("min_tree: greedy set is not maximal");
  if (!descents(t, f).empty()) throw std::logic_error("min_tree: greedy set admits a left rotation");
  return t;
}

// Flip BFS from the minimal tree, walking rotations in both directions.
// Output is canonically sorted, so indices are stable tree ids.
inline std::vector<NuTree> enumerate_trees(const FerrersRegion& f) {
  NuTree start = min_tree(f);
  std::set<NuTree> seen{start};
  std::vector<NuTree> queue{start};
  while (!queue.empty()) {
    NuTree t = queue.back();
    queue.pop_back();
    for (const auto& q : ascents(t, f)) {
      NuTree u = rotate(t, q, f);
      if (seen.insert(u).second) queue.push_back(u);
    }
    for (const auto& q : descents(t, f)) {
      NuTree u = rotate_left(t, q, f);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return std::vector<NuTree>(seen.begin(), seen.end());
}

struct TamariEdge {
  int from = 0;
  int to = 0;
  GridPoint rotated;  // the ascent of `from` that was rotated
};

struct TamariGraph {
  std::vector<NuTree> trees;        // canonical order, index = tree id
  std::vector<TamariEdge> edges;    // increasing rotations
  std::map<NuTree, int> id_of;

  int source() const {  // unique tree with no incoming edge
    std::vector<int> indeg(trees.size(), 0);
    for (const auto& e : edges) ++indeg[e.to];
    int src = -1;
    for (size_t i = 0; i < trees.size(); ++i)
      if (indeg[i] == 0) {
        if (src >= 0) throw std::logic_error("rotation poset has several sources");
        src = static_cast<int>(i);
      }
    return src;
  }
  int sink() const {
    std::vector<int> outdeg(trees.size(), 0);
    for (const auto& e : edges) ++outdeg[e.from];
    int snk = -1;
    for (size_t i = 0; i < trees.size(); ++i)
      if (outdeg[i] == 0) {
        if (snk >= 0) throw std::logic_error("rotation poset has several sinks");
        snk = static_cast<int>(i);
      }
    return snk;
  }
};

inline TamariGraph tamari_hasse(const FerrersRegion& f) {
  TamariGraph g;
  g.trees = enumerate_trees(f);
  for (size_t i = 0; i < g.trees.size(); ++i) g.id_of[g.trees[i]] = static_cast<int>(i);
  for (size_t i = 0; i < g.trees.size(); ++i) {
    for (const auto& q : ascents(g.trees[i], f)) {
      NuTree u = rotate(g.trees[i], q, f);
      g.edges.push_back(TamariEdge{static_cast<int>(i), g.id_of.at(u), q});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const TamariEdge& a, const TamariEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.rotated < b.rotated;
  });
  return g;
}

struct MarkedTree {
  NuTree tree;
  std::vector<GridPoint> marks;  // subset of tree.nodes
};

// An interior face is a pair (tree, subset of its ascents); the face itself
// is the position set of tree \ marks inside the word.
struct InteriorFace {
  int tree_id = -1;
  NuTree base;
  std::vector<GridPoint> marks;       // sorted ascent subset
  std::vector<int> positions;         // I = base \ marks, as word positions
  int dim() const { return static_cast<int>(marks.size()); }
};

inline std::vector<InteriorFace> interior_faces(const FerrersRegion& f) {
  std::vector<NuTree> trees = enumerate_trees(f);
  std::vector<InteriorFace> out;
  std::set<std::vector<int>> seen_positions;
  for (size_t id = 0; id < trees.size(); ++id) {
    const NuTree& t = trees[id];
    std::vector<GridPoint> asc = ascents(t, f);
    int na = static_cast<int>(asc.size());
    for (int mask = 0; mask < (1 << na); ++mask) {
      InteriorFace face;
      face.tree_id = static_cast<int>(id);
      face.base = t;
      for (int b = 0; b < na; ++b)
        if (mask & (1 << b)) face.marks.push_back(asc[b]);
      std::sort(face.marks.begin(), face.marks.end());
      for (const auto& p : t.nodes) {
        if (!std::binary_search(face.marks.begin(), face.marks.end(), p))
          face.positions.push_back(f.position_of(p));
      }
      std::sort(face.positions.begin(), face.positions.end());
      if (!seen_positions.insert(face.positions).second)
        throw std::logic_error("interior_faces: (tree, ascents) representation not unique");
      out.push_back(std::move(face));
    }
  }
  std::sort(out.begin(), out.end(), [](const InteriorFace& a, const InteriorFace& b) {
    if (a.tree_id != b.tree_id) return a.tree_id < b.tree_id;
    return a.marks < b.marks;
  });
  return out;
}

// Tree structure: every non-root node hangs from the nearest node due north,
// or else the nearest node due west. Having both is impossible: the two
// candidates would span a rectangle inside the region with the child at its
// southeast corner, making them incompatible.
inline std::optional<GridPoint> parent_of(const NuTree& t, const GridPoint& p) {
  auto north = nearest_north(t, p);
  auto west = nearest_west(t, p);
  if (north && west) throw std::logic_error("parent_of: node has both north and west parents");
  if (north) return north;
  if (west) return west;
  return std::nullopt;
}

}  // namespace nutamari
