#pragma once

// Dimension-reducing projection for staircase paths N E^{k_n} ... N E^{k_1}
// (no two consecutive north steps): coordinate reduction, index groups,
// group-plus-prefix sums, and the equivalent area description of the
// resulting vertex coordinates.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutamari/pipedream.hpp"

namespace nutamari {

struct ProjectionSpec {
  std::vector<int> ks;    // k_1..k_n; k_1 is the final (rightmost) block
  int blocks = 0;         // n
  int reduced_dim = 0;    // N = n + sum(k_i - 1)
  std::vector<std::vector<int>> m_sets;  // M_1..M_n, sorted, partition [N]
  long long first_coord = 0;  // constant first entry of every brick vector
  long long last_coord = 0;   // constant last entry
};

inline bool is_staircase_normal(const LatticePath& p, std::string* reason = nullptr) {
  auto fail = [&](const std::string& r) {
    if (reason) *reason = r;
    return false;
  };
  if (p.steps.empty()) return fail("empty path");
  if (p.steps.front() != 'N') return fail("path must start with a north step");
  if (p.steps.back() != 'E') return fail("path must end with an east step");
  for (size_t i = 1; i < p.steps.size(); ++i)
    if (p.steps[i] == 'N' && p.steps[i - 1] == 'N')
      return fail("consecutive north steps");
  return true;
}

// Prepend N / append E when missing. Consecutive north steps are untouched;
// they make the path permanently non-staircase.
inline LatticePath normalize_path(const LatticePath& p) {
  LatticePath out = p;
  if (out.steps.empty() || out.steps.front() != 'N') out.steps.insert(out.steps.begin(), 'N');
  if (out.steps.back() != 'E') out.steps.push_back('E');
  return out;
}

inline ProjectionSpec parse_staircase(const FerrersRegion& f) {
  std::string reason;
  if (!is_staircase_normal(f.path, &reason))
    throw std::invalid_argument("not a staircase path: " + reason);

  // Blocks read left to right carry k_n..k_1.
  std::vector<int> left_to_right;
  for (char s : f.path.steps) {
    if (s == 'N') left_to_right.push_back(0);
    else ++left_to_right.back();
  }
  ProjectionSpec spec;
  spec.blocks = static_cast<int>(left_to_right.size());
  spec.ks.assign(left_to_right.rbegin(), left_to_right.rend());
  spec.reduced_dim = spec.blocks;
  for (int k : spec.ks) spec.reduced_dim += k - 1;
  if (spec.reduced_dim + 2 != f.rank_n + 1)
    throw std::logic_error("parse_staircase: reduced dimension mismatch");

  // M~_j takes the last (k_j - 1) untaken elements of [N]; M_j adds {j}.
  std::vector<bool> taken(spec.reduced_dim + 1, false);
  spec.m_sets.resize(spec.blocks);
  for (int j = 1; j <= spec.blocks; ++j) {
    int want = spec.ks[j - 1] - 1;
    std::vector<int> tilde;
    for (int v = spec.reduced_dim; v >= 1 && static_cast<int>(tilde.size()) < want; --v)
      if (!taken[v]) { taken[v] = true; tilde.push_back(v); }
    if (static_cast<int>(tilde.size()) != want || taken[j])
      throw std::logic_error("parse_staircase: index groups do not partition");
    taken[j] = true;
    tilde.push_back(j);
    std::sort(tilde.begin(), tilde.end());
    spec.m_sets[j - 1] = std::move(tilde);
  }
  for (int v = 1; v <= spec.reduced_dim; ++v)
    if (!taken[v]) throw std::logic_error("parse_staircase: index groups do not cover");

  spec.first_coord = -static_cast<long long>(f.points.size());
  spec.last_coord = 0;
  return spec;
}

// Drop the constant first and last entries.
inline IntVec reduce(const IntVec& b, const ProjectionSpec& spec) {
  if (static_cast<int>(b.size()) != spec.reduced_dim + 2)
    throw std::invalid_argument("reduce: vector length mismatch");
  if (b.front() != spec.first_coord || b.back() != spec.last_coord)
    throw std::logic_error("reduce: first/last coordinate is not the expected constant");
  return IntVec(b.begin() + 1, b.end() - 1);
}

// Group sums (x_{M_1}, ..., x_{M_n}).
inline IntVec project_groups(const IntVec& bt, const ProjectionSpec& spec) {
  if (static_cast<int>(bt.size()) != spec.reduced_dim)
    throw std::invalid_argument("project_groups: vector length mismatch");
  IntVec out(spec.blocks, 0);
  for (int j = 0; j < spec.blocks; ++j)
    for (int idx : spec.m_sets[j]) out[j] += bt[idx - 1];
  return out;
}

// Group sums followed by prefix sums of the first n-1 groups.
inline IntVec project(const IntVec& bt, const ProjectionSpec& spec) {
  IntVec groups = project_groups(bt, spec);
  IntVec out(spec.blocks - 1, 0);
  long long acc = 0;
  for (int j = 0; j + 1 < spec.blocks; ++j) {
    acc += groups[j];
    out[j] = acc;
  }
  return out;
}

inline IntVec projected_brick(const NuTree& t, const FerrersRegion& f, const ProjectionSpec& spec) {
  return project(reduce(brick_vector_fast(t, f), spec), spec);
}

// Translation-normalized coordinates: zero at the minimal tree.
inline IntVec y_coords(const NuTree& t, const FerrersRegion& f, const ProjectionSpec& spec) {
  IntVec base = projected_brick(min_tree(f), f, spec);
  IntVec y = projected_brick(t, f, spec);
  for (size_t i = 0; i < y.size(); ++i) y[i] -= base[i];
  return y;
}

// y_i as an area: walk the tree path from the root down to the leftmost node
// on row i and count the boxes to its left, one column value per row band.
inline IntVec area_coords(const NuTree& t, const FerrersRegion& f) {
  std::string reason;
  if (!is_staircase_normal(f.path, &reason))
    throw std::invalid_argument("area_coords: not a staircase path: " + reason);
  int n = f.height;  // block count equals the number of north steps
  IntVec out(n - 1, 0);
  for (int level = 1; level <= n - 1; ++level) {
    std::optional<GridPoint> leftmost;
    for (const auto& p : t.nodes)
      if (p.y == level && (!leftmost || p.x < leftmost->x)) leftmost = p;
    if (!leftmost) throw std::logic_error("area_coords: no tree node on a row");
    long long area = 0;
    GridPoint cur = *leftmost;
    while (cur != GridPoint{0, 0}) {
      auto par = parent_of(t, cur);
      if (!par) throw std::logic_error("area_coords: node detached from the root");
      if (par->x == cur.x) area += static_cast<long long>(cur.x) * (cur.y - par->y);
      cur = *par;
    }
    out[level - 1] = area;
  }
  return out;
}

// Boxes swept by rotating at q: the rectangle between q, its north partner
// and its east partner.
inline long long rotation_area(const NuTree& t, const GridPoint& q) {
  RotationInfo info = rotation_info(t, q);
  return static_cast<long long>(info.east.x - q.x) * (q.y - info.north.y);
}

}  // namespace nutamari
