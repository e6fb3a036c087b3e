#pragma once

// Lattice paths, the Ferrers region weakly above a path, its lattice point
// set with diagonal labels, point compatibility, and the reading order that
// produces the associated word.
//
// Coordinates: origin at the top-left corner of the region, x grows east,
// y grows south, so the diagonal label of a point is d(p) = x + y.

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutamari/coxeter.hpp"

namespace nutamari {

struct LatticePath {
  std::vector<char> steps;  // 'N' or 'E'

  int easts() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), 'E'));
  }
  int norths() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), 'N'));
  }
  // All-E or all-N paths still yield a (single facet) complex.
  bool degenerate() const { return easts() == 0 || norths() == 0; }

  std::string str() const { return std::string(steps.begin(), steps.end()); }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps == b.steps;
  }
};

inline LatticePath parse_path(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty path");
  LatticePath p;
  p.steps.reserve(text.size());
  for (char c : text) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'N' && u != 'E')
      throw std::invalid_argument(std::string("invalid path character '") + c + "'");
    p.steps.push_back(u);
  }
  return p;
}

struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const GridPoint& a, const GridPoint& b) { return !(a == b); }
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }

  std::string str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

struct FerrersRegion {
  LatticePath path;
  int width = 0;   // number of east steps
  int height = 0;  // number of north steps
  std::vector<int> col_max;  // per column x: largest admissible y
  std::vector<int> row_max;  // per row y: largest admissible x
  std::vector<GridPoint> points;  // canonical (x,y) order
  int rank_n = 0;  // letters are s_1..s_rank_n, ambient group S_{rank_n+1}

  // Reading order: columns left to right, within a column bottom to top.
  GenWord word;                          // letter at position k is word[k-1]
  std::vector<GridPoint> pos_to_point;   // positions 1..m -> points
  std::map<GridPoint, int> point_to_pos; // inverse, 1-based

  int m() const { return static_cast<int>(word.size()); }

  bool contains(const GridPoint& p) const {
    return p.x >= 0 && p.x <= width && p.y >= 0 && p.y <= col_max[p.x];
  }

  int d(const GridPoint& p) const { return p.x + p.y; }

  int position_of(const GridPoint& p) const {
    auto it = point_to_pos.find(p);
    if (it == point_to_pos.end())
      throw std::out_of_range("point outside region: " + p.str());
    return it->second;
  }
};

inline FerrersRegion build_region(const LatticePath& path) {
  FerrersRegion f;
  f.path = path;
  f.width = path.easts();
  f.height = path.norths();

  // min_height[x] = path height just before the x-th east step (math
  // coordinates); a column x admits the rows y <= height - min_height[x].
  std::vector<int> min_height(f.width + 1, 0);
  int n_seen = 0, e_seen = 0;
  for (char s : path.steps) {
    if (s == 'N') ++n_seen;
    else min_height[++e_seen] = n_seen;
  }
  f.col_max.resize(f.width + 1);
  for (int x = 0; x <= f.width; ++x) f.col_max[x] = f.height - min_height[x];

  f.row_max.assign(f.height + 1, 0);
  for (int y = 0; y <= f.height; ++y) {
    int mx = 0;
    while (mx + 1 <= f.width && f.col_max[mx + 1] >= y) ++mx;
    f.row_max[y] = mx;
  }

  for (int x = 0; x <= f.width; ++x)
    for (int y = 0; y <= f.col_max[x]; ++y)
      f.points.push_back(GridPoint{x, y});
  std::sort(f.points.begin(), f.points.end());

  f.rank_n = 0;
  for (const auto& p : f.points) f.rank_n = std::max(f.rank_n, p.x + p.y + 1);

  for (int x = 0; x <= f.width; ++x) {
    for (int y = f.col_max[x]; y >= 0; --y) {
      GridPoint p{x, y};
      f.word.push_back(f.d(p) + 1);
      f.pos_to_point.push_back(p);
      f.point_to_pos[p] = static_cast<int>(f.word.size());
    }
  }
  return f;
}

// Two points are incompatible exactly when one is strictly southwest of the
// other and the rectangle they span stays inside the region; the rectangle
// fits iff its southeast corner is an admissible point.
inline bool compatible(const GridPoint& p, const GridPoint& q, const FerrersRegion& f) {
  if (!f.contains(p)) throw std::out_of_range("point outside region: " + p.str());
  if (!f.contains(q)) throw std::out_of_range("point outside region: " + q.str());
  const GridPoint* sw = nullptr;
  const GridPoint* ne = nullptr;
  if (p.x < q.x && p.y > q.y) { sw = &p; ne = &q; }
  else if (q.x < p.x && q.y > p.y) { sw = &q; ne = &p; }
  else return true;
  return !f.contains(GridPoint{ne->x, sw->y});
}

}  // namespace nutamari
