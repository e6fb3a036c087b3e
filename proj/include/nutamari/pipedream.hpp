#pragma once

// Pipe dreams for nu-trees: a staircase board filled with crosses and
// elbows, pipe tracing, exit permutations, and the fast brick vector by
// counting region points below each pipe.
//
// Board cells live at x + y <= n (n = region rank). A cell inside the region
// holds an elbow iff it is a tree node; all cells outside the region are
// elbows. Pipes enter on the left edge, numbered 1..n+1 top to bottom, move
// east/north (a cross passes straight through, an elbow turns west->north
// and south->east), and exit through the top edge.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutamari/subword.hpp"

namespace nutamari {

struct PipeDream {
  int n = 0;  // staircase side; cells satisfy x + y <= n
  NuTree tree;
  std::vector<std::vector<bool>> cross;  // [y][x], true = crossing tile

  struct Pipe {
    int exit_col = -1;
    std::vector<int> west_entry;          // per column: row entered moving east, -1 if none
    std::vector<GridPoint> region_elbows; // elbow cells visited inside the region
    std::vector<GridPoint> region_turns;  // west->north arcs inside the region
  };
  std::vector<Pipe> pipes;  // index i-1 holds pipe i

  // At an elbow cell: which pipe used the west->north arc and which the
  // south->east arc (0 = unused). At a cross: the east- and north-mover.
  struct CellUse { int west = 0; int south = 0; };
  std::map<GridPoint, CellUse> cell_use;

  bool is_cross(int x, int y) const { return cross[y][x]; }
};

inline PipeDream pipe_dream(const NuTree& t, const FerrersRegion& f) {
  PipeDream pd;
  pd.n = f.rank_n;
  pd.tree = t;
  pd.cross.assign(pd.n + 1, std::vector<bool>(pd.n + 1, false));
  for (const auto& p : f.points)
    if (!t.contains(p)) pd.cross[p.y][p.x] = true;

  int npipes = pd.n + 1;
  pd.pipes.assign(npipes, PipeDream::Pipe{});
  std::map<std::pair<int, int>, int> crossings;  // pipe pair -> count

  for (int i = 1; i <= npipes; ++i) {
    auto& pipe = pd.pipes[i - 1];
    pipe.west_entry.assign(pd.n + 1, -1);
    int x = 0, y = i - 1;
    bool moving_east = true;
    while (true) {
      if (y < 0) { pipe.exit_col = x; break; }
      if (x + y > pd.n) throw std::logic_error("pipe_dream: pipe left the board");
      if (moving_east) pipe.west_entry[x] = y;
      GridPoint cell{x, y};
      bool in_region = f.contains(cell);
      bool crossing = in_region && pd.cross[y][x];
      if (crossing) {
        auto& use = pd.cell_use[cell];
        (moving_east ? use.west : use.south) = i;
      } else {
        if (in_region) {
          pipe.region_elbows.push_back(cell);
          if (moving_east) pipe.region_turns.push_back(cell);
        }
        auto& use = pd.cell_use[cell];
        (moving_east ? use.west : use.south) = i;
        moving_east = !moving_east;  // west->north or south->east
      }
      if (moving_east) ++x;
      else --y;
    }
  }

  // Reducedness: every pair of pipes crosses at most once.
  for (const auto& [cell, use] : pd.cell_use) {
    if (!f.contains(cell) || !pd.cross[cell.y][cell.x]) continue;
    if (use.west == 0 || use.south == 0)
      throw std::logic_error("pipe_dream: crossing tile not used by two pipes");
    auto key = std::minmax(use.west, use.south);
    if (++crossings[{key.first, key.second}] > 1)
      throw std::logic_error("pipe_dream: a pair of pipes crosses twice");
  }
  return pd;
}

inline Permutation exit_permutation(const PipeDream& pd) {
  std::vector<int> window(pd.n + 1, 0);
  for (int i = 1; i <= pd.n + 1; ++i) {
    int col = pd.pipes[i - 1].exit_col;
    if (col < 0 || col > pd.n || window[col] != 0)
      throw std::logic_error("exit_permutation: exits do not tile the top edge");
    window[col] = i;
  }
  return Permutation(std::move(window));
}

// A pipe is above a point when it crosses the point's column strictly north
// of the nudged point, or lies entirely to the left of it. With the region
// shifted slightly left and down, that reads: the pipe's eastbound entry
// into the column is at the point's row or higher, or the pipe exits before
// reaching the column.
inline bool pipe_above_point(const PipeDream& pd, int i, const GridPoint& p) {
  const auto& pipe = pd.pipes[i - 1];
  if (pipe.exit_col < p.x) return true;
  int row = pipe.west_entry[p.x];
  if (row < 0) throw std::logic_error("pipe_above_point: missing column entry");
  return row <= p.y;
}

inline int points_below_pipe(const PipeDream& pd, const FerrersRegion& f, int i) {
  if (i < 1 || i > pd.n + 1) throw std::out_of_range("points_below_pipe: pipe index");
  int count = 0;
  for (const auto& p : f.points)
    if (pipe_above_point(pd, i, p)) ++count;
  return count;
}

inline IntVec brick_vector_fast(const NuTree& t, const FerrersRegion& f) {
  PipeDream pd = pipe_dream(t, f);
  IntVec b(pd.n + 1, 0);
  for (int i = 1; i <= pd.n + 1; ++i) b[i - 1] = -points_below_pipe(pd, f, i);
  return b;
}

// Turns are counted as in the pictures: one per west->north arc (the
// south->east arcs sit between consecutive ones). Inside the region a pipe
// never makes more than two.
inline int max_turns_in_region(const PipeDream& pd) {
  int worst = 0;
  for (const auto& pipe : pd.pipes)
    worst = std::max(worst, static_cast<int>(pipe.region_turns.size()));
  return worst;
}

// The two pipes meeting at an elbow cell: (west->north mover, south->east mover).
inline std::pair<int, int> elbow_pipes(const PipeDream& pd, const GridPoint& cell) {
  auto it = pd.cell_use.find(cell);
  if (it == pd.cell_use.end() || pd.is_cross(cell.x, cell.y))
    throw std::invalid_argument("elbow_pipes: not an elbow cell " + cell.str());
  return {it->second.west, it->second.south};
}

// Debug rendering: '+' for crossings, 'r' for elbows.
inline std::string render_ascii(const PipeDream& pd, const FerrersRegion& f) {
  std::string out;
  for (int y = 0; y <= pd.n; ++y) {
    for (int x = 0; x + y <= pd.n; ++x) {
      GridPoint cell{x, y};
      if (f.contains(cell)) out += pd.is_cross(x, y) ? '+' : 'r';
      else out += 'r';
    }
    out += '\n';
  }
  return out;
}

}  // namespace nutamari
