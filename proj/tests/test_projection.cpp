#include <doctest.h>

#include "oracles.hpp"

using namespace nutamari;
using namespace nutamari::testing;

TEST_CASE("parse_staircase") {
  FerrersRegion f = build_region(parse_path("NENEENE"));
  ProjectionSpec spec = parse_staircase(f);
  CHECK(spec.ks == std::vector<int>{1, 2, 1});
  CHECK(spec.blocks == 3);
  CHECK(spec.reduced_dim == 4);
  CHECK(spec.m_sets == std::vector<std::vector<int>>{{1}, {2, 4}, {3}});
  CHECK(spec.first_coord == -12);
  CHECK(spec.last_coord == 0);

  ProjectionSpec s2 = parse_staircase(build_region(parse_path("NENENEENE")));
  CHECK(s2.ks == std::vector<int>{1, 2, 1, 1});
  CHECK(s2.reduced_dim == 5);
  CHECK(s2.m_sets == std::vector<std::vector<int>>{{1}, {2, 5}, {3}, {4}});

  // (NE)^n: all groups are singletons
  ProjectionSpec s3 = parse_staircase(build_region(parse_path("NENENE")));
  CHECK(s3.ks == std::vector<int>{1, 1, 1});
  CHECK(s3.reduced_dim == 3);
  CHECK(s3.m_sets == std::vector<std::vector<int>>{{1}, {2}, {3}});

  CHECK_THROWS_AS(parse_staircase(build_region(parse_path("NENNE"))), std::invalid_argument);
  CHECK_THROWS_AS(parse_staircase(build_region(parse_path("ENEEN"))), std::invalid_argument);
  CHECK_THROWS_AS(parse_staircase(build_region(parse_path("NEN"))), std::invalid_argument);
}

TEST_CASE("normalize_path") {
  CHECK(normalize_path(parse_path("ENEEN")).str() == "NENEENE");
  CHECK(normalize_path(parse_path("NENEENE")).str() == "NENEENE");
  CHECK(normalize_path(parse_path("EN")).str() == "NENE");
}

TEST_CASE("reduce and project on the worked chain") {
  FerrersRegion f = build_region(parse_path("NENENEENE"));
  ProjectionSpec spec = parse_staircase(f);

  IntVec b = {-17, -13, -13, -9, -13, -2, 0};
  IntVec bt = reduce(b, spec);
  CHECK(bt == IntVec{-13, -13, -9, -13, -2});
  CHECK(project_groups(bt, spec) == IntVec{-13, -15, -9, -13});
  CHECK(project(bt, spec) == IntVec{-13, -28, -37});

  IntVec b0 = {-17, -16, -12, -10, -10, -2, 0};
  CHECK(project(reduce(b0, spec), spec) == IntVec{-16, -30, -40});

  // the tree carrying b exists, is unique, and lands on y = (3,2,3)
  int hits = 0;
  for (const auto& t : enumerate_trees(f)) {
    if (brick_vector_fast(t, f) != b) continue;
    ++hits;
    CHECK(y_coords(t, f, spec) == IntVec{3, 2, 3});
    CHECK(area_coords(t, f) == IntVec{3, 2, 3});
  }
  CHECK(hits == 1);

  CHECK(project(IntVec(5, 0), spec) == IntVec{0, 0, 0});
  CHECK_THROWS_AS(reduce(IntVec{-17, 0, 0, 0, 0, 0, -1}, spec), std::logic_error);
  CHECK_THROWS_AS(reduce(IntVec{-17, 0, 0}, spec), std::invalid_argument);
  CHECK_THROWS_AS(project(IntVec{1, 2, 3}, spec), std::invalid_argument);
}

TEST_CASE("projection tables for NENEENE") {
  FerrersRegion f = build_region(parse_path("NENEENE"));
  ProjectionSpec spec = parse_staircase(f);
  auto trees = enumerate_trees(f);
  REQUIRE(trees.size() == 7);

  std::vector<IntVec> pis, ys;
  for (const auto& t : trees) {
    pis.push_back(projected_brick(t, f, spec));
    ys.push_back(y_coords(t, f, spec));
  }
  CHECK(pis == std::vector<IntVec>{{-11, -21}, {-11, -20}, {-9, -21}, {-8, -21},
                                   {-10, -19}, {-9, -19}, {-8, -19}});
  CHECK(ys == std::vector<IntVec>{{0, 0}, {0, 1}, {2, 0}, {3, 0}, {1, 2}, {2, 2}, {3, 2}});
  CHECK(y_coords(min_tree(f), f, spec) == IntVec{0, 0});
}

TEST_CASE("y-coordinates equal areas on every staircase path") {
  for (const auto& s : fixed_staircase_paths()) {
    FerrersRegion f = build_region(parse_path(s));
    ProjectionSpec spec = parse_staircase(f);
    std::vector<IntVec> ys;
    for (const auto& t : enumerate_trees(f)) {
      IntVec y = y_coords(t, f, spec);
      CHECK(y == area_coords(t, f));
      for (long long v : y) CHECK(v >= 0);
      ys.push_back(y);
    }
    CHECK(area_coords(min_tree(f), f) == IntVec(spec.blocks - 1, 0));
    CHECK(affine_rank(ys) == spec.blocks - 1);
  }
}

TEST_CASE("rotations shift y by their area on a coordinate interval") {
  for (const auto& s : fixed_staircase_paths()) {
    FerrersRegion f = build_region(parse_path(s));
    ProjectionSpec spec = parse_staircase(f);
    TamariGraph g = tamari_hasse(f);
    std::vector<IntVec> ys, bricks;
    for (const auto& t : g.trees) {
      ys.push_back(y_coords(t, f, spec));
      bricks.push_back(brick_vector_fast(t, f));
    }
    for (const auto& e : g.edges) {
      long long area = rotation_area(g.trees[e.from], e.rotated);
      CHECK(area > 0);
      // the brick vector moves by +area / -area on the two touched pipes
      int pi = -1, pj = -1;
      for (size_t c = 0; c < bricks[e.from].size(); ++c) {
        long long d = bricks[e.to][c] - bricks[e.from][c];
        if (d == area && pi < 0) pi = static_cast<int>(c);
        else if (d == -area && pj < 0) pj = static_cast<int>(c);
        else CHECK(d == 0);
      }
      REQUIRE(pi >= 0);
      REQUIRE(pj >= 0);
      auto group_of = [&](int reduced_index) {
        for (int gi = 0; gi < spec.blocks; ++gi)
          for (int v : spec.m_sets[gi])
            if (v == reduced_index) return gi + 1;
        return -1;
      };
      int gi = group_of(pi), gj = group_of(pj);
      REQUIRE(gi > 0);
      REQUIRE(gj > gi);
      for (int c = 1; c <= spec.blocks - 1; ++c) {
        long long expect = (c >= gi && c < gj) ? area : 0;
        CHECK(ys[e.to][c - 1] - ys[e.from][c - 1] == expect);
      }
    }
  }
}

TEST_CASE("export_realization") {
  FerrersRegion f = build_region(parse_path("NENEENE"));
  ProjectionSpec spec = parse_staircase(f);
  RealizationBundle b = export_realization(f, &spec);
  CHECK(b.projected);
  CHECK(b.dim == 2);
  CHECK(b.vertices.size() == 7);
  CHECK(b.edges.size() == 8);
  CHECK(b.faces.size() == 17);
  CHECK(b.cone == std::vector<std::vector<int>>{{3, 5}, {4, 5}});
  for (const auto& fc : b.faces)
    if (fc.dim == 2) CHECK(fc.polygon.size() == fc.vertex_ids.size());

  // single-tree staircase: one point
  FerrersRegion ne = build_region(parse_path("NE"));
  ProjectionSpec spec1 = parse_staircase(ne);
  RealizationBundle one = export_realization(ne, &spec1);
  CHECK(one.vertices.size() == 1);
  CHECK(one.dim == 0);

  // fallback: raw brick vectors, flagged as unprojected
  FerrersRegion raw = build_region(parse_path("ENEEN"));
  RealizationBundle rb = export_realization(raw, nullptr);
  CHECK_FALSE(rb.projected);
  CHECK(rb.dim == 6);
  CHECK(rb.vertices[0] == IntVec{-10, -9, -6, -5, -1, 0});
}
