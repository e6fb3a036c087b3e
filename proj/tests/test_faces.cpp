#include <doctest.h>

#include "oracles.hpp"

using namespace nutamari;
using namespace nutamari::testing;

namespace {

// The three marked trees of the running example, by facet positions.
struct Triptych {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  SubwordInstance s = make_instance(f);
  NuTree t = facet_tree(Facet({1, 2, 3, 4, 7, 9}), f, s);
  NuTree tp = facet_tree(Facet({1, 3, 4, 7, 8, 9}), f, s);
  GridPoint pt(int k) { return f.pos_to_point[k - 1]; }
};

}  // namespace

TEST_CASE("constraint systems of the worked marked trees") {
  Triptych x;

  // marks {positions 1,2}: x1 > x2 = x3 = x4 > x5 > x6
  ConstraintSystem m2 = constraint_system(x.s, x.f, MarkedTree{x.t, {x.pt(1), x.pt(2)}});
  CHECK(m2.equal == std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
  CHECK(m2.strict == std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {4, 5}, {5, 6}});
  CHECK(feasible(m2).feasible);

  // marks {positions 4,7}: x1 > x2 > x3 > x4 = x5 > x6 with x3 = x5
  ConstraintSystem m3 = constraint_system(x.s, x.f, MarkedTree{x.t, {x.pt(4), x.pt(7)}});
  CHECK(m3.equal == std::vector<std::pair<int, int>>{{3, 5}, {4, 5}});
  CHECK(m3.strict == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {5, 6}});
  CHECK_FALSE(feasible(m3).feasible);

  // marks {positions 1,4} on the other tree:
  // x1 > x3 = x4 = x5 and x3 > x2 > x5 > x6
  ConstraintSystem m4 = constraint_system(x.s, x.f, MarkedTree{x.tp, {x.pt(1), x.pt(4)}});
  CHECK(m4.equal == std::vector<std::pair<int, int>>{{3, 4}, {4, 5}});
  CHECK(m4.strict == std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 2}, {5, 6}});
  CHECK_FALSE(feasible(m4).feasible);

  // unmarked trees give strict-only systems, always feasible
  ConstraintSystem plain = constraint_system(x.s, x.f, MarkedTree{x.t, {}});
  CHECK(plain.equal.empty());
  CHECK(plain.strict.size() == 6);
  CHECK(feasible(plain).feasible);

  CHECK_THROWS_AS(constraint_system(x.s, x.f, MarkedTree{x.t, {GridPoint{5, 5}}}),
                  std::invalid_argument);
}

TEST_CASE("feasible solves mixed strict/equality systems") {
  ConstraintSystem cyc;
  cyc.nvars = 3;
  cyc.strict = {{1, 2}, {2, 3}, {3, 1}};
  CHECK_FALSE(feasible(cyc).feasible);

  ConstraintSystem clash;
  clash.nvars = 2;
  clash.equal = {{1, 2}};
  clash.strict = {{1, 2}};
  CHECK_FALSE(feasible(clash).feasible);

  ConstraintSystem ok;
  ok.nvars = 4;
  ok.equal = {{2, 3}};
  ok.strict = {{1, 2}, {3, 4}};
  Feasibility fz = feasible(ok);
  REQUIRE(fz.feasible);
  CHECK(fz.witness[0] > fz.witness[1]);
  CHECK(fz.witness[1] == fz.witness[2]);
  CHECK(fz.witness[2] > fz.witness[3]);
}

TEST_CASE("every ascent-marked system is feasible") {
  for (const auto& s : fixed_paths()) {
    FerrersRegion f = build_region(parse_path(s));
    SubwordInstance inst = make_instance(f);
    for (const auto& face : interior_faces(f)) {
      CHECK(feasible(constraint_system(inst, f, MarkedTree{face.base, face.marks})).feasible);
      CHECK(independence_check(inst, f, face.base, face.marks));
    }
  }
}

TEST_CASE("bounded faces of the running example") {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  BoundedFaceComplex c = bounded_faces(f);
  REQUIRE(c.trees.size() == 7);
  REQUIRE(c.faces.size() == 17);

  int by_dim[3] = {0, 0, 0};
  for (const auto& bf : c.faces) ++by_dim[bf.dim];
  CHECK(by_dim[0] == 7);
  CHECK(by_dim[1] == 8);
  CHECK(by_dim[2] == 2);

  // pentagon and square
  for (const auto& bf : c.faces) {
    if (bf.dim != 2) continue;
    if (bf.face.tree_id == 0)
      CHECK(bf.vertex_tree_ids == std::vector<int>{0, 1, 2, 4, 5});
    else {
      CHECK(bf.face.tree_id == 2);
      CHECK(bf.vertex_tree_ids == std::vector<int>{2, 3, 5, 6});
    }
    std::vector<IntVec> verts;
    for (int id : bf.vertex_tree_ids) verts.push_back(c.bricks[id]);
    CHECK(affine_rank(verts) == 2);
  }

  // vertex faces carry exactly their own tree; edges exactly two trees
  for (const auto& bf : c.faces) {
    if (bf.dim == 0) CHECK(bf.vertex_tree_ids == std::vector<int>{bf.face.tree_id});
    if (bf.dim == 1) CHECK(bf.vertex_tree_ids.size() == 2);
  }
}

TEST_CASE("minimal vertex of a face is its base tree") {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  BoundedFaceComplex c = bounded_faces(f);
  IntVec eta = default_eta(6);
  for (const auto& bf : c.faces) CHECK(minimal_vertex(c, bf, eta) == bf.face.tree_id);
  // the global minimum over the whole bounded part is the minimal tree
  for (const auto& bf : c.faces)
    if (bf.dim == 2 && bf.face.tree_id == 0)
      CHECK(c.trees[minimal_vertex(c, bf, eta)] == min_tree(f));
  IntVec bad = {1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(minimal_vertex(c, c.faces[0], bad), std::invalid_argument);
}

TEST_CASE("local cones") {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  BoundedFaceComplex c = bounded_faces(f);
  for (size_t id = 0; id < c.trees.size(); ++id)
    CHECK(local_cone_check(c, static_cast<int>(id)));

  // vacuous for a single-tree path
  BoundedFaceComplex single = bounded_faces(build_region(parse_path("N")));
  CHECK(local_cone_check(single, 0));
}

TEST_CASE("independence_check") {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  SubwordInstance s = make_instance(f);
  NuTree t0 = min_tree(f);
  CHECK(independence_check(s, f, t0, {}));
  CHECK(independence_check(s, f, t0, ascents(t0, f)));
}

TEST_CASE("face order reverses vertex containment") {
  FerrersRegion f = build_region(parse_path("ENEEN"));
  BoundedFaceComplex c = bounded_faces(f);
  for (const auto& f1 : c.faces) {
    for (const auto& f2 : c.faces) {
      bool contained = std::includes(f2.face.positions.begin(), f2.face.positions.end(),
                                     f1.face.positions.begin(), f1.face.positions.end());
      bool verts = std::includes(f1.vertex_tree_ids.begin(), f1.vertex_tree_ids.end(),
                                 f2.vertex_tree_ids.begin(), f2.vertex_tree_ids.end());
      CHECK(contained == verts);
      CHECK(BoundedFaceComplex::face_leq(f1, f2) == contained);
    }
  }

  // covers in the face order change the dimension by exactly one
  for (const auto& f1 : c.faces) {
    for (const auto& f2 : c.faces) {
      if (!(BoundedFaceComplex::face_leq(f1, f2)) || f1.face.positions == f2.face.positions)
        continue;
      bool cover = true;
      for (const auto& mid : c.faces) {
        if (mid.face.positions == f1.face.positions ||
            mid.face.positions == f2.face.positions)
          continue;
        if (BoundedFaceComplex::face_leq(f1, mid) && BoundedFaceComplex::face_leq(mid, f2))
          cover = false;
      }
      if (cover) CHECK(f2.dim - f1.dim == 1);
    }
  }
}
