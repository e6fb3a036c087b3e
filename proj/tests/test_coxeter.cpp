#include <doctest.h>

#include "oracles.hpp"

using namespace nutamari;
using namespace nutamari::testing;

TEST_CASE("evaluate composes left to right on positions") {
  CHECK(evaluate({}, 4) == Permutation::identity(4));
  CHECK(evaluate({2, 3, 2, 4}, 6).window == std::vector<int>{1, 4, 3, 5, 2, 6});
  // braid relation: both spellings give the same element
  CHECK(evaluate({3, 2, 3, 4}, 6) == evaluate({2, 3, 2, 4}, 6));
  CHECK_THROWS_AS(evaluate({5}, 5), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({0}, 5), std::invalid_argument);
}

TEST_CASE("length is the inversion count") {
  CHECK(length(Permutation::identity(6)) == 0);
  CHECK(length(Permutation({1, 4, 3, 5, 2, 6})) == 4);
  CHECK(length(Permutation({2, 1})) == 1);
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced({2, 3, 2, 4}, 6));
  CHECK_FALSE(is_reduced({1, 1}, 3));
  // The full reading word of the ENEEN region is reduced: the fold gains a
  // letter at every step and its product has length 10.
  GenWord q{3, 2, 1, 4, 3, 2, 4, 3, 5, 4};
  CHECK(is_reduced(q, 6));
  CHECK(length(evaluate(q, 6)) == 10);
}

TEST_CASE("bruhat_leq agrees with the subword oracle on S_4") {
  auto perms = all_permutations(4);
  for (const auto& u : perms)
    for (const auto& w : perms)
      CHECK(bruhat_leq(u, w) == oracle_bruhat_leq(u, w));
}

TEST_CASE("bruhat order is a partial order on S_5") {
  auto perms = all_permutations(5);
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = bruhat_leq(perms[a], perms[b]);
  Permutation id = Permutation::identity(5);
  for (int a = 0; a < n; ++a) {
    CHECK(leq[a][a]);
    CHECK(bruhat_leq(id, perms[a]));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b]) CHECK_FALSE(leq[b][a]);
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (leq[b][c]) CHECK(leq[a][c]);
    }
}

TEST_CASE("bruhat_leq rejects rank mismatch") {
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("bruhat_cover_up") {
  Permutation id = Permutation::identity(6);
  for (int p = 1; p <= 5; ++p) CHECK(bruhat_cover_up(id, simple_root(p)));
  Permutation wnu({1, 4, 3, 5, 2, 6});
  CHECK(bruhat_cover_up(wnu, Root{4, 5}));
  CHECK(bruhat_cover_up(wnu, Root{3, 5}));
  CHECK_FALSE(bruhat_cover_up(wnu, Root{2, 3}));  // swapping values 2,3 drops the length
  CHECK_THROWS_AS(bruhat_cover_up(wnu, Root{5, 4}), std::invalid_argument);
  // covers raise the length by exactly one and sit above in Bruhat order
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      Root beta{i, j};
      if (!bruhat_cover_up(wnu, beta)) continue;
      Permutation up = left_reflect(wnu, beta);
      CHECK(length(up) == length(wnu) + 1);
      CHECK(bruhat_leq(wnu, up));
    }
}

TEST_CASE("demazure_product") {
  CHECK(demazure_product({}, 5) == Permutation::identity(5));
  GenWord reduced{2, 3, 2, 4};
  CHECK(demazure_product(reduced, 6) == evaluate(reduced, 6));

  GenWord q{3, 2, 1, 4, 3, 2, 4, 3, 5, 4};
  Permutation dem = demazure_product(q, 6);
  CHECK(dem == oracle_demazure(q, 6));
  Permutation wnu({1, 4, 3, 5, 2, 6});
  CHECK(bruhat_leq(wnu, dem));
  CHECK(bruhat_leq(left_reflect(wnu, Root{4, 5}), dem));
  CHECK(bruhat_leq(left_reflect(wnu, Root{3, 5}), dem));

  // non-reduced words against the brute-force maximum
  for (GenWord w : {GenWord{1, 2, 1, 2}, GenWord{2, 1, 2, 1, 3, 2}, GenWord{1, 1, 2, 2, 1}}) {
    Permutation d = demazure_product(w, 4);
    CHECK(d == oracle_demazure(w, 4));
    CHECK(length(d) >= static_cast<int>(std::set<int>(w.begin(), w.end()).size()));
  }
}

TEST_CASE("roots and weights under the coordinate action") {
  Permutation id = Permutation::identity(6);
  CHECK(act_on_root(id, Root{2, 5}) == Root{2, 5});
  CHECK(act_on_root(evaluate({3}, 6), Root{4, 5}) == Root{3, 5});
  CHECK(act_on_root(evaluate({1}, 6), Root{1, 2}) == Root{2, 1});

  CHECK(act_on_weight(id, fundamental_weight(2, 6)) == Weight{1, 1, 0, 0, 0, 0});
  CHECK(act_on_weight(evaluate({2}, 6), fundamental_weight(2, 6)) == Weight{1, 0, 1, 0, 0, 0});
  CHECK(act_on_weight(evaluate({3, 2}, 6), fundamental_weight(2, 6)) ==
        Weight{1, 0, 0, 1, 0, 0});

  // negation commutes with the action
  for (const auto& w : all_permutations(4))
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        if (i == j) continue;
        Root r{i, j};
        CHECK(act_on_root(w, r.negated()) == act_on_root(w, r).negated());
      }
}

TEST_CASE("reduced_word and support") {
  for (const auto& w : all_permutations(4)) {
    GenWord rw = reduced_word(w);
    CHECK(static_cast<int>(rw.size()) == length(w));
    CHECK(evaluate(rw, 4) == w);
  }
  CHECK(support(Permutation({1, 4, 3, 5, 2, 6})) == std::set<int>{2, 3, 4});
  CHECK(support(Permutation::identity(4)).empty());
}
