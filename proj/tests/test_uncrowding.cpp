#include "eschur/crystal.hpp"
#include "eschur/errors.hpp"
#include "eschur/uncrowding.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace eschur;
using fixture::filled;
using Rows = std::vector<std::vector<int>>;
using Filled = std::map<Cell, int>;

namespace {

Tableau straight(const Rows &rows) {
  std::vector<int> parts;
  for (const auto &r : rows) parts.push_back(static_cast<int>(r.size()));
  Tableau t{SkewShape(Partition(parts))};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      t.set(static_cast<int>(i + 1), static_cast<int>(j + 1), rows[i][j]);
  return t;
}

Poly at_one(Poly p) {
  for (Var v : p.variables())
    if (v.kind() == VarKind::A) p = p.substitute(v, Poly(1), 100);
  return p;
}

} // namespace

TEST_SUITE("uncrowding") {

TEST_CASE("row insertion") {
  CHECK(rsk_insert(Tableau{SkewShape(Partition({}, 0))}, {5, 4}).rows == Rows{{4}, {5}});
  Tableau p = straight({{1, 2}, {3}});
  CHECK(rsk_insert(p, {}) == p);
  // The expected final tableau of the worked example is this insertion
  // order, not the diagonal word 5 4 2.
  CHECK(rsk_insert(straight({{1, 1, 6}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}), {5, 2, 4}).rows ==
        Rows{{1, 1, 2, 4}, {2, 2, 5}, {3, 3, 6}, {4, 4}, {5, 5}});

  // Elementary Knuth moves leave the insertion tableau alone.
  std::mt19937 rng(21);
  Tableau empty{SkewShape(Partition({}, 0))};
  int moved = 0;
  while (moved < 100) {
    std::vector<int> w(3 + rng() % 6);
    for (auto &v : w) v = 1 + static_cast<int>(rng() % 4);
    std::size_t k = rng() % (w.size() - 2);
    int x = w[k], y = w[k + 1], z = w[k + 2];
    std::vector<int> u = w;
    if (z < x && x <= y) std::swap(u[k + 1], u[k + 2]);      // xyz -> xzy
    else if (x <= z && z < y) std::swap(u[k], u[k + 1]);     // xyz -> yxz
    else continue;
    ++moved;
    CHECK(rsk_insert(empty, w) == rsk_insert(empty, u));
  }
}

TEST_CASE("worked example, steps one to five") {
  EdgeTableau t = fixture::uncrowding_example();
  REQUIRE(is_valid(t));
  CHECK(first_reading_diagonal(t.shape().outer()) == -3);
  auto steps = uncrowd_steps(t);
  REQUIRE(steps.size() == 6);
  CHECK(steps[0].P.rows == Rows{{4}, {5}});
  CHECK(filled(steps[0].Q) == Filled{{{2, 1}, 1}});
  CHECK(steps[1].P.rows == Rows{{3, 5}, {4}, {5}});
  CHECK(filled(steps[1].Q) == Filled{{{3, 1}, 1}});
  CHECK(steps[2].P.rows == Rows{{2, 3}, {3, 4}, {4, 5}, {5}});
  CHECK(filled(steps[2].Q) == Filled{{{3, 2}, 3}, {{4, 1}, 1}});
  CHECK(steps[3].P.rows == Rows{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5}});
  CHECK(filled(steps[3].Q) == Filled{{{4, 2}, 3}, {{5, 1}, 1}});
  CHECK(steps[4].P.rows == Rows{{1, 1, 6}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  CHECK(filled(steps[4].Q) == Filled{{{5, 1}, 1}, {{5, 2}, 3}});
  for (const auto &s : steps) CHECK(s.Q.shape.outer() == s.P.shape.outer());
}

TEST_CASE("worked example, last step") {
  EdgeTableau t = fixture::uncrowding_example();
  auto steps = uncrowd_steps(t);
  // The last diagonal reads 5 4 2; inserting that into P5 is the oracle.
  Tableau expected = rsk_insert(steps[4].P, {5, 4, 2});
  CHECK(steps[5].P == expected);
  CHECK(filled(steps[5].Q) == Filled{{{3, 3}, 6}, {{4, 3}, 6}, {{5, 1}, 1}, {{5, 2}, 3}});
  CHECK(uncrowd(t) == steps[5]);
  CHECK(crowd(steps[5], t.shape().outer(), t.lo, t.hi) == t);
}

TEST_CASE("no labels means no recording entries") {
  SkewShape s(Partition({3, 2}));
  for (const auto &b : enumerate_ssyt(s, 3)) {
    EdgeTableau t{b, -2, 2, {}};
    RSKPair pr = uncrowd(t);
    CHECK(filled(pr.Q).empty());
    CHECK(crowd(pr, s.outer(), -2, 2) == t);
  }
}

TEST_CASE("round trip on the 2x3 box") {
  int total = 0;
  for (const auto &lam : partitions_in_box(2, 3))
    for (int n = 1; n <= 3; ++n) {
      std::set<std::pair<Rows, Rows>> seen;
      for (const auto &t : enumerate_elt(SkewShape(lam), n, -2, 3)) {
        RSKPair pr = uncrowd(t);
        CHECK(seen.insert({pr.P.rows, pr.Q.rows}).second);
        CHECK(crowd(pr, lam, -2, 3) == t);
        int cells = static_cast<int>(lam.size()) + t.label_count();
        CHECK(pr.P.shape.size() == cells);
        CHECK(static_cast<int>(filled(pr.Q).size()) == t.label_count());
        ++total;
      }
    }
  CHECK(total > 1000);
}

TEST_CASE("crystal operators commute with uncrowding") {
  SkewShape s21(Partition({2, 1})), s32(Partition({3, 2})), s1(Partition({1}));
  CHECK(check_crystal_commute(s21, EdgeParams::defaults(s21, 3).with_window(-2, 2)).ok);
  CHECK(check_crystal_commute(s32, EdgeParams::defaults(s32, 3).with_window(-2, 1), 1).ok);
  CHECK(check_crystal_commute(s1, EdgeParams::defaults(s1, 3).with_window(-1, 1)).ok);
}

TEST_CASE("recording tableaux separate the weight 321 components") {
  SkewShape s(Partition({3, 2}));
  auto hws = highest_weights(s, EdgeParams::defaults(s, 3).with_window(-2, 1), 1);
  std::set<Rows> qs;
  for (const auto &h : hws) {
    if (h.weight != std::vector<int>{3, 2, 1}) continue;
    RSKPair pr = uncrowd(h.t);
    CHECK(pr.P.rows == Rows{{1, 1, 1}, {2, 2}, {3}});
    qs.insert(pr.Q.rows);
  }
  CHECK(qs.size() == 4);
}

TEST_CASE("census against the Schur expansion") {
  SkewShape s(Partition({2, 0}));
  EdgeParams p = EdgeParams::defaults(s, 2).with_window(-2, 1);
  auto census = hook_tableau_census(s, p);
  auto coeffs = schur_expansion_crystal(s, p, 8);
  std::map<std::vector<int>, int> distinct;
  for (const auto &e : census) {
    ++distinct[fixture::positive_parts(e.mu)];
    CHECK(e.count == oracle::count_ssyt(SkewShape(e.mu), 2));
  }
  int nonzero = 0;
  for (const auto &[mu, c] : coeffs) {
    auto key = fixture::positive_parts(mu);
    CHECK(mpz_class(distinct[key]) == at_one(c).constant_term());
    ++nonzero;
  }
  CHECK(nonzero == static_cast<int>(distinct.size()));
  CHECK(!census_str(census).empty());

  auto plain = hook_tableau_census(s, p.with_window(0, -1));
  REQUIRE(plain.size() == 1);
  CHECK(filled(plain[0].Q).empty());
}

TEST_CASE("malformed pairs") {
  EdgeTableau t = fixture::uncrowding_example();
  RSKPair pr = uncrowd(t);
  RSKPair bad = pr;
  bad.Q.set(3, 3, 5);
  CHECK_THROWS_AS(crowd(bad, t.shape().outer(), t.lo, t.hi), MalformedPair);
  CHECK_THROWS_AS(crowd(pr, Partition({3, 3, 2}), t.lo, t.hi), MalformedPair);
  RSKPair tiny{straight({{1}, {2}}), Tableau{SkewShape(Partition({1, 1}))}};
  CHECK_THROWS_AS(crowd(tiny, Partition({2}), -1, 1), MalformedPair);
}

}
