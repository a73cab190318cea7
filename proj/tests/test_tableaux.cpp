#include "eschur/errors.hpp"
#include "eschur/schur.hpp"
#include "eschur/tableaux.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace eschur;

namespace {

// The shape-(3,2,2) tableau from the definition of the weight.
EdgeTableau weight_example() {
  return make_elt(SkewShape(Partition({3, 2, 2})), -3, 3,
                  {{1, 1, 5}, {2, 3}, {4, 4}},
                  {{{2, 2}, {2}}, {{1, 3}, {1, 2, 4}}, {{3, 1}, {3}}, {{4, 2}, {5}}});
}

// The (5,3,2)/(4) skew example.
EdgeTableau skew_example() {
  SkewShape s(Partition({5, 3, 2}), Partition({4, 0, 0}));
  return make_elt(s, -3, 4, {{1}, {1, 2, 5}, {5, 5}},
                  {{{2, 2}, {1}}, {{2, 4}, {3, 6}}, {{2, 5}, {2, 5}},
                   {{3, 1}, {2, 4}}, {{3, 2}, {3}}, {{4, 2}, {6}}});
}

Poly xs(std::vector<int> exps) {
  Poly p(1);
  for (std::size_t i = 0; i < exps.size(); ++i) p *= Poly::x(i + 1).pow(exps[i]);
  return p;
}

// ELTs counted and summed without going through the library enumerators:
// every SSYT with every subset of admissible labels on every edge.
std::pair<long, Poly> brute_elts(const SkewShape &s, int n, int lo, int hi) {
  long count = 0;
  Poly sum;
  auto edges = edge_positions(s, lo, hi);
  oracle::for_each_ssyt(s, n, [&](const auto &rows) {
    Poly base(1);
    for (const auto &c : s.cells()) base *= Poly::x(rows[c.i - 1][c.j - 1]);
    long ways = 1;
    Poly factor(1);
    for (const auto &e : edges) {
      int above = s.contains(e.i - 1, e.j) ? rows[e.i - 2][e.j - 1] : 0;
      int below = s.contains(e.i, e.j) ? rows[e.i - 1][e.j - 1] : n + 1;
      Poly f(1);
      for (int v = above + 1; v < below && v <= n; ++v) {
        f *= 1 + Poly::x(v) * Poly::a(e.content());
        ways *= 2;
      }
      factor *= f;
    }
    count += ways;
    sum += base * factor;
  });
  return {count, sum};
}

} // namespace

TEST_SUITE("tableaux") {

TEST_CASE("semistandard enumeration") {
  auto t = enumerate_ssyt(SkewShape(Partition({2, 0})), 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0].str() == "1,1/");
  CHECK(enumerate_ssyt(SkewShape(Partition({}, 0)), 3).size() == 1);
  CHECK(enumerate_ssyt(SkewShape(Partition({1, 1})), 2).size() == 1);
}

TEST_CASE("weight of the (3,2,2) example") {
  EdgeTableau t = weight_example();
  validate(t);
  CHECK(a_monomial(t) == Poly::a(-2).pow(2) * Poly::a(0) * Poly::a(2).pow(3));
  // The factors listed term by term: x1^2 x2 x3 x4^2 x5 (x3)(x5)(x2)(x1)(x2)(x4).
  Poly itemized = xs({2, 1, 1, 2, 1}) * Poly::x(3) * Poly::x(5) * Poly::x(2) *
                  Poly::x(1) * Poly::x(2) * Poly::x(4);
  CHECK(itemized == xs({3, 3, 2, 3, 2}));
  CHECK(weight_elt(t) == a_monomial(t) * itemized);
}

TEST_CASE("weight of the skew example") {
  EdgeTableau t = skew_example();
  validate(t);
  CHECK(a_monomial(t) == Poly::a(-2).pow(3) * Poly::a(-1) * Poly::a(0) *
                             Poly::a(2).pow(2) * Poly::a(3).pow(2));
  // Boxes 1,1,2,5,5,5 and labels 1,36,25,24,3,6 give x4 once.
  CHECK(weight_elt(t) == a_monomial(t) * xs({3, 3, 2, 1, 4, 2}));
}

TEST_CASE("plain tableau weight") {
  auto t = make_elt(SkewShape(Partition({2, 1})), -2, 2, {{1, 2}, {3}});
  CHECK(weight_elt(t) == Poly::x(1) * Poly::x(2) * Poly::x(3));
}

TEST_CASE("invalid tableaux are rejected") {
  auto bad_rows = make_elt(SkewShape(Partition({2, 1})), -2, 2, {{2, 1}, {3}});
  CHECK_THROWS_AS(validate(bad_rows), ValidationError);
  auto bad_label = make_elt(SkewShape(Partition({2, 1})), -2, 2, {{1, 2}, {3}},
                            {{{2, 1}, {3}}});
  CHECK_THROWS_AS(validate(bad_label), ValidationError);
  auto outside = make_elt(SkewShape(Partition({1})), 0, 0, {{2}}, {{{1, 2}, {1}}});
  CHECK_THROWS_AS(validate(outside), ValidationError);
  CHECK_THROWS_AS(weight_elt(bad_rows), ValidationError);
}

TEST_CASE("enumeration counts") {
  SkewShape s20(Partition({2, 0}));
  CHECK(enumerate_elt(s20, 2, -2, 1).size() == 12);
  CHECK(enumerate_elt(s20, 2, 5, 4).size() == 3);
  auto one = enumerate_elt(SkewShape(Partition({1})), 1, -1, 1);
  REQUIRE(one.size() == 2);
  Poly total;
  for (const auto &t : one) total += weight_elt(t);
  CHECK(total == Poly::x(1) + Poly::a(1) * Poly::x(1).pow(2));
}

TEST_CASE("enumerators agree with the brute-force count and sum") {
  for (const auto &lam : partitions_in_box(3, 3))
    for (int n = 1; n <= 3; ++n) {
      SkewShape s(lam);
      auto [count, sum] = brute_elts(s, n, -3, 3);
      auto pos = enumerate_elt(s, n, -3, 3);
      auto chains = enumerate_elt_chains(s, n, -3, 3);
      CHECK(static_cast<long>(pos.size()) == count);
      CHECK(pos == chains);
      Poly w;
      for (const auto &t : pos) w += weight_elt(t);
      CHECK(w == sum);
      CHECK(w == edge_schur(s, EdgeParams::defaults(s, n).with_window(-3, 3)));
    }
}

TEST_CASE("chain form of the transfer example") {
  SkewShape s(Partition({4, 4, 1}), Partition({4, 2, 0}));
  Chain chain{Partition({4, 2, 0}), Partition({4, 4, 1})};
  std::set<EdgeTableau> seen;
  for (auto d : std::vector<std::set<int>>{{}, {-1}, {4}, {-1, 4}}) {
    EdgeTableau t = chain_to_positional({chain, {d}}, -4, 4);
    CHECK(a_monomial(t) == [&] {
      Poly m(1);
      for (int k : d) m *= Poly::a(k);
      return m;
    }());
    CHECK(weight_elt(t) == a_monomial(t) * Poly::x(1).pow(3 + d.size()));
    seen.insert(t);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("positional and chain forms round-trip") {
  for (const auto &lam : partitions_in_box(2, 3))
    for (const auto &t : enumerate_elt(SkewShape(lam), 3, -2, 3)) {
      ChainForm c = positional_to_chain(t, 3);
      CHECK(chain_to_positional(c, -2, 3) == t);
    }
}

TEST_CASE("reading words") {
  SkewShape sq(Partition({3, 3, 3, 1}));
  auto ssyt = make_elt(sq, 0, -1, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10}});
  CHECK(letters(reading_word(ssyt)) ==
        std::vector<int>{10, 7, 8, 4, 9, 5, 1, 6, 2, 3});

  auto w = reading_word(skew_example());
  CHECK(letters(w) == std::vector<int>{5, 6, 5, 4, 2, 1, 3, 2, 5, 1, 6, 3, 5, 2, 1});
  std::vector<bool> box;
  for (const auto &l : w) box.push_back(l.box);
  CHECK(box == std::vector<bool>{1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1});

  auto single = make_elt(SkewShape(Partition({1})), 0, -1, {{4}});
  CHECK(letters(reading_word(single)) == std::vector<int>{4});
}

TEST_CASE("reading word multiset is entries plus labels") {
  std::mt19937 rng(4);
  auto all = enumerate_elt(SkewShape(Partition({3, 2})), 3, -2, 3);
  for (int k = 0; k < 100; ++k) {
    const auto &t = all[rng() % all.size()];
    auto w = letters(reading_word(t));
    std::vector<int> c(4, 0);
    for (int v : w) ++c[v];
    CHECK(c == content_vector(t, 3));
  }
}

}
