#include "eschur/errors.hpp"
#include "eschur/shapes.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace eschur;

TEST_SUITE("shapes") {

TEST_CASE("extent is part of identity") {
  CHECK(Partition({2, 0}) != Partition({2}));
  CHECK(Partition({2}, 2) == Partition({2, 0}));
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 1}, 1));
}

TEST_CASE("maya diagrams of the worked examples") {
  CHECK(to_maya(Partition({3, 3, 1}), -4, 4).bits ==
        std::vector<int>{1, 0, 1, 0, 0, 1, 1, 0, 0});
  CHECK(to_maya(Partition({4, 2, 1, 0}), -4, 5).str() == "1010100100");
  CHECK(to_maya(Partition({}, 3), -3, 1).bits == std::vector<int>{1, 1, 1, 0, 0});
  CHECK_THROWS_AS(to_maya(Partition({3, 1}), -1, 3), WindowError);
}

TEST_CASE("from_maya inverts to_maya") {
  MayaWindow m = to_maya(Partition({4, 2, 1, 0}), -4, 5);
  CHECK(from_maya(m, 4) == Partition({4, 2, 1, 0}));
  CHECK(from_maya(to_maya(Partition({}, 2), -2, 3), 2) == Partition({}, 2));
  for (const auto &lam : partitions_in_box(5, 5))
    for (int lo : {-5, -7})
      for (int hi : {5, 6}) {
        MayaWindow w = to_maya(lam, lo, hi);
        CHECK(from_maya(w, 5) == lam);
        CHECK(to_maya(from_maya(w, 5), lo, hi).bits == w.bits);
      }
  MayaWindow bad = to_maya(Partition({1}), -1, 2);
  bad.bits[0] = 1; // extra particle at -1
  CHECK_THROWS_AS(from_maya(bad, 1), MalformedMaya);
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition({4, 4, 1}), Partition({4, 2, 0})));
  CHECK(is_horizontal_strip(Partition({3, 1}), Partition({3, 1})));
  CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({0, 0})));
}

TEST_CASE("strip chains biject with semistandard tableaux") {
  CHECK(strip_chains(SkewShape(Partition({2, 0})), 2).size() == 3);
  CHECK(strip_chains(SkewShape(Partition({2, 1}), Partition({2, 1})), 3).size() == 1);
  CHECK(strip_chains(SkewShape(Partition({1, 0}), Partition({2, 0})), 2).empty());
  std::mt19937 rng(2);
  for (int k = 0; k < 20; ++k) {
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<int> outer{d(rng), d(rng), d(rng)};
    std::sort(outer.rbegin(), outer.rend());
    std::vector<int> inner(3);
    for (int i = 0; i < 3; ++i)
      inner[i] = std::uniform_int_distribution<int>(
          0, std::min(outer[i], i ? inner[i - 1] : outer[i]))(rng);
    SkewShape s{Partition(outer), Partition(inner)};
    int n = 1 + k % 3;
    CHECK(static_cast<long>(strip_chains(s, n).size()) == oracle::count_ssyt(s, n));
  }
}

TEST_CASE("conjugation and contents") {
  for (const auto &lam : partitions_in_box(4, 4)) {
    CHECK(lam.conjugate().conjugate().with_extent(4) == lam);
    int direct = 0;
    for (const auto &c : SkewShape(lam).cells()) direct += c.content();
    Partition conj = lam.conjugate();
    int formula = 0;
    for (int i = 1; i <= 4; ++i) formula += lam[i] * (lam[i] - 1) / 2;
    for (int j = 1; j <= conj.extent(); ++j) formula -= conj[j] * (conj[j] - 1) / 2;
    CHECK(direct == formula);
  }
}

TEST_CASE("parsing partitions") {
  CHECK(parse_partition("3,2") == Partition({3, 2}));
  CHECK(parse_partition("2", 2) == Partition({2, 0}));
  CHECK(parse_partition("").size() == 0);
  CHECK_THROWS(parse_partition("2,x"));
}

}
