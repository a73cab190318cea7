#include "eschur/errors.hpp"
#include "eschur/io.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <fstream>

using namespace eschur;

TEST_SUITE("io") {

TEST_CASE("partitions and shapes") {
  CHECK(partition_from_json(json::parse("[3,1]")) == Partition({3, 1}));
  Partition p({2, 0}, 2);
  CHECK(partition_from_json(to_json(p)) == p);
  SkewShape s(Partition({3, 2}), Partition({1}, 2));
  CHECK(skew_from_json(to_json(s)) == s);
  CHECK(skew_from_json(json::parse("[2,1]")) == SkewShape(Partition({2, 1})));
  CHECK_THROWS_AS(partition_from_json(json::parse("{\"parts\": \"x\"}")), ParseError);
}

TEST_CASE("edge labeled tableaux") {
  EdgeTableau t = fixture::uncrowding_example();
  CHECK(elt_from_json(to_json(t)) == t);
  CHECK(elt_from_json(json::parse(to_json(t).dump())) == t);

  std::ifstream in(ESCHUR_TEST_DATA "/worked_example.json");
  REQUIRE(in);
  CHECK(elt_from_json(json::parse(in)) == t);
}

TEST_CASE("bad tableau input") {
  CHECK_THROWS_AS(elt_from_json(json::parse("{}")), ParseError);
  auto j = to_json(fixture::uncrowding_example());
  j["entries"].push_back({9, 9, 1});
  CHECK_THROWS_AS(elt_from_json(j), ParseError);
}

}
