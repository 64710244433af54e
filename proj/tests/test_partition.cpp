#include <random>
#include <stdexcept>

#include "doctest.h"
#include "grasscalc/partition.hpp"

using namespace grasscalc;

TEST_CASE("partition construction normalizes trailing zeros") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(Partition{}.empty());
  CHECK(Partition{0, 0}.empty());
  CHECK(Partition{3, 3, 1}.weight() == 7);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
  CHECK(Partition{}.conjugate() == Partition{});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> parts;
    for (int i = 0, prev = 6; i < 4; ++i) {
      prev = std::min(prev, d(rng));
      parts.push_back(prev);
    }
    const Partition p(parts);
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().weight() == p.weight());
  }
}

TEST_CASE("box fitting") {
  CHECK(Partition{2, 2}.fits_box(2, 2));
  CHECK_FALSE(Partition{3}.fits_box(2, 2));
  CHECK_FALSE(Partition{1, 1, 1}.fits_box(2, 2));
  CHECK(Partition{}.fits_box(1, 1));
}

TEST_CASE("parse and render round-trip to canonical form") {
  CHECK(Partition::parse("2,1").to_string() == "2,1");
  CHECK(Partition::parse("2,1,0").to_string() == "2,1");
  CHECK(Partition::parse("0").to_string() == "0");
  CHECK(Partition::parse(" 3 , 2 ") == Partition{3, 2});
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);

  const auto classes = parse_class_list("2,1;1,1;0");
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == Partition{2, 1});
  CHECK(classes[1] == Partition{1, 1});
  CHECK(classes[2] == Partition{});
  CHECK(render_class_list(classes) == "2,1;1,1;0");

  // render(parse(s)) is idempotent on canonical strings
  for (const char* s : {"1;1;1;1", "2,2", "3,1;2", "0;0"}) {
    const auto parsed = parse_class_list(s);
    CHECK(render_class_list(parse_class_list(render_class_list(parsed))) ==
          render_class_list(parsed));
  }
}
