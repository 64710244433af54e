#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "grasscalc/oracle.hpp"

using namespace grasscalc;
using oracle::BoxClass;

namespace {

std::vector<Partition> box_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  const std::function<void(int, int)> rec = [&](int row, int maxpart) {
    if (row == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int p = maxpart; p >= 0; --p) {
      parts.push_back(p);
      rec(row + 1, p);
      parts.pop_back();
    }
  };
  rec(0, cols);
  return out;
}

BoxClass single(int rows, int cols, const Partition& p) {
  BoxClass c(rows, cols);
  c.add(p, 1);
  return c;
}

}  // namespace

TEST_CASE("pieri_e: vertical strips inside the 2x2 box") {
  const BoxClass empty = BoxClass::unit(2, 2);

  const BoxClass e1 = oracle::pieri_e(1, empty);
  CHECK(e1.coeffs().size() == 1);
  CHECK(e1.coeff(Partition{1}) == 1);

  const BoxClass e1e1 = oracle::pieri_e(1, e1);
  CHECK(e1e1.coeffs().size() == 2);
  CHECK(e1e1.coeff(Partition{2}) == 1);
  CHECK(e1e1.coeff(Partition{1, 1}) == 1);

  // (1,1) + vertical 2-strip: the only placement is one box in each row
  const BoxClass r = oracle::pieri_e(2, single(2, 2, Partition{1, 1}));
  CHECK(r.coeffs().size() == 1);
  CHECK(r.coeff(Partition{2, 2}) == 1);

  // (2,1) + vertical 2-strip: every placement leaves the 2x2 box
  CHECK(oracle::pieri_e(2, single(2, 2, Partition{2, 1})).is_zero());

  CHECK_THROWS_AS(oracle::pieri_e(0, empty), std::domain_error);
  CHECK_THROWS_AS(oracle::pieri_e(3, empty), std::domain_error);
}

TEST_CASE("pieri_e commutes") {
  std::mt19937 rng(17);
  const auto box = box_partitions(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int t = 0; t < 200; ++t) {
    BoxClass c(3, 3);
    c.add(box[pick(rng)], 1 + static_cast<int>(t % 3));
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        CHECK(oracle::pieri_e(m, oracle::pieri_e(n, c)) ==
              oracle::pieri_e(n, oracle::pieri_e(m, c)));
  }
}

TEST_CASE("schur_in_e expansions") {
  // e_i is its own expansion
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> column(static_cast<std::size_t>(i), 1);
    const auto expansion = oracle::schur_in_e(Partition(column), 3, 3);
    REQUIRE(expansion.size() == 1);
    CHECK(expansion.begin()->first == std::vector<int>{i});
    CHECK(expansion.begin()->second == 1);
  }

  // sigma_2 = e_1^2 - e_2
  const auto row2 = oracle::schur_in_e(Partition{2}, 2, 4);
  REQUIRE(row2.size() == 2);
  CHECK(row2.at({1, 1}) == 1);
  CHECK(row2.at({2}) == -1);

  // full 2x2 box: the e_3 e_1 term dies because e_3 = 0 in two variables
  const auto full = oracle::schur_in_e(Partition{2, 2}, 2, 2);
  REQUIRE(full.size() == 1);
  CHECK(full.at({2, 2}) == 1);
}

TEST_CASE("schur_in_e round-trips through pieri chains") {
  for (const auto& [rows, cols] :
       std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    for (const Partition& a : box_partitions(rows, cols)) {
      BoxClass total(rows, cols);
      for (const auto& [indices, c] : oracle::schur_in_e(a, rows, cols)) {
        BoxClass piece = BoxClass::unit(rows, cols);
        for (int m : indices) piece = oracle::pieri_e(m, piece);
        piece *= c;
        total += piece;
      }
      CHECK(total == single(rows, cols, a));
    }
  }
}

TEST_CASE("oracle intersection numbers") {
  const std::vector<Partition> four_lines(4, Partition{1});
  CHECK(oracle::intersection(2, 4, four_lines) == 2);

  const std::vector<Partition> pieri_pair = {Partition{2, 1}, Partition{1}};
  CHECK(oracle::intersection(2, 4, pieri_pair) == 1);

  const std::vector<Partition> nine_lines(9, Partition{1});
  CHECK(oracle::intersection(3, 6, nine_lines) == 42);

  const std::vector<Partition> mismatch(3, Partition{1});
  CHECK(oracle::intersection(2, 4, mismatch) == 0);

  // self-pairing of sigma_2 on G(2,4)
  const std::vector<Partition> conics = {Partition{2}, Partition{2}};
  CHECK(oracle::intersection(2, 4, conics) == 1);

  const std::vector<Partition> outside = {Partition{1, 1, 1}};
  CHECK_THROWS_AS(oracle::intersection(2, 4, outside), std::domain_error);
}

TEST_CASE("complement duality") {
  CHECK(oracle::complement_dual(2, 4, Partition{2, 1}) == Partition{1});
  CHECK(oracle::complement_dual(2, 4, Partition{2, 2}) == Partition{});
  CHECK(oracle::complement_dual(2, 4, Partition{}) == Partition{2, 2});

  // delta law on G(2,5), exhaustively
  const auto box = box_partitions(2, 3);
  for (const Partition& a : box) {
    const Partition dual = oracle::complement_dual(2, 5, a);
    for (const Partition& b : box) {
      if (a.weight() + b.weight() != 6) continue;
      const std::vector<Partition> classes = {a, b};
      CHECK(oracle::intersection(2, 5, classes) == (b == dual ? 1 : 0));
    }
  }
}

TEST_CASE("intersections of plain Schubert classes are nonnegative") {
  std::mt19937 rng(23);
  const auto box = box_partitions(2, 3);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::vector<Partition> classes;
    for (int i = len(rng); i > 0; --i) classes.push_back(box[pick(rng)]);
    CHECK(oracle::intersection(2, 5, classes) >= 0);
  }
}

TEST_CASE("box class stays homogeneous and inside the box") {
  BoxClass c(2, 2);
  c.add(Partition{1}, 2);
  CHECK_THROWS_AS(c.add(Partition{1, 1}, 1), std::logic_error);
  CHECK_THROWS_AS(c.add(Partition{3}, 1), std::domain_error);
  c.add(Partition{1}, -2);
  CHECK(c.is_zero());
}
