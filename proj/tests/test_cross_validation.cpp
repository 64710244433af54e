// Method equivalence between the fermionic engine and the combinatorial
// oracle on random full-weight multisets of box partitions.

#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "grasscalc/oracle.hpp"
#include "grasscalc/schubert.hpp"

using namespace grasscalc;

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

// Random multiset of nonempty box partitions with total weight exactly
// k(N-k); falls back to lines when a greedy draw overshoots.
std::vector<Partition> random_full_weight_multiset(std::mt19937& rng,
                                                   const std::vector<Partition>& box,
                                                   int target) {
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::vector<Partition> classes;
  int weight = 0;
  while (weight < target) {
    const Partition& a = box[pick(rng)];
    if (a.empty() || weight + a.weight() > target) continue;
    classes.push_back(a);
    weight += a.weight();
  }
  return classes;
}

}  // namespace

TEST_CASE("engine and oracle agree on random full-weight products") {
  std::mt19937 rng(2718);
  for (const auto& [k, N, rounds] :
       std::vector<std::tuple<int, int, int>>{{2, 4, 60}, {2, 5, 60},
                                              {3, 6, 25}}) {
    const SchubertEngine se{GrassmannContext(k, N)};
    const auto box = box_partitions(k, N - k);
    for (int t = 0; t < rounds; ++t) {
      const auto classes =
          random_full_weight_multiset(rng, box, k * (N - k));
      const Rational engine_value = se.integrate_product(classes);
      const Integer oracle_value = oracle::intersection(k, N, classes);
      CAPTURE(render_class_list(classes));
      CHECK(engine_value == Rational(oracle_value));
    }
  }
}

TEST_CASE("engine and oracle agree on off-weight products (both zero)") {
  std::mt19937 rng(314);
  const SchubertEngine se{GrassmannContext(2, 5)};
  const auto box = box_partitions(2, 3);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<int> len(1, 3);
  for (int t = 0; t < 60; ++t) {
    std::vector<Partition> classes;
    int weight = 0;
    for (int i = len(rng); i > 0; --i) {
      classes.push_back(box[pick(rng)]);
      weight += classes.back().weight();
    }
    if (weight == 6) continue;
    CHECK(se.integrate_product(classes) == 0);
    CHECK(oracle::intersection(2, 5, classes) == 0);
  }
}
