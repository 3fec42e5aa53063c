// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "silbound/bounds.hpp"
#include "silbound/error.hpp"
#include "silbound/oracle.hpp"
#include "support.hpp"

using namespace silbound;
using silbound::testing::bell_number;
using silbound::testing::brute_partitions;
using silbound::testing::brute_silhouette;
using silbound::testing::random_matrix;
using silbound::testing::stirling2;
using silbound::testing::toy_matrix;

TEST_CASE("oracle counts match Bell and Stirling numbers") {
  CHECK(bell_number(5) == 52);
  CHECK(count_partitions(3) == 5);
  CHECK(count_partitions(5, {2, 0, 1}) == 51);
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(count_partitions(n) == bell_number(n));
    for (std::size_t k = 1; k <= n; ++k) CHECK(count_partitions(n, PartitionConstraints::exactly(k)) == stirling2(n, k));
  }
}

TEST_CASE("enumeration emits each partition once, in lexicographic order") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::vector<std::size_t>> expected;
    brute_partitions(n, [&](const std::vector<std::size_t>& labels, std::size_t) { expected.push_back(labels); });
    std::vector<std::vector<std::size_t>> seen;
    PartitionEnumerator it(n);
    while (it.next()) {
      seen.emplace_back(it.assignment().begin(), it.assignment().end());
      std::vector<std::size_t> sizes(it.blocks(), 0);
      for (const std::size_t c : it.assignment()) ++sizes[c];
      CHECK(std::equal(sizes.begin(), sizes.end(), it.sizes().begin(), it.sizes().end()));
    }
    CHECK(seen == expected);
  }
}

TEST_CASE("constraints prune to the filtered enumeration") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::vector<std::size_t>> block_sizes;
    brute_partitions(n, [&](const std::vector<std::size_t>& labels, std::size_t k) {
      std::vector<std::size_t> sizes(k, 0);
      for (const std::size_t l : labels) ++sizes[l];
      block_sizes.push_back(std::move(sizes));
    });
    for (std::size_t min_size = 1; min_size <= n; ++min_size) {
      for (std::size_t min_k = 1; min_k <= n; ++min_k) {
        for (std::size_t max_k = 0; max_k <= n; ++max_k) {
          std::uint64_t expected = 0;
          for (const auto& sizes : block_sizes) {
            const std::size_t k = sizes.size();
            if (k < min_k || (max_k != 0 && k > max_k)) continue;
            if (*std::min_element(sizes.begin(), sizes.end()) < min_size) continue;
            ++expected;
          }
          CHECK(count_partitions(n, {min_k, max_k, min_size}) == expected);
        }
      }
    }
  }
}

TEST_CASE("partition cap") {
  CHECK_THROWS_AS(PartitionEnumerator(16), Error);
  try {
    PartitionEnumerator it(16);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("toy optimum is unique") {
  const auto result = optimal_asw(toy_matrix());
  CHECK(result.best.labels() == std::vector<int>{1, 1, 1, 2, 2});
  CHECK(std::fabs(result.best_asw - 0.7512) < 1e-3);
  CHECK(result.ties == 1);
  CHECK(result.evaluated == 51);
}

TEST_CASE("toy per-K optima") {
  const auto table = best_per_k(toy_matrix(), 2, 5);
  const double expected[] = {0.7512, 0.5173, 0.3068, 0.0000};
  REQUIRE(table.size() == 4);
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(table[r].k == r + 2);
    CHECK(std::fabs(table[r].best_asw - expected[r]) < 1e-3);
  }
  CHECK(table[2].best.labels() == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(table[3].best.labels() == std::vector<int>{1, 2, 3, 4, 5});
  const auto four = optimal_asw(toy_matrix(), PartitionConstraints::exactly(4));
  CHECK(four.best == table[2].best);
}

TEST_CASE("two identical far pairs") {
  const auto d = validate_matrix({{0, 1, 9, 9}, {1, 0, 9, 9}, {9, 9, 0, 1}, {9, 9, 1, 0}});
  const auto result = optimal_asw(d);
  CHECK(result.evaluated == 14);
  CHECK(result.best.labels() == std::vector<int>{1, 1, 2, 2});
  CHECK(result.best_asw == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("oracle agrees with a brute-force argmax") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 4);
    const auto d = random_matrix(n, rng);
    std::map<std::size_t, double> best_by_k;
    double best = -2.0;
    brute_partitions(n, [&](const std::vector<std::size_t>& labels, std::size_t k) {
      if (k < 2) return;
      std::vector<int> ids(labels.begin(), labels.end());
      for (int& id : ids) ++id;
      const double value = brute_silhouette(d, ids).asw;
      best = std::max(best, value);
      auto [it, inserted] = best_by_k.try_emplace(k, value);
      if (!inserted) it->second = std::max(it->second, value);
    });
    const auto result = optimal_asw(d);
    CHECK(result.best_asw == doctest::Approx(best).epsilon(1e-12));
    CHECK(asw(d, result.best) == doctest::Approx(result.best_asw).epsilon(1e-14));
    for (const auto& row : best_per_k(d, 2, n)) CHECK(row.best_asw == doctest::Approx(best_by_k[row.k]).epsilon(1e-12));
  }
}

TEST_CASE("exact optimum never exceeds the ceilings") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 5);
    const auto d = random_matrix(n, rng, trial % 2 == 0);
    const auto sorted = sort_rows(d);
    const auto free = optimal_asw(d);
    CHECK(free.best_asw <= bound_report(sorted, 1).ub + 1e-12);
    for (std::size_t kappa = 2; kappa <= n / 2; ++kappa) {
      const auto constrained = optimal_asw(d, {2, 0, kappa});
      CHECK(constrained.best_asw <= bound_report(sorted, kappa).ub + 1e-12);
      CHECK(constrained.best_asw <= free.best_asw + 1e-15);
      for (const std::size_t size : constrained.best.cluster_sizes()) CHECK(size >= kappa);
    }
  }
}

TEST_CASE("oracle is deterministic") {
  std::mt19937_64 rng(73);
  const auto d = random_matrix(8, rng, true);
  const auto first = optimal_asw(d);
  const auto second = optimal_asw(d);
  CHECK(first.best == second.best);
  CHECK(first.best_asw == second.best_asw);
  CHECK(first.ties == second.ties);
}

TEST_CASE("best_per_k range checks") {
  CHECK_THROWS_AS(best_per_k(toy_matrix(), 1, 3), Error);
  CHECK_THROWS_AS(best_per_k(toy_matrix(), 3, 6), Error);
  CHECK_THROWS_AS(best_per_k(toy_matrix(), 4, 3), Error);
}
