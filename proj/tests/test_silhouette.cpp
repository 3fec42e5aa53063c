// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "silbound/error.hpp"
#include "silbound/silhouette.hpp"
#include "support.hpp"

using namespace silbound;
using silbound::testing::brute_silhouette;
using silbound::testing::random_clustering;
using silbound::testing::random_matrix;
using silbound::testing::toy_matrix;

TEST_CASE("toy optimum silhouette components") {
  const auto report = silhouette_report(toy_matrix(), Clustering({1, 1, 1, 2, 2}));
  const double a[] = {1.061, 1.498, 1.144, 1.000, 1.000};
  const double b[] = {5.050, 4.298, 4.528, 4.550, 4.700};
  const double s[] = {0.790, 0.652, 0.747, 0.780, 0.787};
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE(report.a[i].has_value());
    CHECK(std::fabs(*report.a[i] - a[i]) < 1e-3);
    CHECK(std::fabs(report.b[i] - b[i]) < 1e-3);
    CHECK(std::fabs(report.s[i] - s[i]) < 1e-3);
  }
  CHECK(std::fabs(report.asw - 0.7512) < 1e-3);
}

TEST_CASE("toy per-K partitions") {
  CHECK(std::fabs(asw(toy_matrix(), Clustering({1, 2, 1, 3, 3})) - 0.5173) < 1e-3);
  CHECK(std::fabs(asw(toy_matrix(), Clustering({1, 2, 3, 4, 4})) - 0.3068) < 1e-3);
}

TEST_CASE("all singletons give zero widths and null cohesion") {
  const auto report = silhouette_report(toy_matrix(), Clustering({1, 2, 3, 4, 5}));
  CHECK(report.asw == 0.0);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(report.s[i] == 0.0);
    CHECK_FALSE(report.a[i].has_value());
  }
}

TEST_CASE("two identical far pairs") {
  const auto d = validate_matrix({{0, 1, 9, 9}, {1, 0, 9, 9}, {9, 9, 0, 1}, {9, 9, 1, 0}});
  const Clustering pairs({1, 1, 2, 2});
  CHECK(asw(d, pairs) == doctest::Approx(brute_silhouette(d, pairs.labels()).asw).epsilon(1e-15));
  CHECK(asw(d, pairs) == doctest::Approx(1.0 - 1.0 / 9.0));
}

TEST_CASE("exact a == b tie gives zero") {
  // Point 0 is at distance 1 from everyone.
  const auto d = validate_matrix({{0, 1, 1, 1}, {1, 0, 2, 3}, {1, 2, 0, 3}, {1, 3, 3, 0}});
  const auto report = silhouette_report(d, Clustering({1, 1, 2, 2}));
  CHECK(*report.a[0] == 1.0);
  CHECK(report.b[0] == 1.0);
  CHECK(report.s[0] == 0.0);
}

TEST_CASE("report matches the definitional two-loop evaluation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const int k = 2 + trial % static_cast<int>(n - 1);
    const auto d = random_matrix(n, rng, trial % 3 == 0);
    const auto clustering = random_clustering(n, k, rng);
    const auto report = silhouette_report(d, clustering, 1);
    const auto brute = brute_silhouette(d, clustering.labels());
    const auto sizes = clustering.cluster_sizes();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(report.b[i] == doctest::Approx(brute.b[i]).epsilon(1e-12));
      CHECK(report.s[i] == doctest::Approx(brute.s[i]).epsilon(1e-12));
      if (sizes[clustering.cluster_of(i)] > 1) {
        CHECK(*report.a[i] == doctest::Approx(brute.a[i]).epsilon(1e-12));
      } else {
        CHECK_FALSE(report.a[i].has_value());
        CHECK(report.s[i] == 0.0);
      }
    }
    CHECK(report.asw == doctest::Approx(brute.asw).epsilon(1e-12));
    CHECK(asw(d, clustering) == doctest::Approx(report.asw).epsilon(1e-14));
  }
}

TEST_CASE("widths stay in [-1, 1] and follow the piecewise form") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 20);
    const int k = 2 + trial % 3;
    const auto d = random_matrix(n, rng, trial % 2 == 0, 0.0, 1.0);
    const auto report = silhouette_report(d, random_clustering(n, k, rng));
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(report.s[i] >= -1.0);
      CHECK(report.s[i] <= 1.0);
      total += report.s[i];
      if (!report.a[i]) continue;
      const double a = *report.a[i], b = report.b[i];
      const double piecewise = a < b ? 1.0 - a / b : (a == b ? 0.0 : b / a - 1.0);
      CHECK(report.s[i] == doctest::Approx(piecewise).epsilon(1e-14));
    }
    CHECK(report.asw == doctest::Approx(total / static_cast<double>(n)).epsilon(1e-14));
  }
}

TEST_CASE("relabelling clusters and permuting points") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 8;
    const int k = 3;
    const auto d = random_matrix(n, rng);
    const auto clustering = random_clustering(n, k, rng);
    const auto base = silhouette_report(d, clustering);

    std::vector<int> ids{1, 2, 3};
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<int> relabelled;
    for (const int l : clustering.labels()) relabelled.push_back(ids[static_cast<std::size_t>(l - 1)]);
    const auto renamed = silhouette_report(d, Clustering(relabelled, k));
    for (std::size_t i = 0; i < n; ++i) CHECK(renamed.s[i] == doctest::Approx(base.s[i]).epsilon(1e-14));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> values(n * n);
    std::vector<int> moved(n);
    for (std::size_t i = 0; i < n; ++i) {
      moved[i] = clustering.label(perm[i]);
      for (std::size_t j = 0; j < n; ++j) values[i * n + j] = d(perm[i], perm[j]);
    }
    const auto permuted = silhouette_report(validate_matrix(values, n, n), Clustering(moved, k));
    for (std::size_t i = 0; i < n; ++i) CHECK(permuted.s[i] == doctest::Approx(base.s[perm[i]]).epsilon(1e-12));
    CHECK(permuted.asw == doctest::Approx(base.asw).epsilon(1e-12));
  }
}

TEST_CASE("widths are scale invariant") {
  std::mt19937_64 rng(31);
  const auto d = random_matrix(9, rng);
  const auto clustering = random_clustering(9, 3, rng);
  const auto base = silhouette_report(d, clustering);
  for (const double c : {1e-6, 3.0, 1e6}) {
    const auto scaled = silhouette_report(d.scaled(c), clustering);
    for (std::size_t i = 0; i < 9; ++i) CHECK(scaled.s[i] == doctest::Approx(base.s[i]).epsilon(1e-12));
  }
}

TEST_CASE("smallest group mean never exceeds the overall mean") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t size = 2 + static_cast<std::size_t>(trial % 15);
    const std::size_t groups = 1 + static_cast<std::size_t>(trial % static_cast<int>(size));
    std::vector<double> values(size);
    for (double& v : values) v = value(rng);
    std::vector<std::size_t> group(size);
    for (std::size_t j = 0; j < size; ++j) group[j] = j < groups ? j : rng() % groups;
    std::vector<double> sum(groups, 0.0);
    std::vector<double> count(groups, 0.0);
    for (std::size_t j = 0; j < size; ++j) {
      sum[group[j]] += values[j];
      count[group[j]] += 1.0;
    }
    double smallest = 1e300;
    for (std::size_t g = 0; g < groups; ++g) smallest = std::min(smallest, sum[g] / count[g]);
    const double overall = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(size);
    CHECK(smallest <= overall + 1e-12);
  }
}

TEST_CASE("clustering validation") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([] { Clustering({1, 3, 3}); }) == ErrorCode::EmptyCluster);
  CHECK(code([] { Clustering({1, 0, 2}); }) == ErrorCode::LabelOutOfRange);
  CHECK(code([] { Clustering({1, 2, 4}, 3); }) == ErrorCode::LabelOutOfRange);
  CHECK(code([] { asw(toy_matrix(), Clustering({1, 2, 1})); }) == ErrorCode::SizeMismatch);
  CHECK(code([] { asw(toy_matrix(), Clustering({1, 1, 1, 1, 1})); }) == ErrorCode::SingleCluster);

  const int raw[] = {7, 7, -2, 9, -2};
  CHECK(Clustering::canonical(raw).labels() == std::vector<int>{1, 1, 2, 3, 2});
}
