// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared fixtures and definitional oracles for the test suites. The oracles
// here follow the textbook definitions with plain loops and deliberately
// share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/silhouette.hpp"

namespace silbound::testing {

/// The five two-feature toy observations.
inline PointSet toy_points() {
  return PointSet::from_rows({{1.0, 2.0}, {2.0, 1.0}, {1.5, 2.5}, {6.0, 2.0}, {6.0, 3.0}});
}

inline DissimilarityMatrix toy_matrix() { return build_matrix(toy_points(), Metric::Euclidean); }

/// Random symmetric matrix with entries in [lo, hi]. With `integer_ties`
/// entries are drawn from a handful of integers so rows contain ties.
inline DissimilarityMatrix random_matrix(std::size_t n, std::mt19937_64& rng, bool integer_ties = false,
                                         double lo = 0.05, double hi = 1.0) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  std::uniform_int_distribution<int> small(1, 4);
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = integer_ties ? static_cast<double>(small(rng)) : uniform(rng);
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return validate_matrix(values, n, n);
}

/// Euclidean matrix of random Gaussian points in `dim` dimensions.
inline DissimilarityMatrix random_point_matrix(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> values(n * dim);
  for (double& v : values) v = normal(rng);
  return build_matrix(PointSet(values, n, dim), Metric::Euclidean);
}

/// Uniformly random labels in 1..k, repaired so every cluster is used.
inline Clustering random_clustering(std::size_t n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, k);
  std::vector<int> labels(n);
  for (auto& l : labels) l = pick(rng);
  for (int c = 1; c <= k; ++c) labels[static_cast<std::size_t>(c - 1)] = c;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Clustering(labels, k);
}

struct BruteSilhouette {
  std::vector<double> a, b, s;
  double asw = 0.0;
};

/// s(i) = (b − a)/max(a, b) evaluated straight from the definition.
inline BruteSilhouette brute_silhouette(const DissimilarityMatrix& d, const std::vector<int>& labels) {
  const std::size_t n = d.size();
  const int k = *std::max_element(labels.begin(), labels.end());
  BruteSilhouette out;
  out.a.assign(n, 0.0);
  out.b.assign(n, 0.0);
  out.s.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double own = 0.0;
    int own_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && labels[j] == labels[i]) {
        own += d(i, j);
        ++own_count;
      }
    }
    double b = std::numeric_limits<double>::infinity();
    for (int c = 1; c <= k; ++c) {
      if (c == labels[i]) continue;
      double sum = 0.0;
      int count = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (labels[j] == c) {
          sum += d(i, j);
          ++count;
        }
      }
      if (count > 0) b = std::min(b, sum / count);
    }
    out.b[i] = b;
    if (own_count == 0) continue;
    const double a = own / own_count;
    out.a[i] = a;
    out.s[i] = std::max(a, b) == 0.0 ? 0.0 : (b - a) / std::max(a, b);
  }
  double total = 0.0;
  for (double s : out.s) total += s;
  out.asw = total / static_cast<double>(n);
  return out;
}

/// Off-diagonal entries of row i, sorted with a generic comparison sort.
inline std::vector<double> sorted_off_diagonal(const DissimilarityMatrix& d, std::size_t i) {
  std::vector<double> row;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != i) row.push_back(d(i, j));
  }
  std::sort(row.begin(), row.end());
  return row;
}

/// q(i, Λ) from the definition: fresh sums over the sorted row.
inline double brute_quotient(const DissimilarityMatrix& d, std::size_t i, std::size_t lambda) {
  if (lambda == 1) return 1.0;
  const auto row = sorted_off_diagonal(d, i);
  const std::size_t n = d.size();
  double near = 0.0;
  double far = 0.0;
  for (std::size_t j = 1; j <= lambda - 1; ++j) near += row[j - 1];
  for (std::size_t j = lambda; j <= n - 1; ++j) far += row[j - 1];
  return (static_cast<double>(n - lambda) / static_cast<double>(lambda - 1)) * (near / far);
}

/// 1 − min over Λ in [κ, n−κ] of brute_quotient, with the smallest minimiser.
inline std::pair<double, std::size_t> brute_bound(const DissimilarityMatrix& d, std::size_t i, std::size_t kappa) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t lambda = kappa; lambda <= d.size() - kappa; ++lambda) {
    const double q = brute_quotient(d, i, lambda);
    if (q < best) {
      best = q;
      arg = lambda;
    }
  }
  return {1.0 - best, arg};
}

/// Bell numbers via the Bell triangle.
inline std::uint64_t bell_number(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (const std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Stirling numbers of the second kind, S(n, k) = k·S(n−1, k) + S(n−1, k−1).
inline std::uint64_t stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n ? s[n][k] : 0;
}

/// Every set partition of {0..n−1} by brute-force labelling: all k^n label
/// vectors, kept when canonical (first occurrences in order 0,1,2,...).
template <typename Visit>
void brute_partitions(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> labels(n, 0);
  while (true) {
    std::size_t next_new = 0;
    bool canonical = true;
    for (std::size_t i = 0; i < n && canonical; ++i) {
      if (labels[i] > next_new) canonical = false;
      if (labels[i] == next_new) ++next_new;
    }
    if (canonical) visit(labels, next_new);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++labels[pos] < n) break;
      labels[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace silbound::testing
