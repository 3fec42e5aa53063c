// SPDX-License-Identifier: Apache-2.0
#include "silbound/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "silbound/error.hpp"
#include "silbound/kernels.hpp"
#include "silbound/numeric.hpp"
#include "silbound/parallel.hpp"

namespace silbound {

namespace {

void check_kappa(std::size_t n, std::size_t kappa) {
  if (n < kMinBoundPoints) {
    throw Error(ErrorCode::TooFewPoints,
                "bounds need at least " + std::to_string(kMinBoundPoints) + " points, got " + std::to_string(n));
  }
  if (kappa < 1 || kappa > n / 2) {
    throw Error(ErrorCode::KappaOutOfRange,
                "kappa " + std::to_string(kappa) + " outside 1.." + std::to_string(n / 2));
  }
}

// q never exceeds 1 in exact arithmetic; rounding on constant rows can push
// it one ulp above.
double ceiling_from_quotient(double q) { return std::clamp(1.0 - q, 0.0, 1.0); }

}  // namespace

double lambda_quotient(const SortedDissimilarity& sorted, std::size_t i, std::size_t lambda) {
  const std::size_t n = sorted.size();
  if (lambda < 1 || lambda + 1 > n) {
    throw Error(ErrorCode::LambdaOutOfRange,
                "lambda " + std::to_string(lambda) + " outside 1.." + std::to_string(n - 1));
  }
  if (lambda == 1) return 1.0;
  const auto prefix = sorted.prefix(i);
  const double near = prefix[lambda - 1];
  const double far = prefix[n - 1] - near;
  return (near / static_cast<double>(lambda - 1)) / (far / static_cast<double>(n - lambda));
}

PointBound pointwise_bound(const SortedDissimilarity& sorted, std::size_t i, std::size_t kappa) {
  const std::size_t n = sorted.size();
  check_kappa(n, kappa);
  const auto best = kernels::active_kernels().min_quotient(sorted.prefix(i).data(), n, kappa, n - kappa);
  return {ceiling_from_quotient(best.value), best.lambda};
}

PointBound streaming_bound(std::span<const double> sorted_row, std::size_t kappa) {
  const std::size_t n = sorted_row.size() + 1;
  check_kappa(n, kappa);
  // sorted_row[j - 1] is the j-th smallest entry.
  CompensatedSum far;
  for (std::size_t j = kappa; j <= n - 1; ++j) far.add(sorted_row[j - 1]);
  CompensatedSum near;
  double q = 1.0;
  std::size_t arg = 1;
  if (kappa > 1) {
    for (std::size_t j = 1; j <= kappa - 1; ++j) near.add(sorted_row[j - 1]);
    q = (near.value() / static_cast<double>(kappa - 1)) / (far.value() / static_cast<double>(n - kappa));
    arg = kappa;
  }
  for (std::size_t lambda = kappa + 1; lambda <= n - kappa; ++lambda) {
    near.add(sorted_row[lambda - 2]);
    far.subtract(sorted_row[lambda - 2]);
    const double candidate =
        (near.value() / static_cast<double>(lambda - 1)) / (far.value() / static_cast<double>(n - lambda));
    if (candidate < q) {
      q = candidate;
      arg = lambda;
    }
  }
  return {ceiling_from_quotient(q), arg};
}

BoundReport bound_report(const SortedDissimilarity& sorted, std::size_t kappa, unsigned workers) {
  const std::size_t n = sorted.size();
  check_kappa(n, kappa);
  const auto& kern = kernels::active_kernels();

  BoundReport report;
  report.kappa = kappa;
  report.bounds.resize(n);
  report.lambda_star.resize(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const auto best = kern.min_quotient(sorted.prefix(i).data(), n, kappa, n - kappa);
    report.bounds[i] = ceiling_from_quotient(best.value);
    report.lambda_star[i] = best.lambda;
  });

  CompensatedSum total;
  for (const double b : report.bounds) total.add(b);
  report.ub = total.value() / static_cast<double>(n);
  const auto [lo, hi] = std::minmax_element(report.bounds.begin(), report.bounds.end());
  report.min_ub = *lo;
  report.max_ub = *hi;
  return report;
}

BoundReport bound_report(const DissimilarityMatrix& delta, std::size_t kappa, unsigned workers) {
  check_kappa(delta.size(), kappa);
  return bound_report(sort_rows(delta, workers), kappa, workers);
}

Clustering witness_clustering(const DissimilarityMatrix& delta, std::size_t i, std::size_t lambda_star) {
  const std::size_t n = delta.size();
  if (lambda_star < 1 || lambda_star + 1 > n) {
    throw Error(ErrorCode::LambdaOutOfRange,
                "lambda " + std::to_string(lambda_star) + " outside 1.." + std::to_string(n - 1));
  }
  if (i >= n) throw Error(ErrorCode::InvalidArgument, "point index out of range");

  std::vector<std::size_t> others;
  others.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) others.push_back(j);
  }
  const auto row = delta.row(i);
  std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });

  std::vector<int> raw(n, 2);
  raw[i] = 1;
  for (std::size_t k = 0; k + 1 < lambda_star; ++k) raw[others[k]] = 1;
  return Clustering::canonical(raw);
}

std::vector<double> ub_by_kappa(const SortedDissimilarity& sorted, unsigned workers) {
  const std::size_t n = sorted.size();
  check_kappa(n, 1);
  std::vector<double> ubs;
  for (std::size_t kappa = 1; kappa <= n / 2; ++kappa) {
    ubs.push_back(bound_report(sorted, kappa, workers).ub);
  }
  return ubs;
}

}  // namespace silbound
