// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/silhouette.hpp"

/**
 * @file bounds.hpp
 * @brief Sharp per-point silhouette ceilings and the dataset-level ASW ceiling.
 *
 * For point i with sorted off-diagonal row d_1 <= ... <= d_{n-1}, the
 * Λ-quotient compares the mean of the Λ−1 smallest entries with the mean of
 * the n−Λ largest:
 *
 *     q(i, Λ) = ((n−Λ)/(Λ−1)) · (d_1 + ... + d_{Λ−1}) / (d_Λ + ... + d_{n−1}),  q(i, 1) = 1.
 *
 * Any clustering in which i sits in a cluster of size |C| satisfies
 * a(i)/b(i) >= q(i, |C|), so s(i) <= 1 − min_Λ q(i, Λ). Restricting Λ to
 * [κ, n−κ] gives the ceiling over clusterings whose clusters all have at
 * least κ members. The ceiling is attained by the 2-clustering that puts i
 * with its Λ*−1 nearest neighbours.
 *
 * Point indices are 0-based; Λ and κ are counts.
 */

namespace silbound {

/// Smallest point count accepted by the bound routines.
inline constexpr std::size_t kMinBoundPoints = 4;

/// q(i, Λ) for 1 <= Λ <= n−1, from the prefix sums. Throws LambdaOutOfRange.
double lambda_quotient(const SortedDissimilarity& sorted, std::size_t i, std::size_t lambda);

struct PointBound {
  /// 1 − f_κ(i), in [0, 1].
  double bound = 0.0;
  /// Smallest Λ attaining the minimal quotient.
  std::size_t lambda_star = 1;
};

/// Ceiling for point i over Λ in [κ, n−κ]. Throws TooFewPoints, KappaOutOfRange.
PointBound pointwise_bound(const SortedDissimilarity& sorted, std::size_t i, std::size_t kappa);

/**
 * The same ceiling computed by a single pass over a sorted row with running
 * near/far sums updated one entry at a time (compensated). Independent of the
 * prefix table and the vector kernels; used to cross-check them.
 */
PointBound streaming_bound(std::span<const double> sorted_row, std::size_t kappa);

struct BoundReport {
  std::size_t kappa = 1;
  std::vector<double> bounds;
  std::vector<std::size_t> lambda_star;
  double ub = 0.0;
  double min_ub = 0.0;
  double max_ub = 0.0;
};

/// Ceilings for every point plus their mean (UB_κ), minimum and maximum.
BoundReport bound_report(const DissimilarityMatrix& delta, std::size_t kappa, unsigned workers = 0);
BoundReport bound_report(const SortedDissimilarity& sorted, std::size_t kappa, unsigned workers = 0);

/**
 * 2-clustering {i and its Λ*−1 nearest neighbours | the rest}; neighbours
 * with equal dissimilarity are taken in index order. For Λ* = 1 point i is a
 * singleton. Throws LambdaOutOfRange unless 1 <= Λ* <= n−1.
 */
Clustering witness_clustering(const DissimilarityMatrix& delta, std::size_t i, std::size_t lambda_star);

/// UB_κ for κ = 1..⌊n/2⌋ (index 0 holds κ = 1).
std::vector<double> ub_by_kappa(const SortedDissimilarity& sorted, unsigned workers = 0);

}  // namespace silbound
