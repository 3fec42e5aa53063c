// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace silbound {

/// n observations with m real features, stored row-major.
class PointSet {
 public:
  /// Throws NonFiniteInput for NaN/inf entries, InvalidArgument for n < 2,
  /// m < 1 or a values size that is not n*m.
  PointSet(std::vector<double> values, std::size_t n, std::size_t m);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return m_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {values_.data() + i * m_, m_};
  }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

enum class Metric { Euclidean, Cosine, Correlation, Jaccard };

std::string_view metric_name(Metric metric) noexcept;

/// Throws InvalidArgument for unknown names.
Metric parse_metric(std::string_view name);

/**
 * Symmetric, non-negative, zero-diagonal n×n matrix without all-zero rows.
 *
 * Instances only come out of validate_matrix() or build_matrix(), so every
 * DissimilarityMatrix in the program satisfies those invariants. The triangle
 * inequality is not required.
 */
class DissimilarityMatrix {
 public:
  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * n_, n_}; }

  std::span<const double> values() const noexcept { return values_; }

  /// c·Δ for c > 0; the result is still a valid matrix.
  DissimilarityMatrix scaled(double factor) const;

 private:
  DissimilarityMatrix(std::vector<double> values, std::size_t n)
      : values_(std::move(values)), n_(n) {}

  friend DissimilarityMatrix validate_matrix(std::span<const double>, std::size_t, std::size_t);
  friend DissimilarityMatrix build_matrix(const PointSet&, Metric, unsigned);

  std::vector<double> values_;
  std::size_t n_ = 0;
};

/// Relative tolerance used when accepting nearly symmetric input.
inline constexpr double kSymmetryTolerance = 1e-9;

/**
 * Checks a raw row-major rows×cols matrix and returns it as a
 * DissimilarityMatrix. Pairs within kSymmetryTolerance·max(1,|d_ij|) of each
 * other are replaced by their average.
 *
 * Errors: NotSquare, TooFewPoints (n < 2), NonFiniteEntry(i,j),
 * NegativeEntry(i,j), NonzeroDiagonal(i), Asymmetric(i,j), AllZeroRow(i).
 */
DissimilarityMatrix validate_matrix(std::span<const double> raw, std::size_t rows, std::size_t cols);
DissimilarityMatrix validate_matrix(const std::vector<std::vector<double>>& raw);

/**
 * Pairwise dissimilarities of a point set.
 *
 * euclidean: ‖x−y‖₂; cosine: 1 − x·y/(‖x‖‖y‖); correlation: cosine of the
 * mean-centred rows; jaccard: 1 − |x∧y|/|x∨y| on binary rows.
 * Errors: ZeroVector (cosine/correlation on a zero or constant row),
 * NonBinaryInput (jaccard), AllZeroRow (a point coincides with every other).
 */
DissimilarityMatrix build_matrix(const PointSet& points, Metric metric, unsigned workers = 0);

/**
 * Row-wise ascending off-diagonal entries (n×(n−1)) plus running prefix sums
 * (n×n, prefix(i)[k] = sum of the k smallest entries of row i).
 */
class SortedDissimilarity {
 public:
  std::size_t size() const noexcept { return n_; }

  /// The n−1 sorted off-diagonal entries of row i.
  std::span<const double> row(std::size_t i) const noexcept {
    return {rows_.data() + i * (n_ - 1), n_ - 1};
  }

  /// n entries, prefix(i)[0] = 0 and prefix(i)[n−1] = row total.
  std::span<const double> prefix(std::size_t i) const noexcept {
    return {prefix_.data() + i * n_, n_};
  }

  /// Sum of sorted entries with 1-based positions first..last (inclusive).
  double range_sum(std::size_t i, std::size_t first, std::size_t last) const noexcept {
    return prefix_[i * n_ + last] - prefix_[i * n_ + first - 1];
  }

 private:
  friend SortedDissimilarity sort_rows(const DissimilarityMatrix&, unsigned);

  std::vector<double> rows_;
  std::vector<double> prefix_;
  std::size_t n_ = 0;
};

SortedDissimilarity sort_rows(const DissimilarityMatrix& delta, unsigned workers = 0);

}  // namespace silbound
