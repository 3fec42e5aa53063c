// SPDX-License-Identifier: Apache-2.0
#include "silbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "silbound/error.hpp"
#include "silbound/kernels.hpp"
#include "silbound/numeric.hpp"
#include "silbound/parallel.hpp"

namespace silbound {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void reject_all_zero_rows(std::span<const double> values, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = values.subspan(i * n, n);
    if (std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; })) {
      throw Error(ErrorCode::AllZeroRow,
                  "row " + std::to_string(i) + " is all zeros (point coincides with every other point)");
    }
  }
}

}  // namespace

PointSet::PointSet(std::vector<double> values, std::size_t n, std::size_t m)
    : values_(std::move(values)), n_(n), m_(m) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a point set needs at least 2 observations");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "a point set needs at least 1 feature");
  if (values_.size() != n * m) {
    throw Error(ErrorCode::InvalidArgument, "point buffer holds " + std::to_string(values_.size()) +
                                                " values, expected " + std::to_string(n * m));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw Error(ErrorCode::NonFiniteInput, "point " + std::to_string(k / m) + ", feature " +
                                                 std::to_string(k % m) + " is not finite");
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  std::vector<double> values;
  values.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) {
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i) + " has " +
                                                  std::to_string(rows[i].size()) + " features, expected " +
                                                  std::to_string(m));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return PointSet(std::move(values), n, m);
}

std::string_view metric_name(Metric metric) noexcept {
  switch (metric) {
    case Metric::Euclidean: return "euclidean";
    case Metric::Cosine: return "cosine";
    case Metric::Correlation: return "correlation";
    case Metric::Jaccard: return "jaccard";
  }
  return "euclidean";
}

Metric parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::Euclidean;
  if (name == "cosine") return Metric::Cosine;
  if (name == "correlation") return Metric::Correlation;
  if (name == "jaccard") return Metric::Jaccard;
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

DissimilarityMatrix DissimilarityMatrix::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::InvalidArgument, "scale factor must be positive and finite");
  }
  std::vector<double> values(values_.size());
  std::transform(values_.begin(), values_.end(), values.begin(), [factor](double v) { return v * factor; });
  return DissimilarityMatrix(std::move(values), n_);
}

DissimilarityMatrix validate_matrix(std::span<const double> raw, std::size_t rows, std::size_t cols) {
  if (rows != cols || raw.size() != rows * cols) {
    throw Error(ErrorCode::NotSquare, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  const std::size_t n = rows;
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "a dissimilarity matrix needs n >= 2");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(raw[i * n + j])) {
        throw Error(ErrorCode::NonFiniteEntry, "entry " + cell(i, j) + " is not finite");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i * n + j] < 0.0) {
        throw Error(ErrorCode::NegativeEntry,
                    "entry " + cell(i, j) + " is negative (non-negativity violated)");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i * n + i] != 0.0) {
      throw Error(ErrorCode::NonzeroDiagonal,
                  "diagonal entry (" + std::to_string(i) + ") is not zero (zero diagonal violated)");
    }
  }

  std::vector<double> values(raw.begin(), raw.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = values[i * n + j];
      const double lower = values[j * n + i];
      if (std::fabs(upper - lower) > kSymmetryTolerance * std::max(1.0, std::fabs(upper))) {
        throw Error(ErrorCode::Asymmetric, "entries " + cell(i, j) + " and " + cell(j, i) +
                                               " differ (symmetry violated)");
      }
      const double mean = upper == lower ? upper : 0.5 * (upper + lower);
      values[i * n + j] = mean;
      values[j * n + i] = mean;
    }
  }
  reject_all_zero_rows(values, n);
  return DissimilarityMatrix(std::move(values), n);
}

DissimilarityMatrix validate_matrix(const std::vector<std::vector<double>>& raw) {
  const std::size_t rows = raw.size();
  std::vector<double> flat;
  flat.reserve(rows * rows);
  for (const auto& row : raw) {
    if (row.size() != rows) {
      throw Error(ErrorCode::NotSquare, "row of length " + std::to_string(row.size()) + " in a matrix with " +
                                            std::to_string(rows) + " rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_matrix(flat, rows, rows);
}

DissimilarityMatrix build_matrix(const PointSet& points, Metric metric, unsigned workers) {
  const std::size_t n = points.size();
  const std::size_t m = points.dimension();
  const auto& kern = kernels::active_kernels();

  // Cosine and correlation reduce to inner products of unit rows.
  std::vector<double> unit;
  if (metric == Metric::Cosine || metric == Metric::Correlation) {
    unit.assign(points.values().begin(), points.values().end());
    for (std::size_t i = 0; i < n; ++i) {
      double* row = unit.data() + i * m;
      if (metric == Metric::Correlation) {
        const double mean = std::accumulate(row, row + m, 0.0) / static_cast<double>(m);
        for (std::size_t d = 0; d < m; ++d) row[d] -= mean;
      }
      const double norm = std::sqrt(kern.dot(row, row, m));
      if (!(norm > 0.0)) {
        throw Error(ErrorCode::ZeroVector,
                    "point " + std::to_string(i) +
                        (metric == Metric::Correlation ? " is constant" : " is the zero vector"));
      }
      for (std::size_t d = 0; d < m; ++d) row[d] /= norm;
    }
  }

  std::vector<char> bits;
  if (metric == Metric::Jaccard) {
    bits.resize(n * m);
    const auto values = points.values();
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] != 0.0 && values[k] != 1.0) {
        throw Error(ErrorCode::NonBinaryInput, "point " + std::to_string(k / m) + ", feature " +
                                                   std::to_string(k % m) + " is not 0 or 1");
      }
      bits[k] = values[k] == 1.0 ? 1 : 0;
    }
  }

  std::vector<double> values(n * n, 0.0);
  parallel_for(n, workers, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = 0.0;
      switch (metric) {
        case Metric::Euclidean:
          d = std::sqrt(kern.squared_l2(points.point(i).data(), points.point(j).data(), m));
          break;
        case Metric::Cosine:
        case Metric::Correlation:
          d = std::clamp(1.0 - kern.dot(unit.data() + i * m, unit.data() + j * m, m), 0.0, 2.0);
          break;
        case Metric::Jaccard: {
          std::size_t both = 0;
          std::size_t any = 0;
          for (std::size_t f = 0; f < m; ++f) {
            both += static_cast<std::size_t>(bits[i * m + f] & bits[j * m + f]);
            any += static_cast<std::size_t>(bits[i * m + f] | bits[j * m + f]);
          }
          d = any == 0 ? 0.0 : 1.0 - static_cast<double>(both) / static_cast<double>(any);
          break;
        }
      }
      values[i * n + j] = d;
      values[j * n + i] = d;
    }
  });

  reject_all_zero_rows(values, n);
  return DissimilarityMatrix(std::move(values), n);
}

SortedDissimilarity sort_rows(const DissimilarityMatrix& delta, unsigned workers) {
  const std::size_t n = delta.size();
  SortedDissimilarity sorted;
  sorted.n_ = n;
  sorted.rows_.resize(n * (n - 1));
  sorted.prefix_.resize(n * n);

  parallel_for(n, workers, [&](std::size_t i) {
    double* out = sorted.rows_.data() + i * (n - 1);
    const auto row = delta.row(i);
    std::copy(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(i), out);
    std::copy(row.begin() + static_cast<std::ptrdiff_t>(i) + 1, row.end(), out + i);
    // Values only: equal entries are indistinguishable, so a plain sort gives
    // the same row as a stable-by-column sort.
    std::sort(out, out + (n - 1));

    double* prefix = sorted.prefix_.data() + i * n;
    CompensatedSum running;
    prefix[0] = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      running.add(out[k]);
      prefix[k + 1] = running.value();
    }
  });
  return sorted;
}

}  // namespace silbound
