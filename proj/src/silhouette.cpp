// SPDX-License-Identifier: Apache-2.0
#include "silbound/silhouette.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "silbound/error.hpp"
#include "silbound/parallel.hpp"

namespace silbound {

namespace {

void check_labels(const std::vector<int>& labels, int k) {
  if (labels.empty()) throw Error(ErrorCode::SizeMismatch, "clustering has no points");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > k) {
      throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(labels[i]) + " of point " +
                                                  std::to_string(i) + " is outside 1.." + std::to_string(k));
    }
    seen[static_cast<std::size_t>(labels[i] - 1)] = 1;
  }
  for (int c = 0; c < k; ++c) {
    if (!seen[static_cast<std::size_t>(c)]) {
      throw Error(ErrorCode::EmptyCluster, "cluster " + std::to_string(c + 1) + " has no members");
    }
  }
}

struct PointWidth {
  double a;
  double b;
  double s;
};

// Cohesion, separation and width of point i given per-cluster sums of its
// dissimilarities.
PointWidth point_width(std::size_t own, std::size_t k, std::span<const std::size_t> sizes,
                       std::span<const CompensatedSum> sums) {
  double b = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    if (c == own) continue;
    b = std::min(b, sums[c].value() / static_cast<double>(sizes[c]));
  }
  if (sizes[own] == 1) return {0.0, b, 0.0};
  const double a = sums[own].value() / static_cast<double>(sizes[own] - 1);
  double s = 0.0;
  if (a < b) {
    s = 1.0 - a / b;
  } else if (a > b) {
    s = b / a - 1.0;
  }
  return {a, b, s};
}

void accumulate_row(const DissimilarityMatrix& delta, std::size_t i, std::span<const std::size_t> assignment,
                    std::size_t k, std::span<CompensatedSum> sums) {
  std::fill(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(k), CompensatedSum{});
  const auto row = delta.row(i);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != i) sums[assignment[j]].add(row[j]);
  }
}

std::vector<std::size_t> to_assignment(const Clustering& clustering) {
  std::vector<std::size_t> assignment(clustering.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = clustering.cluster_of(i);
  return assignment;
}

void check_compatible(const DissimilarityMatrix& delta, const Clustering& clustering) {
  if (clustering.size() != delta.size()) {
    throw Error(ErrorCode::SizeMismatch, "clustering has " + std::to_string(clustering.size()) +
                                             " labels for " + std::to_string(delta.size()) + " points");
  }
  if (clustering.k() < 2) {
    throw Error(ErrorCode::SingleCluster, "silhouettes need at least two clusters");
  }
}

}  // namespace

Clustering::Clustering(std::vector<int> labels) : labels_(std::move(labels)) {
  k_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
  check_labels(labels_, std::max(k_, 1));
}

Clustering::Clustering(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
  if (k < 1) throw Error(ErrorCode::LabelOutOfRange, "cluster count must be positive");
  check_labels(labels_, k);
}

Clustering Clustering::canonical(std::span<const int> raw) {
  std::unordered_map<int, int> ids;
  std::vector<int> labels;
  labels.reserve(raw.size());
  for (const int value : raw) {
    auto [it, inserted] = ids.try_emplace(value, static_cast<int>(ids.size()) + 1);
    labels.push_back(it->second);
  }
  return Clustering(std::move(labels), static_cast<int>(ids.size()));
}

Clustering Clustering::from_assignment(std::span<const std::size_t> assignment) {
  std::vector<int> labels(assignment.size());
  std::transform(assignment.begin(), assignment.end(), labels.begin(),
                 [](std::size_t c) { return static_cast<int>(c) + 1; });
  return Clustering(std::move(labels));
}

std::vector<std::size_t> Clustering::cluster_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (const int label : labels_) ++sizes[static_cast<std::size_t>(label - 1)];
  return sizes;
}

double asw_of_assignment(const DissimilarityMatrix& delta, std::span<const std::size_t> assignment,
                         std::size_t k, std::span<const std::size_t> sizes, std::span<CompensatedSum> scratch,
                         std::span<double> widths) {
  const std::size_t n = delta.size();
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    accumulate_row(delta, i, assignment, k, scratch);
    const double s = point_width(assignment[i], k, sizes, scratch).s;
    if (!widths.empty()) widths[i] = s;
    total.add(s);
  }
  return total.value() / static_cast<double>(n);
}

SilhouetteReport silhouette_report(const DissimilarityMatrix& delta, const Clustering& clustering,
                                   unsigned workers) {
  check_compatible(delta, clustering);
  const std::size_t n = delta.size();
  const auto k = static_cast<std::size_t>(clustering.k());
  const auto assignment = to_assignment(clustering);
  const auto sizes = clustering.cluster_sizes();

  SilhouetteReport report;
  report.a.resize(n);
  report.b.resize(n);
  report.s.resize(n);
  parallel_for(n, workers, [&](std::size_t i) {
    std::vector<CompensatedSum> sums(k);
    accumulate_row(delta, i, assignment, k, sums);
    const PointWidth w = point_width(assignment[i], k, sizes, sums);
    if (sizes[assignment[i]] > 1) report.a[i] = w.a;
    report.b[i] = w.b;
    report.s[i] = w.s;
  });

  CompensatedSum total;
  for (const double s : report.s) total.add(s);
  report.asw = total.value() / static_cast<double>(n);
  return report;
}

double asw(const DissimilarityMatrix& delta, const Clustering& clustering) {
  check_compatible(delta, clustering);
  const auto k = static_cast<std::size_t>(clustering.k());
  const auto assignment = to_assignment(clustering);
  const auto sizes = clustering.cluster_sizes();
  std::vector<CompensatedSum> scratch(k);
  return asw_of_assignment(delta, assignment, k, sizes, scratch);
}

}  // namespace silbound
