// SPDX-License-Identifier: Apache-2.0
#include "silbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "silbound/error.hpp"

namespace silbound {

PartitionEnumerator::PartitionEnumerator(std::size_t n, PartitionConstraints constraints)
    : n_(n), constraints_(constraints), assignment_(n, 0), sizes_(n, 0) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cannot enumerate partitions of an empty set");
  if (n > kMaxOraclePoints) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration is capped at n = " +
                                         std::to_string(kMaxOraclePoints) + ", got " + std::to_string(n));
  }
  if (constraints_.min_size < 1) constraints_.min_size = 1;
  if (constraints_.max_k != 0 && constraints_.max_k < constraints_.min_k) done_ = true;
}

bool PartitionEnumerator::feasible(std::size_t filled) const {
  const std::size_t remaining = n_ - filled;
  const std::size_t missing_blocks = constraints_.min_k > blocks_ ? constraints_.min_k - blocks_ : 0;
  return deficit_ + missing_blocks * constraints_.min_size <= remaining;
}

bool PartitionEnumerator::try_value(std::size_t pos, std::size_t value) {
  if (value == blocks_) {
    if (constraints_.max_k != 0 && blocks_ >= constraints_.max_k) return false;
    ++blocks_;
    sizes_[value] = 1;
    deficit_ += constraints_.min_size - 1;
  } else {
    if (sizes_[value] < constraints_.min_size) --deficit_;
    ++sizes_[value];
  }
  assignment_[pos] = value;
  if (feasible(pos + 1)) return true;
  unassign(pos);
  return false;
}

void PartitionEnumerator::unassign(std::size_t pos) {
  const std::size_t value = assignment_[pos];
  --sizes_[value];
  if (sizes_[value] == 0) {
    --blocks_;
    deficit_ -= constraints_.min_size - 1;
  } else if (sizes_[value] < constraints_.min_size) {
    ++deficit_;
  }
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  std::size_t pos = 0;
  std::size_t start = 0;
  if (started_) {
    pos = n_ - 1;
    start = assignment_[pos] + 1;
    unassign(pos);
  }
  started_ = true;

  while (pos < n_) {
    bool placed = false;
    for (std::size_t value = start; value <= blocks_; ++value) {
      if (try_value(pos, value)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++pos;
      start = 0;
      continue;
    }
    if (pos == 0) {
      done_ = true;
      return false;
    }
    --pos;
    start = assignment_[pos] + 1;
    unassign(pos);
  }
  return true;
}

std::uint64_t count_partitions(std::size_t n, PartitionConstraints constraints) {
  PartitionEnumerator it(n, constraints);
  std::uint64_t count = 0;
  while (it.next()) ++count;
  return count;
}

OptimalResult optimal_asw(const DissimilarityMatrix& delta, PartitionConstraints constraints) {
  const std::size_t n = delta.size();
  constraints.min_k = std::max<std::size_t>(constraints.min_k, 2);
  PartitionEnumerator it(n, constraints);

  std::vector<CompensatedSum> scratch(n);
  std::vector<std::size_t> best_assignment;
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t ties = 0;
  std::uint64_t evaluated = 0;
  while (it.next()) {
    ++evaluated;
    const double value = asw_of_assignment(delta, it.assignment(), it.blocks(), it.sizes(), scratch);
    const double tol = kTieTolerance * std::max(1.0, std::fabs(best));
    if (best_assignment.empty() || value > best + tol) {
      best = value;
      best_assignment.assign(it.assignment().begin(), it.assignment().end());
      ties = 1;
    } else if (std::fabs(value - best) <= tol) {
      ++ties;
    }
  }
  if (best_assignment.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no partition satisfies the constraints");
  }
  return OptimalResult{Clustering::from_assignment(best_assignment), best, ties, evaluated};
}

std::vector<PerKOptimum> best_per_k(const DissimilarityMatrix& delta, std::size_t k_min, std::size_t k_max,
                                    std::size_t min_size) {
  const std::size_t n = delta.size();
  if (k_min < 2 || k_max < k_min || k_max > n) {
    throw Error(ErrorCode::KOutOfRange, "K range " + std::to_string(k_min) + ".." + std::to_string(k_max) +
                                            " must lie within 2.." + std::to_string(n));
  }
  PartitionEnumerator it(n, {k_min, k_max, min_size});

  const std::size_t span = k_max - k_min + 1;
  std::vector<double> best(span, -std::numeric_limits<double>::infinity());
  std::vector<std::vector<std::size_t>> best_assignment(span);
  std::vector<CompensatedSum> scratch(n);
  while (it.next()) {
    const std::size_t slot = it.blocks() - k_min;
    const double value = asw_of_assignment(delta, it.assignment(), it.blocks(), it.sizes(), scratch);
    if (best_assignment[slot].empty() || value > best[slot]) {
      best[slot] = value;
      best_assignment[slot].assign(it.assignment().begin(), it.assignment().end());
    }
  }

  std::vector<PerKOptimum> table;
  for (std::size_t slot = 0; slot < span; ++slot) {
    if (best_assignment[slot].empty()) continue;  // K infeasible under min_size
    table.push_back({k_min + slot, Clustering::from_assignment(best_assignment[slot]), best[slot]});
  }
  return table;
}

}  // namespace silbound
