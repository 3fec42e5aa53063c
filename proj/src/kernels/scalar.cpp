// SPDX-License-Identifier: Apache-2.0
#include "silbound/kernels.hpp"

namespace silbound::kernels {
namespace {

double squared_l2_scalar(const double* a, const double* b, std::size_t m) {
  double sum = 0.0;
  for (std::size_t d = 0; d < m; ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

double dot_scalar(const double* a, const double* b, std::size_t m) {
  double sum = 0.0;
  for (std::size_t d = 0; d < m; ++d) {
    sum += a[d] * b[d];
  }
  return sum;
}

QuotientMin min_quotient_scalar(const double* prefix, std::size_t n, std::size_t lo,
                                std::size_t hi) {
  const double total = prefix[n - 1];
  QuotientMin best{1.0, 1};
  std::size_t lambda = lo;
  if (lambda == 1) {
    lambda = 2;
  } else {
    best.value = 2.0;  // replaced by the first admissible quotient (all are <= 1)
    best.lambda = 0;
  }
  for (; lambda <= hi; ++lambda) {
    const double near = prefix[lambda - 1];
    const double far = total - near;
    const double near_mean = near / static_cast<double>(lambda - 1);
    const double far_mean = far / static_cast<double>(n - lambda);
    const double q = near_mean / far_mean;
    if (q < best.value) {
      best.value = q;
      best.lambda = lambda;
    }
  }
  return best;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar", &squared_l2_scalar, &dot_scalar, &min_quotient_scalar};
  return table;
}

}  // namespace silbound::kernels
