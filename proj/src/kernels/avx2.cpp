// SPDX-License-Identifier: Apache-2.0
#include <immintrin.h>

#include <cstdint>

#include "silbound/kernels.hpp"

namespace silbound::kernels {
namespace {

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

double squared_l2_avx2(const double* a, const double* b, std::size_t m) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t d = 0;
  for (; d + 8 <= m; d += 8) {
    const __m256d diff0 = _mm256_sub_pd(_mm256_loadu_pd(a + d), _mm256_loadu_pd(b + d));
    const __m256d diff1 = _mm256_sub_pd(_mm256_loadu_pd(a + d + 4), _mm256_loadu_pd(b + d + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(diff0, diff0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(diff1, diff1));
  }
  for (; d + 4 <= m; d += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + d), _mm256_loadu_pd(b + d));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(diff, diff));
  }
  double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; d < m; ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

double dot_avx2(const double* a, const double* b, std::size_t m) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t d = 0;
  for (; d + 8 <= m; d += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + d), _mm256_loadu_pd(b + d)));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_mul_pd(_mm256_loadu_pd(a + d + 4), _mm256_loadu_pd(b + d + 4)));
  }
  for (; d + 4 <= m; d += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + d), _mm256_loadu_pd(b + d)));
  }
  double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; d < m; ++d) {
    sum += a[d] * b[d];
  }
  return sum;
}

QuotientMin min_quotient_avx2(const double* prefix, std::size_t n, std::size_t lo,
                              std::size_t hi) {
  const double total = prefix[n - 1];
  QuotientMin best{1.0, 1};
  std::size_t lambda = lo;
  if (lambda == 1) {
    lambda = 2;
  } else {
    best.value = 2.0;
    best.lambda = 0;
  }

  if (lambda + 4 <= hi + 1) {
    const __m256d totals = _mm256_set1_pd(total);
    const __m256d ns = _mm256_set1_pd(static_cast<double>(n));
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d lambdas = _mm256_setr_pd(static_cast<double>(lambda), static_cast<double>(lambda + 1),
                                     static_cast<double>(lambda + 2),
                                     static_cast<double>(lambda + 3));
    __m256d lane_best = _mm256_set1_pd(best.value);
    __m256d lane_arg = _mm256_set1_pd(static_cast<double>(best.lambda));

    for (; lambda + 4 <= hi + 1; lambda += 4) {
      const __m256d near = _mm256_loadu_pd(prefix + lambda - 1);
      const __m256d far = _mm256_sub_pd(totals, near);
      const __m256d near_mean = _mm256_div_pd(near, _mm256_sub_pd(lambdas, ones));
      const __m256d far_mean = _mm256_div_pd(far, _mm256_sub_pd(ns, lambdas));
      const __m256d q = _mm256_div_pd(near_mean, far_mean);
      const __m256d better = _mm256_cmp_pd(q, lane_best, _CMP_LT_OQ);
      lane_best = _mm256_blendv_pd(lane_best, q, better);
      lane_arg = _mm256_blendv_pd(lane_arg, lambdas, better);
      lambdas = _mm256_add_pd(lambdas, step);
    }

    alignas(32) double values[4];
    alignas(32) double args[4];
    _mm256_store_pd(values, lane_best);
    _mm256_store_pd(args, lane_arg);
    // Lanes are merged with an explicit tie rule so the earliest Λ wins, as
    // in the sequential scan.
    for (int lane = 0; lane < 4; ++lane) {
      const auto arg = static_cast<std::size_t>(args[lane]);
      if (values[lane] < best.value || (values[lane] == best.value && arg < best.lambda)) {
        best.value = values[lane];
        best.lambda = arg;
      }
    }
  }

  for (; lambda <= hi; ++lambda) {
    const double near = prefix[lambda - 1];
    const double far = total - near;
    const double q = (near / static_cast<double>(lambda - 1)) / (far / static_cast<double>(n - lambda));
    if (q < best.value) {
      best.value = q;
      best.lambda = lambda;
    }
  }
  return best;
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable table{"avx2", &squared_l2_avx2, &dot_avx2, &min_quotient_avx2};
  return &table;
}

}  // namespace silbound::kernels
