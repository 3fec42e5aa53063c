// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <string_view>

#include "silbound/kernels.hpp"

namespace silbound::kernels {

#ifndef SILBOUND_HAVE_AVX2
const KernelTable* avx2_kernels() noexcept { return nullptr; }
#endif

bool cpu_supports_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelTable& select_kernels() noexcept {
  if (const char* forced = std::getenv("SILBOUND_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const KernelTable* avx2 = avx2_kernels(); avx2 != nullptr && cpu_supports_avx2()) {
    return *avx2;
  }
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace silbound::kernels
