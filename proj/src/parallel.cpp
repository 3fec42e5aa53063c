// SPDX-License-Identifier: Apache-2.0
#include "silbound/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace silbound {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SILBOUND_THREADS"); env != nullptr) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (...) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace silbound
