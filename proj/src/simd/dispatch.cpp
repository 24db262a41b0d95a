#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "tessellate/simd/batch.hpp"

namespace tessellate::simd {
namespace {

Level detect_initial_level() {
  if (const char* env = std::getenv("TESSELLATE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Level::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Level::Avx2;
    return Level::Scalar;
  }
  return avx2_supported() ? Level::Avx2 : Level::Scalar;
}

std::atomic<Level>& level_slot() {
  static std::atomic<Level> level{detect_initial_level()};
  return level;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Level active_level() { return level_slot().load(std::memory_order_relaxed); }

void set_level(Level level) {
  if (level == Level::Avx2 && !avx2_supported()) {
    throw std::runtime_error("AVX2 not supported on this CPU");
  }
  level_slot().store(level, std::memory_order_relaxed);
}

const BatchKernels& kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  return active_level() == Level::Avx2 ? avx2_kernels : scalar_kernels;
#else
  return scalar_kernels;
#endif
}

}  // namespace tessellate::simd
