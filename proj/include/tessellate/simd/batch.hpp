#pragma once

#include <cstddef>

namespace tessellate::simd {

/// Batch kernels backing the geometry and Monte Carlo inner loops.
///
/// Every kernel is elementwise over its output array and is written so the
/// scalar reference and the AVX2 variant perform the identical sequence of
/// IEEE double operations per element (no FMA contraction, reductions done
/// per element). The two implementations therefore produce bit-identical
/// results, which the equivalence test suite asserts exactly.
struct BatchKernels {
  // out[i] = (xs[i]*ux + ys[i]*uy) - off
  void (*signed_distance2)(const double* xs, const double* ys, std::size_t n,
                           double ux, double uy, double off, double* out);
  // out[i] = ((xs[i]*ux + ys[i]*uy) + zs[i]*uz) - off
  void (*signed_distance3)(const double* xs, const double* ys,
                           const double* zs, std::size_t n, double ux,
                           double uy, double uz, double off, double* out);
  // out[j] = max_i(xs[i]*ux[j] + ys[i]*uy[j]) - min_i(...)
  void (*width2)(const double* xs, const double* ys, std::size_t nv,
                 const double* ux, const double* uy, std::size_t nd,
                 double* out);
  void (*width3)(const double* xs, const double* ys, const double* zs,
                 std::size_t nv, const double* ux, const double* uy,
                 const double* uz, std::size_t nd, double* out);
  // out[i] = |ax[i]*by[i] - ay[i]*bx[i]|
  void (*abs_det2)(const double* ax, const double* ay, const double* bx,
                   const double* by, std::size_t n, double* out);
  // out[i] = |det(a_i, b_i, c_i)| via a . (b x c)
  void (*abs_det3)(const double* ax, const double* ay, const double* az,
                   const double* bx, const double* by, const double* bz,
                   const double* cx, const double* cy, const double* cz,
                   std::size_t n, double* out);
  // out[i] = |a_i x b_i| (parallelogram area of 3D vectors)
  void (*cross_norm3)(const double* ax, const double* ay, const double* az,
                      const double* bx, const double* by, const double* bz,
                      std::size_t n, double* out);
};

enum class Level { Scalar, Avx2 };

extern const BatchKernels scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const BatchKernels avx2_kernels;
#endif

/// True when the running CPU reports AVX2.
bool avx2_supported();

/// Level picked at startup: AVX2 when supported, overridable with the
/// TESSELLATE_SIMD environment variable ("scalar" or "avx2").
Level active_level();

/// Force a level; throws std::runtime_error for an unsupported request.
void set_level(Level level);

/// Dispatch table for the active level.
const BatchKernels& kernels();

}  // namespace tessellate::simd
