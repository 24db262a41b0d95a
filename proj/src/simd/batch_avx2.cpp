#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "tessellate/simd/batch.hpp"

// AVX2 variants of the batch kernels. This translation unit is the only one
// compiled with -mavx2; it is reached only after the runtime dispatch has
// confirmed CPU support. Arithmetic stays mul-then-add (no FMA) so results
// match the scalar reference exactly.

namespace tessellate::simd {
namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

void signed_distance2_avx2(const double* xs, const double* ys, std::size_t n,
                           double ux, double uy, double off, double* out) {
  const __m256d vux = _mm256_set1_pd(ux);
  const __m256d vuy = _mm256_set1_pd(uy);
  const __m256d voff = _mm256_set1_pd(off);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d d =
        _mm256_add_pd(_mm256_mul_pd(x, vux), _mm256_mul_pd(y, vuy));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(d, voff));
  }
  for (; i < n; ++i) out[i] = (xs[i] * ux + ys[i] * uy) - off;
}

void signed_distance3_avx2(const double* xs, const double* ys,
                           const double* zs, std::size_t n, double ux,
                           double uy, double uz, double off, double* out) {
  const __m256d vux = _mm256_set1_pd(ux);
  const __m256d vuy = _mm256_set1_pd(uy);
  const __m256d vuz = _mm256_set1_pd(uz);
  const __m256d voff = _mm256_set1_pd(off);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d z = _mm256_loadu_pd(zs + i);
    __m256d d = _mm256_add_pd(_mm256_mul_pd(x, vux), _mm256_mul_pd(y, vuy));
    d = _mm256_add_pd(d, _mm256_mul_pd(z, vuz));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(d, voff));
  }
  for (; i < n; ++i) out[i] = ((xs[i] * ux + ys[i] * uy) + zs[i] * uz) - off;
}

void width2_avx2(const double* xs, const double* ys, std::size_t nv,
                 const double* ux, const double* uy, std::size_t nd,
                 double* out) {
  std::size_t j = 0;
  for (; j + 4 <= nd; j += 4) {
    const __m256d vux = _mm256_loadu_pd(ux + j);
    const __m256d vuy = _mm256_loadu_pd(uy + j);
    __m256d lo = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d hi = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < nv; ++i) {
      const __m256d x = _mm256_set1_pd(xs[i]);
      const __m256d y = _mm256_set1_pd(ys[i]);
      const __m256d d =
          _mm256_add_pd(_mm256_mul_pd(x, vux), _mm256_mul_pd(y, vuy));
      lo = _mm256_min_pd(lo, d);
      hi = _mm256_max_pd(hi, d);
    }
    _mm256_storeu_pd(out + j, _mm256_sub_pd(hi, lo));
  }
  for (; j < nd; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nv; ++i) {
      const double d = xs[i] * ux[j] + ys[i] * uy[j];
      lo = d < lo ? d : lo;
      hi = d > hi ? d : hi;
    }
    out[j] = hi - lo;
  }
}

void width3_avx2(const double* xs, const double* ys, const double* zs,
                 std::size_t nv, const double* ux, const double* uy,
                 const double* uz, std::size_t nd, double* out) {
  std::size_t j = 0;
  for (; j + 4 <= nd; j += 4) {
    const __m256d vux = _mm256_loadu_pd(ux + j);
    const __m256d vuy = _mm256_loadu_pd(uy + j);
    const __m256d vuz = _mm256_loadu_pd(uz + j);
    __m256d lo = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d hi = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < nv; ++i) {
      __m256d d = _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(xs[i]), vux),
                                _mm256_mul_pd(_mm256_set1_pd(ys[i]), vuy));
      d = _mm256_add_pd(d, _mm256_mul_pd(_mm256_set1_pd(zs[i]), vuz));
      lo = _mm256_min_pd(lo, d);
      hi = _mm256_max_pd(hi, d);
    }
    _mm256_storeu_pd(out + j, _mm256_sub_pd(hi, lo));
  }
  for (; j < nd; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nv; ++i) {
      const double d = (xs[i] * ux[j] + ys[i] * uy[j]) + zs[i] * uz[j];
      lo = d < lo ? d : lo;
      hi = d > hi ? d : hi;
    }
    out[j] = hi - lo;
  }
}

void abs_det2_avx2(const double* ax, const double* ay, const double* bx,
                   const double* by, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vax = _mm256_loadu_pd(ax + i);
    const __m256d vay = _mm256_loadu_pd(ay + i);
    const __m256d vbx = _mm256_loadu_pd(bx + i);
    const __m256d vby = _mm256_loadu_pd(by + i);
    const __m256d det =
        _mm256_sub_pd(_mm256_mul_pd(vax, vby), _mm256_mul_pd(vay, vbx));
    _mm256_storeu_pd(out + i, abs_pd(det));
  }
  for (; i < n; ++i) out[i] = std::fabs(ax[i] * by[i] - ay[i] * bx[i]);
}

void abs_det3_avx2(const double* ax, const double* ay, const double* az,
                   const double* bx, const double* by, const double* bz,
                   const double* cx, const double* cy, const double* cz,
                   std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vbx = _mm256_loadu_pd(bx + i);
    const __m256d vby = _mm256_loadu_pd(by + i);
    const __m256d vbz = _mm256_loadu_pd(bz + i);
    const __m256d vcx = _mm256_loadu_pd(cx + i);
    const __m256d vcy = _mm256_loadu_pd(cy + i);
    const __m256d vcz = _mm256_loadu_pd(cz + i);
    const __m256d mx =
        _mm256_sub_pd(_mm256_mul_pd(vby, vcz), _mm256_mul_pd(vbz, vcy));
    const __m256d my =
        _mm256_sub_pd(_mm256_mul_pd(vbz, vcx), _mm256_mul_pd(vbx, vcz));
    const __m256d mz =
        _mm256_sub_pd(_mm256_mul_pd(vbx, vcy), _mm256_mul_pd(vby, vcx));
    __m256d d = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(ax + i), mx),
                              _mm256_mul_pd(_mm256_loadu_pd(ay + i), my));
    d = _mm256_add_pd(d, _mm256_mul_pd(_mm256_loadu_pd(az + i), mz));
    _mm256_storeu_pd(out + i, abs_pd(d));
  }
  for (; i < n; ++i) {
    const double mx = by[i] * cz[i] - bz[i] * cy[i];
    const double my = bz[i] * cx[i] - bx[i] * cz[i];
    const double mz = bx[i] * cy[i] - by[i] * cx[i];
    out[i] = std::fabs((ax[i] * mx + ay[i] * my) + az[i] * mz);
  }
}

void cross_norm3_avx2(const double* ax, const double* ay, const double* az,
                      const double* bx, const double* by, const double* bz,
                      std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vax = _mm256_loadu_pd(ax + i);
    const __m256d vay = _mm256_loadu_pd(ay + i);
    const __m256d vaz = _mm256_loadu_pd(az + i);
    const __m256d vbx = _mm256_loadu_pd(bx + i);
    const __m256d vby = _mm256_loadu_pd(by + i);
    const __m256d vbz = _mm256_loadu_pd(bz + i);
    const __m256d mx =
        _mm256_sub_pd(_mm256_mul_pd(vay, vbz), _mm256_mul_pd(vaz, vby));
    const __m256d my =
        _mm256_sub_pd(_mm256_mul_pd(vaz, vbx), _mm256_mul_pd(vax, vbz));
    const __m256d mz =
        _mm256_sub_pd(_mm256_mul_pd(vax, vby), _mm256_mul_pd(vay, vbx));
    __m256d s = _mm256_add_pd(_mm256_mul_pd(mx, mx), _mm256_mul_pd(my, my));
    s = _mm256_add_pd(s, _mm256_mul_pd(mz, mz));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  for (; i < n; ++i) {
    const double mx = ay[i] * bz[i] - az[i] * by[i];
    const double my = az[i] * bx[i] - ax[i] * bz[i];
    const double mz = ax[i] * by[i] - ay[i] * bx[i];
    out[i] = std::sqrt((mx * mx + my * my) + mz * mz);
  }
}

}  // namespace

const BatchKernels avx2_kernels = {
    signed_distance2_avx2, signed_distance3_avx2, width2_avx2,
    width3_avx2,           abs_det2_avx2,         abs_det3_avx2,
    cross_norm3_avx2,
};

}  // namespace tessellate::simd

#endif  // x86_64
