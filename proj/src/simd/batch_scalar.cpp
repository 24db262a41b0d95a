#include <cmath>
#include <limits>

#include "tessellate/simd/batch.hpp"

// Scalar reference kernels. These define the semantics; the AVX2 variants
// must reproduce them bit for bit (test_simd_equiv asserts exact equality).

namespace tessellate::simd {
namespace {

void signed_distance2_scalar(const double* xs, const double* ys,
                             std::size_t n, double ux, double uy, double off,
                             double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (xs[i] * ux + ys[i] * uy) - off;
  }
}

void signed_distance3_scalar(const double* xs, const double* ys,
                             const double* zs, std::size_t n, double ux,
                             double uy, double uz, double off, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ((xs[i] * ux + ys[i] * uy) + zs[i] * uz) - off;
  }
}

void width2_scalar(const double* xs, const double* ys, std::size_t nv,
                   const double* ux, const double* uy, std::size_t nd,
                   double* out) {
  for (std::size_t j = 0; j < nd; ++j) {
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

void width3_scalar(const double* xs, const double* ys, const double* zs,
                   std::size_t nv, const double* ux, const double* uy,
                   const double* uz, std::size_t nd, double* out) {
  for (std::size_t j = 0; j < nd; ++j) {
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

void abs_det2_scalar(const double* ax, const double* ay, const double* bx,
                     const double* by, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::fabs(ax[i] * by[i] - ay[i] * bx[i]);
  }
}

void abs_det3_scalar(const double* ax, const double* ay, const double* az,
                     const double* bx, const double* by, const double* bz,
                     const double* cx, const double* cy, const double* cz,
                     std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mx = by[i] * cz[i] - bz[i] * cy[i];
    const double my = bz[i] * cx[i] - bx[i] * cz[i];
    const double mz = bx[i] * cy[i] - by[i] * cx[i];
    out[i] = std::fabs((ax[i] * mx + ay[i] * my) + az[i] * mz);
  }
}

void cross_norm3_scalar(const double* ax, const double* ay, const double* az,
                        const double* bx, const double* by, const double* bz,
                        std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mx = ay[i] * bz[i] - az[i] * by[i];
    const double my = az[i] * bx[i] - ax[i] * bz[i];
    const double mz = ax[i] * by[i] - ay[i] * bx[i];
    out[i] = std::sqrt((mx * mx + my * my) + mz * mz);
  }
}

}  // namespace

const BatchKernels scalar_kernels = {
    signed_distance2_scalar, signed_distance3_scalar, width2_scalar,
    width3_scalar,           abs_det2_scalar,         abs_det3_scalar,
    cross_norm3_scalar,
};

}  // namespace tessellate::simd
