#pragma once

#include <cstdint>

#include "tessellate/measure/direction.hpp"

namespace tessellate::stats {

struct ZetaResult {
  int dim = 2;
  std::size_t n = 0;
  double zeta = 0.0, zeta_se = 0.0;    // 2D
  double zeta2 = 0.0, zeta2_se = 0.0;  // 3D pair constant
  double zeta3 = 0.0, zeta3_se = 0.0;  // 3D triple constant
};

/// Monte Carlo estimate of the parallelogram/parallelepiped constants of a
/// directional distribution: zeta = E|det(u1,u2)| in 2D; zeta_2 and zeta_3
/// in 3D (isotropic values 2/pi, pi/4 and pi/8).
ZetaResult zeta_constants(const measure::DirectionalDistribution& R, int dim,
                          std::size_t n, std::uint64_t seed);

}  // namespace tessellate::stats
