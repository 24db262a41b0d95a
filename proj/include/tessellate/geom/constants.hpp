#pragma once

#include <cmath>

namespace tessellate::geom {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Volume of the j-dimensional unit ball, j in {0,1,2,3}.
inline double unit_ball_volume(int j) {
  switch (j) {
    case 0:
      return 1.0;
    case 1:
      return 2.0;
    case 2:
      return kPi;
    default:
      return 4.0 * kPi / 3.0;
  }
}

/// gamma_1(d) = 2 kappa_{d-1} / (d kappa_d); converts the first intrinsic
/// volume into the isotropic hit mass (equals 2/pi in 2D and 1/2 in 3D).
inline double gamma1(int d) {
  return 2.0 * unit_ball_volume(d - 1) / (d * unit_ball_volume(d));
}

/// Default tolerances. Coordinates are assumed to live at window scale, so
/// these are used relative to the local diameter where appropriate.
inline constexpr double kEpsGeom = 1e-9;
inline constexpr double kEpsVolRel = 1e-12;
inline constexpr double kUnitNormalTol = 1e-12;

}  // namespace tessellate::geom
