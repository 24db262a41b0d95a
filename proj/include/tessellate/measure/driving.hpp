#pragma once

#include "tessellate/geom/hyperplane.hpp"
#include "tessellate/geom/polytope.hpp"
#include "tessellate/measure/direction.hpp"

namespace tessellate::measure {

using geom::ConvexPolytope;
using geom::Hyperplane;

/// Translation-invariant hyperplane measure Lambda = rho * R (x) leb_+,
/// normalized so that Lambda([c]) = rho * E_R[width of c]. Under this
/// convention the isotropic mass equals gamma_1(d) V_1(c) (the mean width).
struct DrivingMeasure {
  double rho = 1.0;
  DirectionalDistribution R;

  static DrivingMeasure iso(double rho = 1.0) {
    return {rho, DirectionalDistribution::isotropic()};
  }
};

/// Draw a direction from R.
Vec sample_direction(const DrivingMeasure& L, int dim, Rng& rng);

/// Total mass of hyperplanes hitting c. Closed form for the isotropic case,
/// exact sums for atoms, grid quadrature for tabulated densities.
double lambda_hit_mass(const DrivingMeasure& L, const ConvexPolytope& c);

/// Monte Carlo route for the same quantity: average the width over n
/// directions sampled from R. Kept as the independent cross-check of
/// lambda_hit_mass and as the generic fallback.
double lambda_hit_mass_mc(const DrivingMeasure& L, const ConvexPolytope& c,
                          std::size_t n, Rng& rng);

/// Sample from Lambda restricted to [c], normalized: draw u ~ R, accept with
/// probability width(c,u)/diam(c), then take the offset uniform on the hit
/// interval. Throws RejectionOverflow after 10^6 rejections. When `tries`
/// is given it receives the number of proposals used.
Hyperplane sample_hitting_hyperplane(const DrivingMeasure& L,
                                     const ConvexPolytope& c, Rng& rng,
                                     int* tries = nullptr);

/// Direction marginal of the hitting law (width-weighted); used by the
/// apportionment kernels.
Vec sample_hitting_direction(const DrivingMeasure& L, const ConvexPolytope& c,
                             Rng& rng);

/// Lambda([c_inner]) / Lambda([c_outer]) for c_inner inside c_outer.
double hit_fraction(const DrivingMeasure& L, const ConvexPolytope& c_inner,
                    const ConvexPolytope& c_outer);

}  // namespace tessellate::measure
