#pragma once

#include "tessellate/geom/ops.hpp"
#include "tessellate/measure/driving.hpp"
#include "tessellate/rng.hpp"

namespace tessellate::kernels {

using geom::ConvexPolytope;
using geom::Hyperplane;
using geom::Vec;

/// Law of the volume proportion taken by one side of an apportionment
/// split. Uniform is Beta(1,1); Beta(a) is the symmetric Beta(a,a).
struct ApportionmentLaw {
  enum class Type { Uniform, Beta };
  Type type = Type::Uniform;
  double a = 1.0;

  double sample(Rng& rng) const;
  /// CDF, used by goodness-of-fit tests.
  double cdf(double u) const;
};

/// Pluggable split kernel: the rate of a cell and the law of its splitting
/// hyperplane. Four families:
///   Stit            hyperplane from Lambda restricted to [c],
///   ScaledConstant  same law, raw rate alpha * Lambda([c]),
///   Erosion         hyperplane restricted to hits of ero(c, r) (hard-core);
///                   ramp mode smooths the indicator with a linear clamp
///                   between clearance r - eps and r,
///   Apportionment   width-weighted direction, offset solved so the volume
///                   proportion follows the apportionment law.
struct SplitKernelSpec {
  enum class Variant { Stit, ScaledConstant, Erosion, Apportionment };
  enum class ErosionMode { Hard, Ramp };
  enum class RateMode { Canonical, Raw };

  Variant variant = Variant::Stit;
  RateMode rate_mode = RateMode::Canonical;
  double alpha = 1.0;                        // ScaledConstant
  double r_hc = 0.0;                         // Erosion radius
  ErosionMode mode = ErosionMode::Hard;      // Erosion smoothing
  double ramp_eps = 0.0;                     // Erosion ramp width
  ApportionmentLaw law;                      // Apportionment

  static SplitKernelSpec stit() { return {}; }
  static SplitKernelSpec scaled_constant(double alpha) {
    SplitKernelSpec k;
    k.variant = Variant::ScaledConstant;
    k.alpha = alpha;
    return k;
  }
  static SplitKernelSpec erosion_hard(double r) {
    SplitKernelSpec k;
    k.variant = Variant::Erosion;
    k.r_hc = r;
    return k;
  }
  static SplitKernelSpec erosion_ramp(double r, double eps) {
    SplitKernelSpec k;
    k.variant = Variant::Erosion;
    k.r_hc = r;
    k.mode = ErosionMode::Ramp;
    k.ramp_eps = eps;
    return k;
  }
  static SplitKernelSpec apportionment_uniform() {
    SplitKernelSpec k;
    k.variant = Variant::Apportionment;
    return k;
  }
  static SplitKernelSpec apportionment_beta(double a) {
    SplitKernelSpec k;
    k.variant = Variant::Apportionment;
    k.law = {ApportionmentLaw::Type::Beta, a};
    return k;
  }
  SplitKernelSpec with_rate_mode(RateMode m) const {
    SplitKernelSpec k = *this;
    k.rate_mode = m;
    return k;
  }
};

/// Split rate of the cell. Canonical mode returns Lambda([c]) for every
/// variant; raw mode returns the kernel's literal total mass.
double kernel_rate(const SplitKernelSpec& k, const measure::DrivingMeasure& L,
                   const ConvexPolytope& c);

/// Sample the splitting hyperplane from the kernel's normalized law.
/// Throws UnsplittableCell when an erosion kernel meets an empty eroded
/// body, RejectionOverflow or BisectionFailure on sampler pathologies.
Hyperplane kernel_sample(const SplitKernelSpec& k,
                         const measure::DrivingMeasure& L,
                         const ConvexPolytope& c, Rng& rng);

/// Offset r such that the piece of c on the <x,u> <= r side holds the
/// volume fraction U, solved by monotone bisection to 1e-10.
double volume_fraction_offset(const ConvexPolytope& c, const Vec& u, double U);

}  // namespace tessellate::kernels
