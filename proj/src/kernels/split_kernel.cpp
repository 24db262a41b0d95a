#include "tessellate/kernels/split_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tessellate/errors.hpp"
#include "tessellate/stats/special.hpp"

namespace tessellate::kernels {

double ApportionmentLaw::sample(Rng& rng) const {
  for (int it = 0; it < 64; ++it) {
    const double u =
        type == Type::Uniform ? rng.uniform() : rng.beta(a, a);
    if (u > 0.0 && u < 1.0) return u;
  }
  return 0.5;
}

double ApportionmentLaw::cdf(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  if (type == Type::Uniform) return u;
  return stats::beta_cdf(a, a, u);
}

double kernel_rate(const SplitKernelSpec& k, const measure::DrivingMeasure& L,
                   const ConvexPolytope& c) {
  if (k.rate_mode == SplitKernelSpec::RateMode::Canonical) {
    return measure::lambda_hit_mass(L, c);
  }
  switch (k.variant) {
    case SplitKernelSpec::Variant::Stit:
    case SplitKernelSpec::Variant::Apportionment:
      return measure::lambda_hit_mass(L, c);
    case SplitKernelSpec::Variant::ScaledConstant:
      return k.alpha * measure::lambda_hit_mass(L, c);
    case SplitKernelSpec::Variant::Erosion:
    default: {
      const ConvexPolytope ero = geom::erosion(c, k.r_hc);
      return ero.is_empty() ? 0.0 : measure::lambda_hit_mass(L, ero);
    }
  }
}

double volume_fraction_offset(const ConvexPolytope& c, const Vec& u,
                              double U) {
  const geom::SupportInterval s = geom::support_interval(c, normalized(u));
  const Vec un = normalized(u);
  double lo = s.lo, hi = s.hi;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = geom::clipped_fraction(c, un, mid);
    if (std::fabs(f - U) <= 1e-10) return mid;
    if (f < U) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-16 * (s.hi - s.lo)) break;
  }
  const double f = geom::clipped_fraction(c, un, mid);
  if (std::fabs(f - U) > 1e-8) {
    throw BisectionFailure("volume fraction bisection did not converge");
  }
  return mid;
}

Hyperplane kernel_sample(const SplitKernelSpec& k,
                         const measure::DrivingMeasure& L,
                         const ConvexPolytope& c, Rng& rng) {
  switch (k.variant) {
    case SplitKernelSpec::Variant::Stit:
    case SplitKernelSpec::Variant::ScaledConstant:
      return measure::sample_hitting_hyperplane(L, c, rng);
    case SplitKernelSpec::Variant::Erosion: {
      if (k.mode == SplitKernelSpec::ErosionMode::Hard) {
        const ConvexPolytope ero = geom::erosion(c, k.r_hc);
        if (ero.is_empty()) {
          throw UnsplittableCell("eroded body is empty");
        }
        return measure::sample_hitting_hyperplane(L, ero, rng);
      }
      const ConvexPolytope base = geom::erosion(c, k.r_hc - k.ramp_eps);
      if (base.is_empty()) {
        throw UnsplittableCell("eroded body is empty (ramp support)");
      }
      for (int it = 0; it < 1000000; ++it) {
        const Hyperplane h = measure::sample_hitting_hyperplane(L, base, rng);
        const double d = geom::boundary_clearance(c, h);
        const double accept =
            std::clamp((d - (k.r_hc - k.ramp_eps)) / k.ramp_eps, 0.0, 1.0);
        if (rng.uniform() < accept) return h;
      }
      throw RejectionOverflow("ramp erosion sampler exceeded its budget");
    }
    case SplitKernelSpec::Variant::Apportionment:
    default: {
      const Vec u = measure::sample_hitting_direction(L, c, rng);
      const double frac = k.law.sample(rng);
      return Hyperplane(u, volume_fraction_offset(c, u, frac));
    }
  }
}

}  // namespace tessellate::kernels
