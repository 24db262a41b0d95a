#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tessellate/dynamics/tessellation.hpp"
#include "tessellate/kernels/split_kernel.hpp"
#include "tessellate/measure/driving.hpp"
#include "tessellate/stats/special.hpp"

namespace tessellate::shrink {

using dynamics::NestedTessellation;
using geom::ConvexPolytope;
using geom::Vec;
using kernels::SplitKernelSpec;
using measure::DrivingMeasure;

/// State space tag of a shrink chain: plain bodies, bodies centered at the
/// origin, or centered bodies rescaled to unit hit mass.
enum class Normalization { Raw, Centered, CenteredUnit };

struct ShrinkState {
  ConvexPolytope body;
  Normalization norm = Normalization::Raw;
};

/// One shrink move: split by the kernel, keep one side with probability 1/2
/// each, then apply the state's normalization. Throws UnsplittableCell when
/// the kernel cannot split the body.
ShrinkState shrink_step(const ShrinkState& state, const SplitKernelSpec& K,
                        const DrivingMeasure& L, Rng& rng);

/// Weighted sample of centered cells approximating the typical cell law.
struct TypicalCellEnsemble {
  enum class Provenance { Csd, WindowCensus };
  struct Sample {
    ConvexPolytope body;  // centered at the origin
    double weight = 1.0;
    double lambda_mass = 0.0;
  };
  std::vector<Sample> samples;
  Provenance provenance = Provenance::Csd;
  double horizon = 1.0;
};

struct CsdOptions {
  std::size_t n_samples = 2000;
  std::size_t burn_in = 10000;  // jumps
  std::size_t thin = 50;        // jumps between records
};

struct CsdResult {
  TypicalCellEnsemble ensemble;
  double drift_factor = 1.0;   // pre-rescale mean mass over d
  double rescale = 1.0;        // spatial factor applied to the output
  double stationarity_p = 1.0; // first vs second half of the mass trace
  bool non_ergodicity_suspected = false;
  std::size_t restarts = 0;
};

/// Continuous shrink dynamics: exponential growth between jumps (waiting
/// time solved exactly from the cumulative rate Lambda([K])(e^D - 1)) and a
/// centered shrink step at each jump. Records every thin-th post-jump state
/// after burn_in, then rescales the ensemble so its mean hit mass equals
/// the ambient dimension.
CsdResult csd_run(const SplitKernelSpec& K, const DrivingMeasure& L,
                  const ConvexPolytope& K0, const CsdOptions& opts,
                  std::uint64_t seed);

/// Exact inversion sampler for the CSD waiting time at mass `a`.
double csd_waiting_time(double a, Rng& rng);

/// Nested ancestry of a probe point. Entry 0 is the leaf containing the
/// probe at the horizon (its death is the censoring time t); increasing
/// index walks toward the root. Birth/death are the cell's own lifetime
/// bounds; death(i) equals birth(i-1).
struct SpinalChain {
  struct Entry {
    ConvexPolytope cell;
    double birth = 0.0;
    double death = 0.0;
    double lambda_mass = 0.0;
  };
  std::vector<Entry> entries;
};

SpinalChain extract_spinal_chain(const NestedTessellation& Y, const Vec& probe,
                                 const DrivingMeasure& L);

struct SpinalReport {
  stats::KsResult ks;         // pooled rescaled holding times vs Exp(1)
  std::size_t n_entries = 0;  // pooled non-censored entries
  double mean_residual = 0.0;
};

/// Tests the time-mark law: holding times of non-leaf spine cells, rescaled
/// by their own hit mass, pooled against Exp(1). The leaf entry of each
/// chain is censored at the horizon and excluded.
SpinalReport spinal_time_diagnostic(std::span<const SpinalChain> chains);

/// Scalar shape functionals used by ensemble comparisons.
double isoperimetric_ratio(const ConvexPolytope& c);
double width_anisotropy(const ConvexPolytope& c);

struct CompareReport {
  struct Functional {
    std::string name;
    stats::KsResult ks;
  };
  std::vector<Functional> functionals;
  double min_p = 1.0;
};

/// Renormalizes both ensembles to centered unit mass and compares the shape
/// functionals (vertex count, isoperimetric ratio, width anisotropy) by
/// two-sample KS.
CompareReport compare_typical_cell(const TypicalCellEnsemble& a,
                                   const TypicalCellEnsemble& b);

/// Minus-sampled leaf census: leaves with barycenter in the inner window,
/// recentered, with their hit masses.
TypicalCellEnsemble window_census(std::span<const NestedTessellation> runs,
                                  const ConvexPolytope& inner,
                                  const DrivingMeasure& L);

}  // namespace tessellate::shrink
