#include "tessellate/shrink/shrink.hpp"

#include <algorithm>
#include <cmath>

#include "tessellate/errors.hpp"
#include "tessellate/geom/constants.hpp"

namespace tessellate::shrink {

ShrinkState shrink_step(const ShrinkState& state, const SplitKernelSpec& K,
                        const DrivingMeasure& L, Rng& rng) {
  const geom::Hyperplane h = kernel_sample(K, L, state.body, rng);
  const geom::SplitResult sr = geom::split_polytope(state.body, h);
  const bool keep_plus = rng.uniform() < 0.5;
  ConvexPolytope kept = keep_plus ? sr.plus : sr.minus;

  ShrinkState out;
  out.norm = state.norm;
  switch (state.norm) {
    case Normalization::Raw:
      out.body = std::move(kept);
      break;
    case Normalization::Centered:
      out.body = geom::recenter(kept).body;
      break;
    case Normalization::CenteredUnit: {
      ConvexPolytope centered = geom::recenter(kept).body;
      const double mass = measure::lambda_hit_mass(L, centered);
      out.body = centered.scaled(1.0 / mass);
      break;
    }
  }
  return out;
}

double csd_waiting_time(double a, Rng& rng) {
  const double e = rng.exponential(1.0);
  return std::log(1.0 + e / a);
}

CsdResult csd_run(const SplitKernelSpec& K, const DrivingMeasure& L,
                  const ConvexPolytope& K0, const CsdOptions& opts,
                  std::uint64_t seed) {
  CsdResult res;
  res.ensemble.provenance = TypicalCellEnsemble::Provenance::Csd;
  res.ensemble.horizon = 1.0;

  Rng rng(seed);
  const int d = K0.ambient_dim();
  ShrinkState state{geom::recenter(K0).body, Normalization::Centered};
  double mass = measure::lambda_hit_mass(L, state.body);

  std::vector<double> trace;
  trace.reserve(opts.burn_in + opts.n_samples * opts.thin + 1);
  std::size_t jumps = 0;
  const std::size_t jump_budget = opts.burn_in + opts.n_samples * opts.thin;

  while (res.ensemble.samples.size() < opts.n_samples &&
         jumps < 4 * jump_budget + 1000) {
    const double delta = csd_waiting_time(mass, rng);
    state.body = state.body.scaled(std::exp(delta));
    try {
      state = shrink_step(state, K, L, rng);
    } catch (const TessError&) {
      state = {geom::recenter(K0).body, Normalization::Centered};
      mass = measure::lambda_hit_mass(L, state.body);
      ++res.restarts;
      continue;
    }
    mass = measure::lambda_hit_mass(L, state.body);
    if (!(mass > 1e-12) || mass > 1e12) {
      state = {geom::recenter(K0).body, Normalization::Centered};
      mass = measure::lambda_hit_mass(L, state.body);
      ++res.restarts;
      continue;
    }
    ++jumps;
    trace.push_back(mass);
    if (jumps > opts.burn_in && (jumps - opts.burn_in) % opts.thin == 0) {
      res.ensemble.samples.push_back({state.body, 1.0, mass});
    }
  }

  // Drift of the post-burn-in mass trace relative to the target d.
  if (trace.size() > opts.burn_in) {
    double acc = 0.0;
    for (std::size_t i = opts.burn_in; i < trace.size(); ++i) acc += trace[i];
    res.drift_factor = acc / (trace.size() - opts.burn_in) / d;
  }

  // Stationarity split test on the recorded masses.
  if (res.ensemble.samples.size() >= 20) {
    std::vector<double> first, second;
    const std::size_t half = res.ensemble.samples.size() / 2;
    for (std::size_t i = 0; i < res.ensemble.samples.size(); ++i) {
      (i < half ? first : second).push_back(res.ensemble.samples[i].lambda_mass);
    }
    res.stationarity_p = stats::ks_test_2s(first, second).p_value;
    res.non_ergodicity_suspected = res.stationarity_p < 1e-4;
  }

  // Select the scale representative with mean hit mass d (the first-order
  // normalization at t = 1).
  double mean_mass = 0.0;
  for (const auto& s : res.ensemble.samples) mean_mass += s.lambda_mass;
  mean_mass /= std::max<std::size_t>(res.ensemble.samples.size(), 1);
  res.rescale = d / mean_mass;
  for (auto& s : res.ensemble.samples) {
    s.body = s.body.scaled(res.rescale);
    s.lambda_mass *= res.rescale;
  }
  return res;
}

SpinalChain extract_spinal_chain(const NestedTessellation& Y, const Vec& probe,
                                 const DrivingMeasure& L) {
  // Root-to-leaf path, then reversed so index 0 is the leaf.
  std::vector<const dynamics::CellNode*> path;
  const dynamics::CellNode* node = &Y.nodes[0];
  const double tol =
      1e-12 * (1.0 + Y.window.diameter());
  if (!Y.window.contains(probe, -tol)) {
    throw OriginOutsideWindow("probe point is not interior to the window");
  }
  path.push_back(node);
  while (!node->is_leaf()) {
    const double sd = node->split_plane->signed_distance(probe);
    node = &Y.nodes[node->children[sd > 0.0 ? 0 : 1]];
    path.push_back(node);
  }

  SpinalChain chain;
  chain.entries.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    SpinalChain::Entry e;
    e.cell = (*it)->poly;
    e.birth = (*it)->birth;
    e.death = (*it)->is_leaf() ? Y.horizon : (*it)->death;
    e.lambda_mass = measure::lambda_hit_mass(L, (*it)->poly);
    chain.entries.push_back(std::move(e));
  }
  return chain;
}

SpinalReport spinal_time_diagnostic(std::span<const SpinalChain> chains) {
  SpinalReport rep;
  std::vector<double> residuals;
  for (const auto& chain : chains) {
    for (std::size_t i = 1; i < chain.entries.size(); ++i) {
      const auto& e = chain.entries[i];
      residuals.push_back(e.lambda_mass * (e.death - e.birth));
    }
  }
  rep.n_entries = residuals.size();
  if (!residuals.empty()) {
    double acc = 0.0;
    for (double r : residuals) acc += r;
    rep.mean_residual = acc / residuals.size();
  }
  rep.ks = stats::ks_test(std::move(residuals),
                          [](double x) { return 1.0 - std::exp(-x); });
  return rep;
}

double isoperimetric_ratio(const ConvexPolytope& c) {
  const int d = c.ambient_dim();
  const double vol = c.measure();
  return c.surface_measure() /
         std::pow(vol, static_cast<double>(d - 1) / d);
}

double width_anisotropy(const ConvexPolytope& c) {
  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0;
  if (c.ambient_dim() == 2) {
    for (int k = 0; k < 720; ++k) {
      const double a = geom::kPi * k / 720.0;
      const double w = geom::width(c, {std::cos(a), std::sin(a), 0.0});
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
  } else {
    // Fibonacci sphere grid.
    const double golden = 0.6180339887498948482;
    for (int k = 0; k < 1024; ++k) {
      const double z = -1.0 + 2.0 * (k + 0.5) / 1024.0;
      double t = k * golden;
      t -= std::floor(t);
      const double phi = 2.0 * geom::kPi * t;
      const double s = std::sqrt(1.0 - z * z);
      const double w =
          geom::width(c, {s * std::cos(phi), s * std::sin(phi), z});
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
  }
  return wmax / wmin;
}

CompareReport compare_typical_cell(const TypicalCellEnsemble& a,
                                   const TypicalCellEnsemble& b) {
  auto functionals = [](const TypicalCellEnsemble& e, int which) {
    std::vector<double> out;
    out.reserve(e.samples.size());
    for (const auto& s : e.samples) {
      // Renormalize to centered unit mass; the stored body is centered, so
      // only the scale changes (and the two scale-free functionals ignore
      // even that).
      const ConvexPolytope body = s.body.scaled(1.0 / s.lambda_mass);
      switch (which) {
        case 0:
          out.push_back(static_cast<double>(body.vertices().size()));
          break;
        case 1:
          out.push_back(isoperimetric_ratio(body));
          break;
        default:
          out.push_back(width_anisotropy(body));
          break;
      }
    }
    return out;
  };

  CompareReport rep;
  const char* names[3] = {"vertex_count", "isoperimetric_ratio",
                          "width_anisotropy"};
  for (int which = 0; which < 3; ++which) {
    CompareReport::Functional f;
    f.name = names[which];
    f.ks = stats::ks_test_2s(functionals(a, which), functionals(b, which));
    rep.min_p = std::min(rep.min_p, f.ks.p_value);
    rep.functionals.push_back(std::move(f));
  }
  return rep;
}

TypicalCellEnsemble window_census(std::span<const NestedTessellation> runs,
                                  const ConvexPolytope& inner,
                                  const DrivingMeasure& L) {
  TypicalCellEnsemble e;
  e.provenance = TypicalCellEnsemble::Provenance::WindowCensus;
  if (!runs.empty()) e.horizon = runs.front().horizon;
  const double tol = 0.0;
  for (const auto& Y : runs) {
    for (const auto* leaf : dynamics::leaf_cells(Y)) {
      const Vec b = leaf->poly.barycenter();
      if (!inner.contains(b, tol)) continue;
      e.samples.push_back({leaf->poly.translated(-b), 1.0,
                           measure::lambda_hit_mass(L, leaf->poly)});
    }
  }
  return e;
}

}  // namespace tessellate::shrink
