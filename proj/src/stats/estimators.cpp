#include "tessellate/stats/estimators.hpp"

#include <cmath>
#include <functional>

#include "tessellate/geom/constants.hpp"
#include "tessellate/geom/ops.hpp"

namespace tessellate::stats {

using geom::ConvexPolytope;
using geom::kPi;
using geom::Vec;

namespace {

// Length of the part of [a, b] inside a convex region.
double length_inside(const Vec& a, const Vec& b, const ConvexPolytope& inner) {
  ConvexPolytope seg = ConvexPolytope::segment(a, b);
  for (const auto& h : inner.facet_halfspaces()) {
    seg = geom::clip_facet(seg, h, geom::Side::Minus);
    if (seg.is_empty()) return 0.0;
  }
  return seg.measure();
}

double polygon_area_inside(const ConvexPolytope& facet,
                           const ConvexPolytope& inner) {
  ConvexPolytope g = facet;
  for (const auto& h : inner.facet_halfspaces()) {
    g = geom::clip_facet(g, h, geom::Side::Minus);
    if (g.is_empty()) return 0.0;
  }
  return g.measure();
}

bool on_cell_boundary(const Vec& p, const ConvexPolytope& cell, double tol) {
  const auto& v = cell.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec a = v[i];
    const Vec b = v[(i + 1) % n];
    const Vec d = b - a;
    const double len = norm(d);
    const double along = std::clamp(dot(p - a, d / len), 0.0, len);
    if (dist(a + (d / len) * along, p) <= tol) return true;
  }
  return false;
}

bool touches_window(const ConvexPolytope& cell, const ConvexPolytope& window,
                    double tol) {
  for (const auto& h : window.facet_halfspaces()) {
    for (const auto& v : cell.vertices()) {
      if (std::fabs(h.signed_distance(v)) <= tol) return true;
    }
  }
  return false;
}

// Jackknife over replications: estimate from summed accumulators and
// leave-one-out half-width.
template <class Acc>
void jackknife(const std::vector<Acc>& reps,
               const std::function<double(const Acc&)>& f,
               const std::string& name, TessellationStats& out) {
  Acc total{};
  for (const auto& a : reps) total += a;
  const double est = f(total);
  out.values[name] = est;
  const std::size_t n = reps.size();
  if (n < 2) {
    out.half_widths[name] = 0.0;
    return;
  }
  double mean_loo = 0.0;
  std::vector<double> loo(n);
  for (std::size_t i = 0; i < n; ++i) {
    loo[i] = f(total - reps[i]);
    mean_loo += loo[i];
  }
  mean_loo /= n;
  double ss = 0.0;
  for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
  out.half_widths[name] =
      1.96 * std::sqrt((static_cast<double>(n) - 1.0) / n * ss);
}

}  // namespace

PlanarAccum& PlanarAccum::operator+=(const PlanarAccum& o) {
  area += o.area;
  n_vertices += o.n_vertices;
  sum_degree += o.sum_degree;
  n_t += o.n_t;
  n_x += o.n_x;
  n_other += o.n_other;
  skel_len += o.skel_len;
  n_edges += o.n_edges;
  n_sides += o.n_sides;
  n_iseg += o.n_iseg;
  n_cells += o.n_cells;
  sum_cell_area += o.sum_cell_area;
  sum_cell_perim += o.sum_cell_perim;
  sum_cell_corners += o.sum_cell_corners;
  sum_cell_bvertices += o.sum_cell_bvertices;
  sum_cell_lambda += o.sum_cell_lambda;
  boundary_touch += o.boundary_touch;
  return *this;
}

PlanarAccum PlanarAccum::operator-(const PlanarAccum& o) const {
  PlanarAccum r = *this;
  r.area -= o.area;
  r.n_vertices -= o.n_vertices;
  r.sum_degree -= o.sum_degree;
  r.n_t -= o.n_t;
  r.n_x -= o.n_x;
  r.n_other -= o.n_other;
  r.skel_len -= o.skel_len;
  r.n_edges -= o.n_edges;
  r.n_sides -= o.n_sides;
  r.n_iseg -= o.n_iseg;
  r.n_cells -= o.n_cells;
  r.sum_cell_area -= o.sum_cell_area;
  r.sum_cell_perim -= o.sum_cell_perim;
  r.sum_cell_corners -= o.sum_cell_corners;
  r.sum_cell_bvertices -= o.sum_cell_bvertices;
  r.sum_cell_lambda -= o.sum_cell_lambda;
  r.boundary_touch -= o.boundary_touch;
  return r;
}

PlanarAccum planar_accumulate(const NestedTessellation& Y,
                              const ConvexPolytope& inner,
                              const DrivingMeasure& L) {
  PlanarAccum acc;
  acc.area = inner.measure();
  const VertexComplex vc = build_vertex_complex(Y);
  const double wtol = 1e-7 * Y.window.diameter();

  std::vector<const VertexRecord*> interior;
  for (const auto& v : vc.vertices) {
    if (v.vclass == VClass::WindowBoundary) continue;
    interior.push_back(&v);
    if (!inner.contains(v.location, 0.0)) continue;
    acc.n_vertices += 1.0;
    acc.sum_degree += v.degree();
    if (v.vclass == VClass::T) {
      acc.n_t += 1.0;
    } else if (v.vclass == VClass::X) {
      acc.n_x += 1.0;
    } else {
      acc.n_other += 1.0;
    }
  }

  // Skeleton length and reference-point counts of I-segments and edges.
  for (std::size_t si = 0; si < vc.segments.size(); ++si) {
    const auto& s = vc.segments[si];
    acc.skel_len += length_inside(s.a, s.b, inner);
    if (inner.contains((s.a + s.b) * 0.5, 0.0)) acc.n_iseg += 1.0;
    const Vec u = normalized(s.b - s.a);
    const auto& brk = vc.seg_breaks[si];
    for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
      if (brk[k + 1] - brk[k] <= vc.merge_tol) continue;
      const Vec mid = s.a + u * (0.5 * (brk[k] + brk[k + 1]));
      if (inner.contains(mid, 0.0)) acc.n_edges += 1.0;
    }
  }

  // Cell census and side counts.
  for (const auto* leaf : dynamics::leaf_cells(Y)) {
    const auto& poly = leaf->poly;
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec mid = (v[i] + v[(i + 1) % v.size()]) * 0.5;
      if (inner.contains(mid, 0.0)) acc.n_sides += 1.0;
    }
    const Vec b = poly.barycenter();
    if (!inner.contains(b, 0.0)) continue;
    acc.n_cells += 1.0;
    acc.sum_cell_area += poly.measure();
    acc.sum_cell_perim += poly.surface_measure();
    acc.sum_cell_corners += static_cast<double>(v.size());
    acc.sum_cell_lambda += measure::lambda_hit_mass(L, poly);
    if (touches_window(poly, Y.window, wtol)) acc.boundary_touch += 1.0;
    double bv = 0.0;
    for (const auto* rec : interior) {
      if (on_cell_boundary(rec->location, poly, vc.merge_tol)) bv += 1.0;
    }
    acc.sum_cell_bvertices += bv;
  }
  return acc;
}

TessellationStats planar_reduce(const std::vector<PlanarAccum>& reps,
                                double t) {
  TessellationStats out;
  out.dim = 2;
  out.t = t;
  out.replications = reps.size();
  using F = std::function<double(const PlanarAccum&)>;
  const auto add = [&](const std::string& name, F f) {
    jackknife<PlanarAccum>(reps, f, name, out);
  };
  add("lambda_V", [](const PlanarAccum& a) { return a.n_vertices / a.area; });
  add("lambda_E", [](const PlanarAccum& a) { return a.n_edges / a.area; });
  add("lambda_S", [](const PlanarAccum& a) { return a.n_sides / a.area; });
  add("lambda_I", [](const PlanarAccum& a) { return a.n_iseg / a.area; });
  add("lambda_C", [](const PlanarAccum& a) { return a.n_cells / a.area; });
  add("L_A", [](const PlanarAccum& a) { return a.skel_len / a.area; });
  add("L_E", [](const PlanarAccum& a) { return a.skel_len / a.n_edges; });
  add("L_S", [](const PlanarAccum& a) { return 2.0 * a.skel_len / a.n_sides; });
  add("L_I", [](const PlanarAccum& a) { return a.skel_len / a.n_iseg; });
  add("p", [](const PlanarAccum& a) { return a.sum_cell_perim / a.n_cells; });
  add("a", [](const PlanarAccum& a) { return a.sum_cell_area / a.n_cells; });
  add("nu0_C",
      [](const PlanarAccum& a) { return a.sum_cell_corners / a.n_cells; });
  add("mu_VE",
      [](const PlanarAccum& a) { return a.sum_degree / a.n_vertices; });
  add("mu_CV",
      [](const PlanarAccum& a) { return a.sum_cell_bvertices / a.n_cells; });
  add("kappa", [](const PlanarAccum& a) {
    return a.n_t / std::max(a.n_t + a.n_x, 1.0);
  });
  add("mean_tcell_lambda",
      [](const PlanarAccum& a) { return a.sum_cell_lambda / a.n_cells; });
  add("xi", [](const PlanarAccum&) { return 1.0; });

  PlanarAccum total{};
  for (const auto& a : reps) total += a;
  out.inner_measure = total.area;
  out.values["n_other_vertices"] = total.n_other;
  out.half_widths["n_other_vertices"] = 0.0;
  out.clearance_warning = total.boundary_touch > 0.0;
  return out;
}

SpatialAccum& SpatialAccum::operator+=(const SpatialAccum& o) {
  volume += o.volume;
  n_vertices += o.n_vertices;
  sum_degree += o.sum_degree;
  n_t += o.n_t;
  n_x += o.n_x;
  n_other += o.n_other;
  skel_len += o.skel_len;
  facet_area += o.facet_area;
  n_edges += o.n_edges;
  n_iseg += o.n_iseg;
  n_cells += o.n_cells;
  sum_cell_vol += o.sum_cell_vol;
  sum_cell_lambda += o.sum_cell_lambda;
  boundary_touch += o.boundary_touch;
  return *this;
}

SpatialAccum SpatialAccum::operator-(const SpatialAccum& o) const {
  SpatialAccum r = *this;
  r.volume -= o.volume;
  r.n_vertices -= o.n_vertices;
  r.sum_degree -= o.sum_degree;
  r.n_t -= o.n_t;
  r.n_x -= o.n_x;
  r.n_other -= o.n_other;
  r.skel_len -= o.skel_len;
  r.facet_area -= o.facet_area;
  r.n_edges -= o.n_edges;
  r.n_iseg -= o.n_iseg;
  r.n_cells -= o.n_cells;
  r.sum_cell_vol -= o.sum_cell_vol;
  r.sum_cell_lambda -= o.sum_cell_lambda;
  r.boundary_touch -= o.boundary_touch;
  return r;
}

SpatialAccum spatial_accumulate(const NestedTessellation& Y,
                                const ConvexPolytope& inner,
                                const DrivingMeasure& L) {
  SpatialAccum acc;
  acc.volume = inner.measure();
  const VertexComplex vc = build_vertex_complex(Y);
  const double wtol = 1e-7 * Y.window.diameter();

  for (const auto& v : vc.vertices) {
    if (v.vclass == VClass::WindowBoundary) continue;
    if (!inner.contains(v.location, 0.0)) continue;
    acc.n_vertices += 1.0;
    acc.sum_degree += v.degree();
    if (v.vclass == VClass::T) {
      acc.n_t += 1.0;
    } else if (v.vclass == VClass::X) {
      acc.n_x += 1.0;
    } else {
      acc.n_other += 1.0;
    }
  }

  for (std::size_t si = 0; si < vc.segments.size(); ++si) {
    const auto& s = vc.segments[si];
    acc.skel_len += length_inside(s.a, s.b, inner);
    if (inner.contains((s.a + s.b) * 0.5, 0.0)) acc.n_iseg += 1.0;
    const Vec u = normalized(s.b - s.a);
    const auto& brk = vc.seg_breaks[si];
    for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
      if (brk[k + 1] - brk[k] <= vc.merge_tol) continue;
      const Vec mid = s.a + u * (0.5 * (brk[k] + brk[k + 1]));
      if (inner.contains(mid, 0.0)) acc.n_edges += 1.0;
    }
  }

  for (const auto& mp : Y.maximal_polytopes) {
    acc.facet_area += polygon_area_inside(mp.geometry, inner);
  }

  for (const auto* leaf : dynamics::leaf_cells(Y)) {
    const Vec b = leaf->poly.barycenter();
    if (!inner.contains(b, 0.0)) continue;
    acc.n_cells += 1.0;
    acc.sum_cell_vol += leaf->poly.measure();
    acc.sum_cell_lambda += measure::lambda_hit_mass(L, leaf->poly);
    if (touches_window(leaf->poly, Y.window, wtol)) acc.boundary_touch += 1.0;
  }
  return acc;
}

TessellationStats spatial_reduce(const std::vector<SpatialAccum>& reps,
                                 double t) {
  TessellationStats out;
  out.dim = 3;
  out.t = t;
  out.replications = reps.size();
  using F = std::function<double(const SpatialAccum&)>;
  const auto add = [&](const std::string& name, F f) {
    jackknife<SpatialAccum>(reps, f, name, out);
  };
  const auto kappa_of = [](const SpatialAccum& a) {
    return a.n_t / std::max(a.n_t + a.n_x, 1.0);
  };
  const auto lam_v = [](const SpatialAccum& a) { return a.n_vertices / a.volume; };
  const auto lam_e = [](const SpatialAccum& a) { return a.n_edges / a.volume; };
  const auto lam_c = [](const SpatialAccum& a) { return a.n_cells / a.volume; };
  const auto lam_p = [=](const SpatialAccum& a) {
    // Euler-type relation: lambda_V - lambda_E + lambda_P - lambda_C = 0.
    return lam_e(a) - lam_v(a) + lam_c(a);
  };
  const auto chi_of = [=](const SpatialAccum& a) {
    return 6.0 * lam_v(a) / lam_p(a);
  };

  add("lambda_V", lam_v);
  add("lambda_E", lam_e);
  add("lambda_C", lam_c);
  add("lambda_P", lam_p);
  add("lambda_I", [](const SpatialAccum& a) { return a.n_iseg / a.volume; });
  add("L_V", [](const SpatialAccum& a) { return a.skel_len / a.volume; });
  add("S_V", [](const SpatialAccum& a) { return a.facet_area / a.volume; });
  add("L_I", [](const SpatialAccum& a) { return a.skel_len / a.n_iseg; });
  add("L_E", [](const SpatialAccum& a) { return a.skel_len / a.n_edges; });
  add("kappa", kappa_of);
  add("chi", chi_of);
  add("mu_VE", [](const SpatialAccum& a) { return a.sum_degree / a.n_vertices; });
  add("psi", [=](const SpatialAccum& a) { return 4.0 - 3.0 * kappa_of(a); });
  add("tau", [=](const SpatialAccum& a) { return 1.0 + kappa_of(a); });
  add("xi", [](const SpatialAccum&) { return 1.0; });
  add("lambda_S_C", [=](const SpatialAccum& a) {
    return (4.0 + kappa_of(a)) * lam_v(a);
  });
  add("lambda_S_P", [=](const SpatialAccum& a) {
    return 3.0 * kappa_of(a) * lam_v(a);
  });
  add("lambda_F", [=](const SpatialAccum& a) {
    return (12.0 / chi_of(a) + kappa_of(a) - 2.0) * lam_v(a);
  });
  add("mu_CV", [=](const SpatialAccum& a) {
    return 4.0 * chi_of(a) / (6.0 - chi_of(a));
  });
  add("mu_CE", [=](const SpatialAccum& a) {
    return 6.0 * chi_of(a) / (6.0 - chi_of(a));
  });
  add("mu_CP", [=](const SpatialAccum& a) {
    return 12.0 / (6.0 - chi_of(a));
  });
  add("nu0_P", [=](const SpatialAccum& a) {
    return chi_of(a) / 6.0 * (4.0 + kappa_of(a));
  });
  add("nu0_F", [=](const SpatialAccum& a) {
    const double chi = chi_of(a), kap = kappa_of(a);
    return 6.0 * kap * chi / (12.0 + chi * (kap - 2.0));
  });
  add("nu0_C", [=](const SpatialAccum& a) {
    return 2.0 * kappa_of(a) * chi_of(a) / (6.0 - chi_of(a));
  });
  add("nu1_C", [=](const SpatialAccum& a) {
    return 3.0 * kappa_of(a) * chi_of(a) / (6.0 - chi_of(a));
  });
  add("nu2_C", [=](const SpatialAccum& a) {
    const double chi = chi_of(a), kap = kappa_of(a);
    return (12.0 + (kap - 2.0) * chi) / (6.0 - chi);
  });
  add("A_P", [=](const SpatialAccum& a) {
    return (a.facet_area / a.volume) / lam_p(a);
  });
  add("A_F", [=](const SpatialAccum& a) {
    const double chi = chi_of(a), kap = kappa_of(a);
    return 12.0 / (12.0 + chi * (kap - 2.0)) * (a.facet_area / a.volume) /
           lam_p(a);
  });
  add("mean_cell_volume",
      [](const SpatialAccum& a) { return a.sum_cell_vol / a.n_cells; });
  add("mean_tcell_lambda",
      [](const SpatialAccum& a) { return a.sum_cell_lambda / a.n_cells; });

  SpatialAccum total{};
  for (const auto& a : reps) total += a;
  out.inner_measure = total.volume;
  out.values["n_other_vertices"] = total.n_other;
  out.half_widths["n_other_vertices"] = 0.0;
  out.clearance_warning = total.boundary_touch > 0.0;

  // Inequality panel.
  const double chi = out.values["chi"];
  const double kap = out.values["kappa"];
  out.values["ineq_chi_ge_4p5"] = chi >= 4.5 ? 1.0 : 0.0;
  out.values["ineq_chi_lt_6"] = chi < 6.0 ? 1.0 : 0.0;
  out.values["ineq_kappa"] = kap >= (12.0 - 2.0 * chi) / chi ? 1.0 : 0.0;
  out.half_widths["ineq_chi_ge_4p5"] = 0.0;
  out.half_widths["ineq_chi_lt_6"] = 0.0;
  out.half_widths["ineq_kappa"] = 0.0;
  return out;
}

double skeleton_length_inside(const NestedTessellation& Y,
                              const ConvexPolytope& inner) {
  double acc = 0.0;
  for (const auto& mp : Y.maximal_polytopes) {
    const auto& v = mp.geometry.vertices();
    if (mp.geometry.dim() == 1) {
      acc += length_inside(v[0], v[1], inner);
    } else {
      for (std::size_t k = 0; k < v.size(); ++k) {
        acc += length_inside(v[k], v[(k + 1) % v.size()], inner);
      }
    }
  }
  return acc;
}

std::pair<double, std::size_t> tcell_lambda_sum(const NestedTessellation& Y,
                                                const ConvexPolytope& inner,
                                                const DrivingMeasure& L) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto* leaf : dynamics::leaf_cells(Y)) {
    if (!inner.contains(leaf->poly.barycenter(), 0.0)) continue;
    sum += measure::lambda_hit_mass(L, leaf->poly);
    ++count;
  }
  return {sum, count};
}

std::vector<StatRow> TessellationStats::rows() const {
  std::vector<StatRow> out;
  out.reserve(values.size());
  for (const auto& [name, est] : values) {
    StatRow r;
    r.name = name;
    r.estimate = est;
    const auto it = half_widths.find(name);
    r.ci_halfwidth = it == half_widths.end() ? 0.0 : it->second;
    out.push_back(std::move(r));
  }
  return out;
}

std::map<std::string, double> planar_table_targets(double t) {
  return {
      {"L_A", t},
      {"lambda_V", 2.0 / kPi * t * t},
      {"lambda_E", 3.0 / kPi * t * t},
      {"lambda_S", 4.0 / kPi * t * t},
      {"lambda_I", t * t / kPi},
      {"lambda_C", t * t / kPi},
      {"L_E", kPi / (3.0 * t)},
      {"L_S", kPi / (2.0 * t)},
      {"L_I", kPi / t},
      {"p", 2.0 * kPi / t},
      // Identity value a = 1/lambda_C; the printed table's pi/(2 t^2)
      // conflicts with its own intensity column and is reported separately.
      {"a", kPi / (t * t)},
      {"mu_VE", 3.0},
      {"mu_CV", 6.0},
      {"nu0_C", 4.0},
      {"mean_tcell_lambda", 2.0 / t},
  };
}

std::map<std::string, double> spatial_stit_targets(double t) {
  return {
      {"S_V", t},
      {"L_V", kPi / 4.0 * t * t},
      {"lambda_V", kPi / 8.0 * t * t * t},
      {"kappa", 2.0 / 3.0},
      {"chi", 36.0 / 7.0},
      {"mu_VE", 4.0},
      {"mean_tcell_lambda", 3.0 / t},
  };
}

}  // namespace tessellate::stats
