#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tessellate/dynamics/tessellation.hpp"
#include "tessellate/measure/driving.hpp"
#include "tessellate/stats/vertex_complex.hpp"

namespace tessellate::stats {

using dynamics::NestedTessellation;
using measure::DrivingMeasure;

/// One reported quantity. Targets and tolerances are attached by the
/// validation suites; plain estimation leaves them empty.
struct StatRow {
  std::string name;
  double estimate = 0.0;
  double ci_halfwidth = 0.0;
  std::optional<double> target;
  std::optional<double> rel_tol;
  std::optional<bool> pass;
};

struct TessellationStats {
  int dim = 2;
  double t = 0.0;
  std::size_t replications = 0;
  double inner_measure = 0.0;
  bool clearance_warning = false;
  std::map<std::string, double> values;       // name -> estimate
  std::map<std::string, double> half_widths;  // jackknife over replications

  double value(const std::string& name) const { return values.at(name); }
  std::vector<StatRow> rows() const;
};

/// Per-replication raw sums for the planar estimators; summable so the
/// reduction can jackknife over replications.
struct PlanarAccum {
  double area = 0.0;  // inner window area
  double n_vertices = 0.0, sum_degree = 0.0;
  double n_t = 0.0, n_x = 0.0, n_other = 0.0;
  double skel_len = 0.0;  // maximal segment length inside the inner window
  double n_edges = 0.0, n_sides = 0.0, n_iseg = 0.0;
  double n_cells = 0.0, sum_cell_area = 0.0, sum_cell_perim = 0.0;
  double sum_cell_corners = 0.0, sum_cell_bvertices = 0.0;
  double sum_cell_lambda = 0.0;
  double boundary_touch = 0.0;  // census cells touching the window boundary

  PlanarAccum& operator+=(const PlanarAccum& o);
  PlanarAccum operator-(const PlanarAccum& o) const;
};

PlanarAccum planar_accumulate(const NestedTessellation& Y,
                              const geom::ConvexPolytope& inner,
                              const DrivingMeasure& L);

TessellationStats planar_reduce(const std::vector<PlanarAccum>& reps,
                                double t);

/// Spatial (3D) counterpart.
struct SpatialAccum {
  double volume = 0.0;
  double n_vertices = 0.0, sum_degree = 0.0;
  double n_t = 0.0, n_x = 0.0, n_other = 0.0;
  double skel_len = 0.0;    // I-segment (polygon side) length in inner
  double facet_area = 0.0;  // maximal polygon area in inner
  double n_edges = 0.0, n_iseg = 0.0;
  double n_cells = 0.0, sum_cell_vol = 0.0, sum_cell_lambda = 0.0;
  double boundary_touch = 0.0;

  SpatialAccum& operator+=(const SpatialAccum& o);
  SpatialAccum operator-(const SpatialAccum& o) const;
};

SpatialAccum spatial_accumulate(const NestedTessellation& Y,
                                const geom::ConvexPolytope& inner,
                                const DrivingMeasure& L);

TessellationStats spatial_reduce(const std::vector<SpatialAccum>& reps,
                                 double t);

/// Unweighted mean hit mass over leaves with barycenter in the inner
/// window: (sum, count).
std::pair<double, std::size_t> tcell_lambda_sum(
    const NestedTessellation& Y, const geom::ConvexPolytope& inner,
    const DrivingMeasure& L);

/// Total maximal-segment length inside the inner window (2D); divide by the
/// inner area for the edge length density L_A.
double skeleton_length_inside(const NestedTessellation& Y,
                              const geom::ConvexPolytope& inner);

/// Planar mean-value targets of the isotropic table at time t.
std::map<std::string, double> planar_table_targets(double t);

/// Spatial targets for the isotropic iteration-stable case at time t.
std::map<std::string, double> spatial_stit_targets(double t);

}  // namespace tessellate::stats
