#pragma once

#include <json.hpp>

#include "tessellate/geom/polytope.hpp"
#include "tessellate/kernels/split_kernel.hpp"
#include "tessellate/measure/driving.hpp"

namespace tessellate::io {

using nlohmann::json;

/// Polytope schema: {"dim": 2|3, "vertices": [[x,y(,z)],...],
///                   "faces": [[i,...],...] (3D cells only)}.
json polytope_to_json(const geom::ConvexPolytope& c);
geom::ConvexPolytope polytope_from_json(const json& j);

/// Kernel schema: {"kernel":"stit"|"scaled"|"erosion"|"apportionment", ...,
///                 "rate_mode":"canonical"|"raw"}.
json kernel_to_json(const kernels::SplitKernelSpec& k);
kernels::SplitKernelSpec kernel_from_json(const json& j);

/// Directional schema: {"type":"isotropic"} |
///   {"type":"atoms","atoms":[[ux,uy(,uz),w],...]} |
///   {"type":"density","grid":[...]}.
json direction_to_json(const measure::DirectionalDistribution& R);
measure::DirectionalDistribution direction_from_json(const json& j, int dim);

json measure_to_json(const measure::DrivingMeasure& L);
measure::DrivingMeasure measure_from_json(const json& j, int dim);

}  // namespace tessellate::io
