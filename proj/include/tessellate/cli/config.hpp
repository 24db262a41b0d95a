#pragma once

#include <cstdint>
#include <string>

#include "tessellate/io/json_io.hpp"

namespace tessellate::cli {

/// Validated run configuration. Identical config + seed gives bit-identical
/// outputs regardless of thread count.
struct RunConfig {
  int schema = 1;
  int dim = 2;
  geom::ConvexPolytope window;  // default [0,10]^dim
  double t = 1.0;
  kernels::SplitKernelSpec kernel;
  measure::DrivingMeasure measure;
  int replications = 1;
  std::uint64_t seed = 1;
  double clearance = -1.0;  // < 0: pilot-estimated 3x mean cell diameter
  int threads = 0;          // 0: hardware concurrency
  std::string out;
  std::string svg;

  static RunConfig defaults(int dim);
};

RunConfig config_from_json(const io::json& j);
io::json config_to_json(const RunConfig& cfg);
RunConfig load_config_file(const std::string& path);

/// Inner window after minus-sampling: the configured clearance, or the
/// pilot rule (3x mean cell diameter estimated from a pilot run).
geom::ConvexPolytope inner_window(const RunConfig& cfg);

}  // namespace tessellate::cli
