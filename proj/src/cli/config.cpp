#include "tessellate/cli/config.hpp"

#include <cmath>
#include <fstream>

#include "tessellate/dynamics/tessellation.hpp"
#include "tessellate/errors.hpp"

namespace tessellate::cli {

using geom::ConvexPolytope;
using geom::Vec;
using io::json;

RunConfig RunConfig::defaults(int dim) {
  RunConfig cfg;
  cfg.dim = dim;
  cfg.window = ConvexPolytope::box({0, 0, 0}, {10, 10, 10}, dim);
  cfg.measure = measure::DrivingMeasure::iso();
  return cfg;
}

namespace {

ConvexPolytope window_from_json(const json& j, int dim) {
  if (j.contains("box")) {
    const auto& b = j.at("box");
    if (b.size() != 2) throw ConfigError("window.box: expected [lo, hi]");
    const auto& lo = b[0];
    const auto& hi = b[1];
    if (static_cast<int>(lo.size()) != dim ||
        static_cast<int>(hi.size()) != dim) {
      throw ConfigError("window.box: corner arity does not match dim");
    }
    Vec l{lo[0].get<double>(), lo[1].get<double>(),
          dim == 3 ? lo[2].get<double>() : 0.0};
    Vec h{hi[0].get<double>(), hi[1].get<double>(),
          dim == 3 ? hi[2].get<double>() : 0.0};
    return ConvexPolytope::box(l, h, dim);
  }
  return io::polytope_from_json(j);
}

}  // namespace

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.schema = j.value("schema", 1);
  if (cfg.schema != 1) throw ConfigError("config: unsupported schema version");
  cfg.dim = j.value("dim", 2);
  if (cfg.dim != 2 && cfg.dim != 3) {
    throw ConfigError("config.dim: must be 2 or 3");
  }
  cfg.window = j.contains("window")
                   ? window_from_json(j.at("window"), cfg.dim)
                   : ConvexPolytope::box({0, 0, 0}, {10, 10, 10}, cfg.dim);
  cfg.t = j.value("t", 1.0);
  if (cfg.t < 0.0) throw ConfigError("config.t: must be >= 0");
  cfg.kernel = j.contains("kernel") ? io::kernel_from_json(j.at("kernel"))
                                    : kernels::SplitKernelSpec::stit();
  cfg.measure = j.contains("measure")
                    ? io::measure_from_json(j.at("measure"), cfg.dim)
                    : measure::DrivingMeasure::iso();
  cfg.replications = j.value("replications", 1);
  if (cfg.replications < 1) {
    throw ConfigError("config.replications: must be >= 1");
  }
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.clearance = j.value("clearance", -1.0);
  cfg.threads = j.value("threads", 0);
  cfg.out = j.value("out", std::string{});
  cfg.svg = j.value("svg", std::string{});
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["schema"] = cfg.schema;
  j["dim"] = cfg.dim;
  j["window"] = io::polytope_to_json(cfg.window);
  j["t"] = cfg.t;
  j["kernel"] = io::kernel_to_json(cfg.kernel);
  j["measure"] = io::measure_to_json(cfg.measure);
  j["replications"] = cfg.replications;
  j["seed"] = cfg.seed;
  if (cfg.clearance >= 0.0) j["clearance"] = cfg.clearance;
  if (cfg.threads > 0) j["threads"] = cfg.threads;
  if (!cfg.out.empty()) j["out"] = cfg.out;
  if (!cfg.svg.empty()) j["svg"] = cfg.svg;
  return j;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

geom::ConvexPolytope inner_window(const RunConfig& cfg) {
  double clearance = cfg.clearance;
  if (clearance < 0.0) {
    // Pilot rule: a single replication estimates the mean cell diameter.
    const auto pilot = dynamics::simulate_window(
        cfg.window, cfg.kernel, cfg.measure, cfg.t, mix_seed(cfg.seed, 1u << 20));
    double acc = 0.0;
    std::size_t n = 0;
    for (const auto* leaf : dynamics::leaf_cells(pilot)) {
      acc += leaf->poly.diameter();
      ++n;
    }
    clearance = n > 0 ? 3.0 * acc / n : 0.0;
  }
  const ConvexPolytope inner = geom::erosion(cfg.window, clearance);
  if (inner.is_empty()) {
    throw ConfigError("clearance leaves an empty inner window");
  }
  return inner;
}

}  // namespace tessellate::cli
