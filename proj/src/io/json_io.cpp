#include "tessellate/io/json_io.hpp"

#include "tessellate/errors.hpp"

namespace tessellate::io {

using geom::ConvexPolytope;
using geom::Vec;
using kernels::SplitKernelSpec;
using measure::DirectionalDistribution;
using measure::DrivingMeasure;

json polytope_to_json(const ConvexPolytope& c) {
  json j;
  j["dim"] = c.ambient_dim();
  json verts = json::array();
  for (const auto& v : c.vertices()) {
    if (c.ambient_dim() == 2) {
      verts.push_back({v.x, v.y});
    } else {
      verts.push_back({v.x, v.y, v.z});
    }
  }
  j["vertices"] = verts;
  if (c.ambient_dim() == 3 && !c.faces().empty()) {
    j["faces"] = c.faces();
  }
  return j;
}

ConvexPolytope polytope_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices")) {
    throw ConfigError("polytope: missing 'dim' or 'vertices'");
  }
  const int dim = j.at("dim").get<int>();
  if (dim != 2 && dim != 3) throw ConfigError("polytope: dim must be 2 or 3");
  std::vector<Vec> verts;
  for (const auto& vj : j.at("vertices")) {
    if (static_cast<int>(vj.size()) != dim) {
      throw ConfigError("polytope: vertex arity does not match dim");
    }
    verts.push_back({vj[0].get<double>(), vj[1].get<double>(),
                     dim == 3 ? vj[2].get<double>() : 0.0});
  }
  if (dim == 2) {
    if (j.contains("faces")) throw ConfigError("polytope: 2D has no faces");
    return ConvexPolytope::polygon(std::move(verts));
  }
  if (!j.contains("faces")) {
    throw ConfigError("polytope: 3D cell requires 'faces'");
  }
  std::vector<std::vector<int>> faces =
      j.at("faces").get<std::vector<std::vector<int>>>();
  return ConvexPolytope::polyhedron(std::move(verts), std::move(faces));
}

json kernel_to_json(const SplitKernelSpec& k) {
  json j;
  switch (k.variant) {
    case SplitKernelSpec::Variant::Stit:
      j["kernel"] = "stit";
      break;
    case SplitKernelSpec::Variant::ScaledConstant:
      j["kernel"] = "scaled";
      j["alpha"] = k.alpha;
      break;
    case SplitKernelSpec::Variant::Erosion:
      j["kernel"] = "erosion";
      j["r"] = k.r_hc;
      j["mode"] =
          k.mode == SplitKernelSpec::ErosionMode::Hard ? "hard" : "ramp";
      if (k.mode == SplitKernelSpec::ErosionMode::Ramp) j["eps"] = k.ramp_eps;
      break;
    case SplitKernelSpec::Variant::Apportionment:
      j["kernel"] = "apportionment";
      j["law"] = k.law.type == kernels::ApportionmentLaw::Type::Uniform
                     ? "uniform"
                     : "beta";
      if (k.law.type == kernels::ApportionmentLaw::Type::Beta) {
        j["a"] = k.law.a;
      }
      break;
  }
  j["rate_mode"] =
      k.rate_mode == SplitKernelSpec::RateMode::Canonical ? "canonical" : "raw";
  return j;
}

SplitKernelSpec kernel_from_json(const json& j) {
  if (!j.contains("kernel")) throw ConfigError("kernel: missing 'kernel'");
  const std::string name = j.at("kernel").get<std::string>();
  SplitKernelSpec k;
  if (name == "stit") {
    k = SplitKernelSpec::stit();
  } else if (name == "scaled") {
    if (!j.contains("alpha")) throw ConfigError("kernel scaled: missing alpha");
    const double alpha = j.at("alpha").get<double>();
    if (alpha <= 0.0) throw ConfigError("kernel scaled: alpha must be > 0");
    k = SplitKernelSpec::scaled_constant(alpha);
  } else if (name == "erosion") {
    if (!j.contains("r")) throw ConfigError("kernel erosion: missing r");
    const double r = j.at("r").get<double>();
    if (r <= 0.0) throw ConfigError("kernel erosion: r must be > 0");
    const std::string mode = j.value("mode", "hard");
    if (mode == "hard") {
      k = SplitKernelSpec::erosion_hard(r);
    } else if (mode == "ramp") {
      const double eps = j.value("eps", 0.0);
      if (eps <= 0.0 || eps >= r) {
        throw ConfigError("kernel erosion ramp: need 0 < eps < r");
      }
      k = SplitKernelSpec::erosion_ramp(r, eps);
    } else {
      throw ConfigError("kernel erosion: mode must be 'hard' or 'ramp'");
    }
  } else if (name == "apportionment") {
    const std::string law = j.value("law", "uniform");
    if (law == "uniform") {
      k = SplitKernelSpec::apportionment_uniform();
    } else if (law == "beta") {
      if (!j.contains("a")) throw ConfigError("kernel beta: missing a");
      const double a = j.at("a").get<double>();
      if (a <= 0.0) throw ConfigError("kernel beta: a must be > 0");
      k = SplitKernelSpec::apportionment_beta(a);
    } else {
      throw ConfigError("kernel: law must be 'uniform' or 'beta'");
    }
  } else {
    throw ConfigError("kernel: unknown variant '" + name + "'");
  }
  const std::string rm = j.value("rate_mode", "canonical");
  if (rm == "raw") {
    k.rate_mode = SplitKernelSpec::RateMode::Raw;
  } else if (rm != "canonical") {
    throw ConfigError("kernel: rate_mode must be 'canonical' or 'raw'");
  }
  return k;
}

json direction_to_json(const DirectionalDistribution& R) {
  json j;
  switch (R.type()) {
    case DirectionalDistribution::Type::Isotropic:
      j["type"] = "isotropic";
      break;
    case DirectionalDistribution::Type::Atoms: {
      j["type"] = "atoms";
      json atoms = json::array();
      for (const auto& [u, w] : R.atom_list()) {
        if (R.dim() == 2) {
          atoms.push_back({u.x, u.y, w});
        } else {
          atoms.push_back({u.x, u.y, u.z, w});
        }
      }
      j["atoms"] = atoms;
      break;
    }
    case DirectionalDistribution::Type::Density:
      j["type"] = "density";
      j["grid"] = R.grid();
      break;
  }
  return j;
}

DirectionalDistribution direction_from_json(const json& j, int dim) {
  const std::string type = j.value("type", "isotropic");
  if (type == "isotropic") return DirectionalDistribution::isotropic();
  if (type == "atoms") {
    if (!j.contains("atoms")) throw ConfigError("direction: missing atoms");
    std::vector<std::pair<Vec, double>> raw;
    for (const auto& aj : j.at("atoms")) {
      if (static_cast<int>(aj.size()) != dim + 1) {
        throw ConfigError("direction atoms: expected [u..., w] entries");
      }
      Vec u{aj[0].get<double>(), aj[1].get<double>(),
            dim == 3 ? aj[2].get<double>() : 0.0};
      raw.push_back({u, aj[dim].get<double>()});
    }
    return DirectionalDistribution::atoms(dim, raw);
  }
  if (type == "density") {
    if (!j.contains("grid")) throw ConfigError("direction: missing grid");
    std::vector<double> grid = j.at("grid").get<std::vector<double>>();
    return dim == 2 ? DirectionalDistribution::density2(std::move(grid))
                    : DirectionalDistribution::density3(std::move(grid));
  }
  throw ConfigError("direction: unknown type '" + type + "'");
}

json measure_to_json(const DrivingMeasure& L) {
  json j;
  j["rho"] = L.rho;
  j["R"] = direction_to_json(L.R);
  return j;
}

DrivingMeasure measure_from_json(const json& j, int dim) {
  DrivingMeasure L;
  L.rho = j.value("rho", 1.0);
  if (L.rho <= 0.0) throw ConfigError("measure: rho must be > 0");
  if (j.contains("R")) L.R = direction_from_json(j.at("R"), dim);
  return L;
}

}  // namespace tessellate::io
