#include "tessellate/measure/direction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tessellate/errors.hpp"
#include "tessellate/geom/constants.hpp"

namespace tessellate::measure {

using geom::kPi;

DirectionalDistribution DirectionalDistribution::isotropic() {
  DirectionalDistribution d;
  d.type_ = Type::Isotropic;
  d.dim_ = 0;
  return d;
}

DirectionalDistribution DirectionalDistribution::atoms(
    int dim, const std::vector<std::pair<Vec, double>>& raw) {
  if (raw.empty()) throw ConfigError("atoms: empty support");
  DirectionalDistribution d;
  d.type_ = Type::Atoms;
  d.dim_ = dim;
  double total = 0.0;
  for (const auto& [u, w] : raw) {
    if (w <= 0.0) throw ConfigError("atoms: nonpositive weight");
    total += w;
  }
  for (const auto& [u, w] : raw) {
    const Vec v = normalized(u);
    d.atoms_.push_back({v, 0.5 * w / total});
    d.atoms_.push_back({-v, 0.5 * w / total});
  }
  d.cdf_.resize(d.atoms_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.atoms_.size(); ++i) {
    acc += d.atoms_[i].second;
    d.cdf_[i] = acc;
  }
  d.cdf_.back() = 1.0;
  return d;
}

DirectionalDistribution DirectionalDistribution::density2(
    std::vector<double> node_values) {
  if (static_cast<int>(node_values.size()) != kNodes2) {
    throw ConfigError("density2: expected 720 node values");
  }
  DirectionalDistribution d;
  d.type_ = Type::Density;
  d.dim_ = 2;
  // Normalize so the trapezoid integral over [0, 2pi) equals one.
  const double h = 2.0 * kPi / kNodes2;
  double integral = 0.0;
  for (int k = 0; k < kNodes2; ++k) {
    if (node_values[k] < 0.0) throw ConfigError("density2: negative value");
    integral += 0.5 * (node_values[k] + node_values[(k + 1) % kNodes2]) * h;
  }
  if (integral <= 0.0) throw ConfigError("density2: zero density");
  for (auto& f : node_values) f /= integral;
  for (int k = 0; k < kNodes2 / 2; ++k) {
    if (std::fabs(node_values[k] - node_values[k + kNodes2 / 2]) > 1e-9) {
      throw ConfigError("density2: not even under antipodal symmetry");
    }
  }
  d.grid_ = std::move(node_values);
  d.cdf_.resize(kNodes2);
  double acc = 0.0;
  for (int k = 0; k < kNodes2; ++k) {
    acc += 0.5 * (d.grid_[k] + d.grid_[(k + 1) % kNodes2]) * h;
    d.cdf_[k] = acc;
  }
  d.cdf_.back() = 1.0;
  return d;
}

DirectionalDistribution DirectionalDistribution::density3(
    std::vector<double> cell_values) {
  if (static_cast<int>(cell_values.size()) != kBandsZ * kColsPhi) {
    throw ConfigError("density3: expected 3072 cell values");
  }
  DirectionalDistribution d;
  d.type_ = Type::Density;
  d.dim_ = 3;
  double total = 0.0;
  for (double v : cell_values) {
    if (v < 0.0) throw ConfigError("density3: negative value");
    total += v;
  }
  if (total <= 0.0) throw ConfigError("density3: zero density");
  for (auto& v : cell_values) v /= total;  // cell probabilities (equal areas)
  for (int i = 0; i < kBandsZ; ++i) {
    for (int j = 0; j < kColsPhi; ++j) {
      const int anti =
          (kBandsZ - 1 - i) * kColsPhi + (j + kColsPhi / 2) % kColsPhi;
      if (std::fabs(cell_values[i * kColsPhi + j] - cell_values[anti]) >
          1e-9) {
        throw ConfigError("density3: not even under antipodal symmetry");
      }
    }
  }
  d.grid_ = std::move(cell_values);
  d.cdf_.resize(d.grid_.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < d.grid_.size(); ++k) {
    acc += d.grid_[k];
    d.cdf_[k] = acc;
  }
  d.cdf_.back() = 1.0;
  return d;
}

namespace {

Vec dir2(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

Vec dir3(double z, double phi) {
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

Vec DirectionalDistribution::sample(int dim, Rng& rng) const {
  switch (type_) {
    case Type::Isotropic: {
      if (dim == 2) return dir2(rng.uniform(0.0, 2.0 * kPi));
      return dir3(rng.uniform(-1.0, 1.0), rng.uniform(0.0, 2.0 * kPi));
    }
    case Type::Atoms: {
      const double u = rng.uniform();
      const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
      const std::size_t k = std::min<std::size_t>(it - cdf_.begin(),
                                                  atoms_.size() - 1);
      return atoms_[k].first;
    }
    case Type::Density:
    default: {
      const double u = rng.uniform();
      const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
      const std::size_t k =
          std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
      if (dim_ == 2) {
        // Linear density between nodes k and k+1: invert the within-bin CDF.
        const double f0 = grid_[k];
        const double f1 = grid_[(k + 1) % kNodes2];
        const double h = 2.0 * kPi / kNodes2;
        const double w = rng.uniform();
        double t;
        if (std::fabs(f1 - f0) < 1e-15 * (f0 + f1 + 1e-300)) {
          t = w;
        } else {
          t = (-f0 + std::sqrt(f0 * f0 + w * (f1 * f1 - f0 * f0))) / (f1 - f0);
        }
        return dir2((static_cast<double>(k) + t) * h);
      }
      const int i = static_cast<int>(k) / kColsPhi;
      const int j = static_cast<int>(k) % kColsPhi;
      const double z0 = -1.0 + 2.0 * i / kBandsZ;
      const double z1 = -1.0 + 2.0 * (i + 1) / kBandsZ;
      const double p0 = 2.0 * kPi * j / kColsPhi;
      const double p1 = 2.0 * kPi * (j + 1) / kColsPhi;
      return dir3(rng.uniform(z0, z1), rng.uniform(p0, p1));
    }
  }
}

void DirectionalDistribution::quadrature(int dim, std::vector<Vec>& dirs,
                                         std::vector<double>& weights) const {
  dirs.clear();
  weights.clear();
  switch (type_) {
    case Type::Atoms:
      for (const auto& [u, w] : atoms_) {
        dirs.push_back(u);
        weights.push_back(w);
      }
      return;
    case Type::Density:
      if (dim_ == 2) {
        const double h = 2.0 * kPi / kNodes2;
        for (int k = 0; k < kNodes2; ++k) {
          dirs.push_back(dir2((k + 0.5) * h));
          weights.push_back(
              0.5 * (grid_[k] + grid_[(k + 1) % kNodes2]) * h);
        }
      } else {
        for (int i = 0; i < kBandsZ; ++i) {
          for (int j = 0; j < kColsPhi; ++j) {
            const double z = -1.0 + 2.0 * (i + 0.5) / kBandsZ;
            const double phi = 2.0 * kPi * (j + 0.5) / kColsPhi;
            dirs.push_back(dir3(z, phi));
            weights.push_back(grid_[i * kColsPhi + j]);
          }
        }
      }
      return;
    case Type::Isotropic:
    default: {
      // Quasi-uniform grids: golden-angle circle / Fibonacci sphere.
      const int n = dim == 2 ? 1024 : 4096;
      const double golden = 0.6180339887498948482;
      for (int k = 0; k < n; ++k) {
        if (dim == 2) {
          double t = (k * golden);
          t -= std::floor(t);
          dirs.push_back(dir2(2.0 * kPi * t));
        } else {
          const double z = -1.0 + 2.0 * (k + 0.5) / n;
          double t = (k * golden);
          t -= std::floor(t);
          dirs.push_back(dir3(z, 2.0 * kPi * t));
        }
        weights.push_back(1.0 / n);
      }
      return;
    }
  }
}

}  // namespace tessellate::measure
