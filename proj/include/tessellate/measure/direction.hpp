#pragma once

#include <utility>
#include <vector>

#include "tessellate/geom/vec.hpp"
#include "tessellate/rng.hpp"

namespace tessellate::measure {

using geom::Vec;

/// Even probability distribution on the unit sphere (the directional factor
/// of the driving measure). Three variants:
///   Isotropic       uniform on the sphere/circle,
///   Atoms           finite support, stored symmetrized (u and -u both
///                   present with halved weights),
///   Density         tabulated: 720 nodes uniform in angle (2D, linear
///                   interpolation) or a 48x64 equal-area (z, phi) grid (3D,
///                   piecewise constant).
class DirectionalDistribution {
 public:
  enum class Type { Isotropic, Atoms, Density };

  static constexpr int kNodes2 = 720;
  static constexpr int kBandsZ = 48;
  static constexpr int kColsPhi = 64;  // 48 * 64 = 3072 cells

  DirectionalDistribution() = default;

  static DirectionalDistribution isotropic();
  /// Symmetrizes and normalizes; throws ConfigError on nonpositive input.
  static DirectionalDistribution atoms(
      int dim, const std::vector<std::pair<Vec, double>>& raw);
  /// 2D tabulated density from kNodes2 node values over [0, 2pi); must be
  /// even under theta -> theta + pi within 1e-9 after normalization.
  static DirectionalDistribution density2(std::vector<double> node_values);
  /// 3D tabulated density from kBandsZ * kColsPhi cell values (row-major in
  /// z-band then phi-column); must be even under u -> -u within 1e-9.
  static DirectionalDistribution density3(std::vector<double> cell_values);

  Type type() const { return type_; }
  /// 0 when the variant is dimension-agnostic (isotropic).
  int dim() const { return dim_; }

  Vec sample(int dim, Rng& rng) const;

  const std::vector<std::pair<Vec, double>>& atom_list() const {
    return atoms_;
  }
  const std::vector<double>& grid() const { return grid_; }

  /// Deterministic quadrature nodes and weights for expectations over this
  /// distribution (tabulated variants; atoms return their support).
  void quadrature(int dim, std::vector<Vec>& dirs,
                  std::vector<double>& weights) const;

 private:
  Type type_ = Type::Isotropic;
  int dim_ = 0;
  std::vector<std::pair<Vec, double>> atoms_;
  std::vector<double> grid_;       // raw normalized values
  std::vector<double> cdf_;        // sampling CDF over bins/cells
};

}  // namespace tessellate::measure
