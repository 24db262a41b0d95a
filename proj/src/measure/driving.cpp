#include "tessellate/measure/driving.hpp"

#include <cmath>
#include <vector>

#include "tessellate/errors.hpp"
#include "tessellate/simd/batch.hpp"

namespace tessellate::measure {

Vec sample_direction(const DrivingMeasure& L, int dim, Rng& rng) {
  return L.R.sample(dim, rng);
}

namespace {

// Width of c in each direction of a batch, through the dispatched kernel.
void widths(const ConvexPolytope& c, const std::vector<Vec>& dirs,
            std::vector<double>& out) {
  const auto& v = c.vertices();
  const std::size_t nv = v.size();
  const std::size_t nd = dirs.size();
  thread_local std::vector<double> xs, ys, zs, ux, uy, uz;
  xs.resize(nv);
  ys.resize(nv);
  zs.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    xs[i] = v[i].x;
    ys[i] = v[i].y;
    zs[i] = v[i].z;
  }
  ux.resize(nd);
  uy.resize(nd);
  uz.resize(nd);
  for (std::size_t j = 0; j < nd; ++j) {
    ux[j] = dirs[j].x;
    uy[j] = dirs[j].y;
    uz[j] = dirs[j].z;
  }
  out.resize(nd);
  const auto& k = simd::kernels();
  if (c.ambient_dim() == 2) {
    k.width2(xs.data(), ys.data(), nv, ux.data(), uy.data(), nd, out.data());
  } else {
    k.width3(xs.data(), ys.data(), zs.data(), nv, ux.data(), uy.data(),
             uz.data(), nd, out.data());
  }
}

}  // namespace

double lambda_hit_mass(const DrivingMeasure& L, const ConvexPolytope& c) {
  switch (L.R.type()) {
    case DirectionalDistribution::Type::Isotropic:
      return L.rho * geom::mean_width(c);
    default: {
      std::vector<Vec> dirs;
      std::vector<double> w;
      L.R.quadrature(c.ambient_dim(), dirs, w);
      std::vector<double> wid;
      widths(c, dirs, wid);
      double acc = 0.0;
      for (std::size_t i = 0; i < dirs.size(); ++i) acc += w[i] * wid[i];
      return L.rho * acc;
    }
  }
}

double lambda_hit_mass_mc(const DrivingMeasure& L, const ConvexPolytope& c,
                          std::size_t n, Rng& rng) {
  std::vector<Vec> dirs(n);
  for (auto& u : dirs) u = L.R.sample(c.ambient_dim(), rng);
  std::vector<double> wid;
  widths(c, dirs, wid);
  double acc = 0.0;
  for (double w : wid) acc += w;
  return L.rho * acc / static_cast<double>(n);
}

Hyperplane sample_hitting_hyperplane(const DrivingMeasure& L,
                                     const ConvexPolytope& c, Rng& rng,
                                     int* tries) {
  const double diam = c.diameter();
  for (int it = 1; it <= 1000000; ++it) {
    const Vec u = L.R.sample(c.ambient_dim(), rng);
    const geom::SupportInterval s = geom::support_interval(c, u);
    const double w = s.hi - s.lo;
    if (rng.uniform() * diam <= w) {
      if (tries) *tries = it;
      const double r = s.lo + rng.uniform() * w;
      return Hyperplane(u, r);
    }
  }
  throw RejectionOverflow("hitting-hyperplane sampler exceeded 1e6 proposals");
}

Vec sample_hitting_direction(const DrivingMeasure& L, const ConvexPolytope& c,
                             Rng& rng) {
  const double diam = c.diameter();
  for (int it = 1; it <= 1000000; ++it) {
    const Vec u = L.R.sample(c.ambient_dim(), rng);
    if (rng.uniform() * diam <= geom::width(c, u)) return u;
  }
  throw RejectionOverflow("direction sampler exceeded 1e6 proposals");
}

double hit_fraction(const DrivingMeasure& L, const ConvexPolytope& c_inner,
                    const ConvexPolytope& c_outer) {
  return lambda_hit_mass(L, c_inner) / lambda_hit_mass(L, c_outer);
}

}  // namespace tessellate::measure
