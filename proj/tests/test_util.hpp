#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tessellate/geom/ops.hpp"
#include "tessellate/measure/driving.hpp"
#include "tessellate/rng.hpp"

namespace testutil {

using tessellate::Rng;
using tessellate::geom::ConvexPolytope;
using tessellate::geom::Vec;

// Convex hull of random points (monotone chain); test-local so geometry
// checks do not lean on library internals.
inline ConvexPolytope random_polygon(Rng& rng, double scale = 2.0,
                                     int max_extra = 8) {
  const int n = 4 + static_cast<int>(rng.uniform() * (max_extra + 1));
  std::vector<Vec> pts(n);
  for (auto& p : pts) {
    p = {rng.uniform(-scale, scale), rng.uniform(-scale, scale), 0.0};
  }
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  auto cr = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Vec> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cr(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, low = k + 1; i >= 0; --i) {
    while (k >= low && cr(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return random_polygon(rng, scale, max_extra);
  return ConvexPolytope::polygon(h);
}

inline ConvexPolytope random_polyhedron(Rng& rng, double scale = 1.5) {
  using tessellate::geom::Hyperplane;
  using tessellate::geom::Side;
  ConvexPolytope c =
      ConvexPolytope::box({-scale, -scale, -scale}, {scale, scale, scale}, 3)
          .rotated3({rng.uniform(-1, 1), rng.uniform(-1, 1),
                     rng.uniform(-1, 1)},
                    rng.uniform(0.0, 3.0));
  for (int cut = 0; cut < 3; ++cut) {
    const Vec u = tessellate::measure::DirectionalDistribution::isotropic()
                      .sample(3, rng);
    const auto s = tessellate::geom::support_interval(c, u);
    const double off = s.lo + (0.5 + 0.45 * rng.uniform()) * (s.hi - s.lo);
    try {
      c = tessellate::geom::clip_halfspace(c, Hyperplane::oriented(u, off),
                                           Side::Minus);
    } catch (const tessellate::TessError&) {
    }
    if (c.is_empty()) return random_polyhedron(rng, scale);
  }
  return c;
}

// Independent area oracle (shoelace).
inline double shoelace(const std::vector<Vec>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& p = v[i];
    const Vec& q = v[(i + 1) % v.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

inline bool near(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

inline bool near_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::fabs(b);
}

}  // namespace testutil
