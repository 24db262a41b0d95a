#include "tessellate/geom/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "tessellate/errors.hpp"
#include "tessellate/geom/constants.hpp"
#include "tessellate/simd/batch.hpp"

namespace tessellate::geom {
namespace {

struct Scratch {
  std::vector<double> xs, ys, zs, sd;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Signed distances of all vertices to the hyperplane, via the dispatched
// batch kernel.
void signed_distances(const ConvexPolytope& c, const Hyperplane& h,
                      std::vector<double>& out) {
  auto& s = scratch();
  const auto& v = c.vertices();
  const std::size_t n = v.size();
  s.xs.resize(n);
  s.ys.resize(n);
  s.zs.resize(n);
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.xs[i] = v[i].x;
    s.ys[i] = v[i].y;
    s.zs[i] = v[i].z;
  }
  const auto& k = simd::kernels();
  if (c.ambient_dim() == 2) {
    k.signed_distance2(s.xs.data(), s.ys.data(), n, h.normal.x, h.normal.y,
                       h.offset, out.data());
  } else {
    k.signed_distance3(s.xs.data(), s.ys.data(), s.zs.data(), n, h.normal.x,
                       h.normal.y, h.normal.z, h.offset, out.data());
  }
}

struct ClipBoth {
  ConvexPolytope minus;
  ConvexPolytope plus;
  std::vector<Vec> cut;            // on-plane points, 2D
  std::vector<Vec> cap_cycle;      // ordered cap polygon, 3D
};

double on_plane_eps(const ConvexPolytope& c) {
  return 1e-12 * (1.0 + c.diameter());
}

void dedup_cycle(std::vector<Vec>& cyc, double eps) {
  std::vector<Vec> out;
  for (const auto& p : cyc) {
    if (out.empty() || dist(out.back(), p) > eps) out.push_back(p);
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= eps) {
    out.pop_back();
  }
  cyc = std::move(out);
}

ClipBoth clip_both_2d(const ConvexPolytope& c, const Hyperplane& h) {
  const double eps = on_plane_eps(c);
  std::vector<double> sd;
  signed_distances(c, h, sd);
  const auto& v = c.vertices();
  const std::size_t n = v.size();

  int npos = 0, nneg = 0;
  std::vector<int> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = sd[i] > eps ? 1 : (sd[i] < -eps ? -1 : 0);
    npos += cls[i] > 0;
    nneg += cls[i] < 0;
  }

  ClipBoth r;
  if (npos == 0) {
    r.minus = c;
    r.plus = ConvexPolytope::empty(2);
    return r;
  }
  if (nneg == 0) {
    r.plus = c;
    r.minus = ConvexPolytope::empty(2);
    return r;
  }

  std::vector<Vec> mverts, pverts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (cls[i] <= 0) mverts.push_back(v[i]);
    if (cls[i] >= 0) pverts.push_back(v[i]);
    if (cls[i] == 0) r.cut.push_back(v[i]);
    if (cls[i] * cls[j] < 0) {
      const double t = sd[i] / (sd[i] - sd[j]);
      const Vec p = v[i] + (v[j] - v[i]) * t;
      mverts.push_back(p);
      pverts.push_back(p);
      r.cut.push_back(p);
    }
  }
  dedup_cycle(mverts, eps);
  dedup_cycle(pverts, eps);
  r.minus = mverts.size() >= 3 ? ConvexPolytope::polygon(std::move(mverts))
                               : ConvexPolytope::empty(2);
  r.plus = pverts.size() >= 3 ? ConvexPolytope::polygon(std::move(pverts))
                              : ConvexPolytope::empty(2);
  return r;
}

// Two in-plane axes orthogonal to n.
void plane_basis(const Vec& n, Vec& e1, Vec& e2) {
  const Vec a = std::fabs(n.x) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  e1 = normalized(cross(n, a));
  e2 = cross(n, e1);
}

std::vector<Vec> order_cap(std::vector<Vec> pts, const Vec& normal,
                           double eps, bool outward_along_normal) {
  // Deduplicate.
  std::vector<Vec> uniq;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : uniq) {
      if (dist(p, q) <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() < 3) return uniq;
  Vec cen{};
  for (const auto& p : uniq) cen += p;
  cen = cen / static_cast<double>(uniq.size());
  Vec e1, e2;
  plane_basis(normal, e1, e2);
  std::sort(uniq.begin(), uniq.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(dot(a - cen, e2), dot(a - cen, e1)) <
           std::atan2(dot(b - cen, e2), dot(b - cen, e1));
  });
  // Newell orientation check.
  Vec nw{};
  for (std::size_t k = 0; k < uniq.size(); ++k) {
    nw += cross(uniq[k], uniq[(k + 1) % uniq.size()]);
  }
  const bool along = dot(nw, normal) > 0.0;
  if (along != outward_along_normal) {
    std::reverse(uniq.begin(), uniq.end());
  }
  return uniq;
}

ClipBoth clip_both_3d(const ConvexPolytope& c, const Hyperplane& h) {
  const double eps = on_plane_eps(c);
  std::vector<double> sd;
  signed_distances(c, h, sd);
  const auto& v = c.vertices();
  const std::size_t n = v.size();

  int npos = 0, nneg = 0;
  std::vector<int> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = sd[i] > eps ? 1 : (sd[i] < -eps ? -1 : 0);
    npos += cls[i] > 0;
    nneg += cls[i] < 0;
  }

  ClipBoth r;
  if (npos == 0) {
    r.minus = c;
    r.plus = ConvexPolytope::empty(3);
    return r;
  }
  if (nneg == 0) {
    r.plus = c;
    r.minus = ConvexPolytope::empty(3);
    return r;
  }

  // Cut point per crossed edge, computed once from the lower vertex index so
  // adjacent faces share the bit-identical point.
  std::map<std::pair<int, int>, Vec> edge_cut;
  auto cut_point = [&](int i, int j) -> const Vec& {
    const auto key = std::minmax(i, j);
    auto it = edge_cut.find(key);
    if (it == edge_cut.end()) {
      const int a = key.first, b = key.second;
      const double t = sd[a] / (sd[a] - sd[b]);
      it = edge_cut.emplace(key, v[a] + (v[b] - v[a]) * t).first;
    }
    return it->second;
  };

  struct Builder {
    std::vector<Vec> verts;
    std::vector<std::vector<int>> faces;
    std::map<int, int> old2new;
    std::map<std::pair<int, int>, int> cut2new;
    int index_of_old(const ConvexPolytope& c, int i) {
      auto it = old2new.find(i);
      if (it == old2new.end()) {
        it = old2new.emplace(i, static_cast<int>(verts.size())).first;
        verts.push_back(c.vertices()[i]);
      }
      return it->second;
    }
    int index_of_cut(const std::pair<int, int>& key, const Vec& p) {
      auto it = cut2new.find(key);
      if (it == cut2new.end()) {
        it = cut2new.emplace(key, static_cast<int>(verts.size())).first;
        verts.push_back(p);
      }
      return it->second;
    }
  };

  Builder bm, bp;
  std::vector<Vec> plane_pts_m, plane_pts_p;

  for (const auto& f : c.faces()) {
    std::vector<int> fm, fp;
    const std::size_t m = f.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int i = f[k];
      const int j = f[(k + 1) % m];
      if (cls[i] <= 0) fm.push_back(bm.index_of_old(c, i));
      if (cls[i] >= 0) fp.push_back(bp.index_of_old(c, i));
      if (cls[i] == 0) {
        plane_pts_m.push_back(v[i]);
        plane_pts_p.push_back(v[i]);
      }
      if (cls[i] * cls[j] < 0) {
        const auto key = std::minmax(i, j);
        const Vec& p = cut_point(i, j);
        fm.push_back(bm.index_of_cut(key, p));
        fp.push_back(bp.index_of_cut(key, p));
        plane_pts_m.push_back(p);
        plane_pts_p.push_back(p);
      }
    }
    auto add_face = [&](Builder& b, std::vector<int>& fc) {
      // Remove consecutive duplicates by position.
      std::vector<int> out;
      for (int idx : fc) {
        if (out.empty() || dist(b.verts[out.back()], b.verts[idx]) > eps) {
          out.push_back(idx);
        }
      }
      while (out.size() > 1 &&
             dist(b.verts[out.front()], b.verts[out.back()]) <= eps) {
        out.pop_back();
      }
      if (out.size() >= 3) b.faces.push_back(std::move(out));
    };
    add_face(bm, fm);
    add_face(bp, fp);
  }

  // Cap faces.
  const std::vector<Vec> cap_m =
      order_cap(plane_pts_m, h.normal, eps, /*outward_along_normal=*/true);
  const std::vector<Vec> cap_p =
      order_cap(plane_pts_p, h.normal, eps, /*outward_along_normal=*/false);
  r.cap_cycle = cap_m;

  auto append_cap = [&](Builder& b, const std::vector<Vec>& cap) {
    if (cap.size() < 3) return;
    std::vector<int> fc;
    for (const auto& p : cap) {
      int found = -1;
      for (std::size_t i = 0; i < b.verts.size(); ++i) {
        if (dist(b.verts[i], p) <= eps) {
          found = static_cast<int>(i);
          break;
        }
      }
      if (found < 0) {
        found = static_cast<int>(b.verts.size());
        b.verts.push_back(p);
      }
      fc.push_back(found);
    }
    b.faces.push_back(std::move(fc));
  };
  append_cap(bm, cap_m);
  append_cap(bp, cap_p);

  r.minus = (bm.faces.size() >= 4)
                ? ConvexPolytope::polyhedron(std::move(bm.verts),
                                             std::move(bm.faces))
                : ConvexPolytope::empty(3);
  r.plus = (bp.faces.size() >= 4)
               ? ConvexPolytope::polyhedron(std::move(bp.verts),
                                            std::move(bp.faces))
               : ConvexPolytope::empty(3);
  return r;
}

ClipBoth clip_both(const ConvexPolytope& c, const Hyperplane& h) {
  return c.ambient_dim() == 2 ? clip_both_2d(c, h) : clip_both_3d(c, h);
}

ConvexPolytope facet_from_clip(const ConvexPolytope& c, const Hyperplane& h,
                               const ClipBoth& r) {
  const double eps = on_plane_eps(c);
  if (c.ambient_dim() == 2) {
    // Extreme cut points along the in-plane direction.
    if (r.cut.size() < 2) return ConvexPolytope::empty(2);
    const Vec dir = perp2(h.normal);
    const Vec* lo = &r.cut[0];
    const Vec* hi = &r.cut[0];
    for (const auto& p : r.cut) {
      if (dot(p, dir) < dot(*lo, dir)) lo = &p;
      if (dot(p, dir) > dot(*hi, dir)) hi = &p;
    }
    if (dist(*lo, *hi) <= eps) return ConvexPolytope::empty(2);
    return ConvexPolytope::segment(*lo, *hi);
  }
  if (r.cap_cycle.size() < 3) return ConvexPolytope::empty(3);
  return ConvexPolytope::planar_polygon(r.cap_cycle);
}

}  // namespace

ConvexPolytope clip_halfspace(const ConvexPolytope& c, const Hyperplane& h,
                              Side side, double eps_vol) {
  if (c.is_empty()) return c;
  if (eps_vol < 0.0) eps_vol = kEpsVolRel * c.measure();
  const ClipBoth r = clip_both(c, h);
  const ConvexPolytope& piece = (side == Side::Minus) ? r.minus : r.plus;
  const ConvexPolytope& other = (side == Side::Minus) ? r.plus : r.minus;
  if (piece.is_empty()) return ConvexPolytope::empty(c.ambient_dim());
  if (piece.measure() < eps_vol) {
    if (!other.is_empty() && other.measure() >= eps_vol) {
      throw DegenerateCut("clip produced a piece below the volume floor");
    }
    return ConvexPolytope::empty(c.ambient_dim());
  }
  return piece;
}

ConvexPolytope clip_facet(const ConvexPolytope& facet, const Hyperplane& h,
                          Side side) {
  if (facet.is_empty()) return facet;
  const double eps = 1e-12 * (1.0 + facet.diameter());
  const auto& v = facet.vertices();
  const double sgn = (side == Side::Minus) ? 1.0 : -1.0;
  auto sd = [&](const Vec& p) { return sgn * h.signed_distance(p); };

  if (facet.dim() == 1) {
    const double d0 = sd(v[0]);
    const double d1 = sd(v[1]);
    if (d0 <= eps && d1 <= eps) return facet;
    if (d0 >= -eps && d1 >= -eps) return ConvexPolytope::empty(2);
    const double t = d0 / (d0 - d1);
    const Vec p = v[0] + (v[1] - v[0]) * t;
    const Vec kept = d0 < 0 ? v[0] : v[1];
    if (dist(kept, p) <= eps) return ConvexPolytope::empty(2);
    return d0 < 0 ? ConvexPolytope::segment(v[0], p)
                  : ConvexPolytope::segment(p, v[1]);
  }

  // Planar polygon cycle (2D facet of a 3D cell, or a 2D cell treated as a
  // facet during iteration); Sutherland-Hodgman on the cycle.
  std::vector<Vec> out;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double di = sd(v[i]);
    const double dj = sd(v[j]);
    if (di <= eps) out.push_back(v[i]);
    if ((di < -eps && dj > eps) || (di > eps && dj < -eps)) {
      const double t = di / (di - dj);
      out.push_back(v[i] + (v[j] - v[i]) * t);
    }
  }
  dedup_cycle(out, eps);
  if (out.size() < 3) return ConvexPolytope::empty(facet.ambient_dim());
  if (facet.ambient_dim() == 2) return ConvexPolytope::polygon(std::move(out));
  return ConvexPolytope::planar_polygon(std::move(out));
}

SplitResult split_polytope(const ConvexPolytope& c, const Hyperplane& h,
                           double eps_vol) {
  if (eps_vol < 0.0) eps_vol = kEpsVolRel * c.measure();
  const ClipBoth r = clip_both(c, h);
  if (r.minus.is_empty() || r.plus.is_empty()) {
    throw NotSeparating("hyperplane does not separate the polytope");
  }
  if (r.minus.measure() < eps_vol || r.plus.measure() < eps_vol) {
    throw NotSeparating("hyperplane grazes the polytope within tolerance");
  }
  SplitResult out;
  out.facet = facet_from_clip(c, h, r);
  if (out.facet.is_empty()) {
    throw NotSeparating("separating facet is degenerate");
  }
  out.minus = r.minus;
  out.plus = r.plus;
  return out;
}

ConvexPolytope erosion(const ConvexPolytope& c, double r) {
  if (c.is_empty() || r < 0.0) return c;
  if (r == 0.0) return c;
  ConvexPolytope cur = c;
  const double floor_vol = 1e-12 * c.measure();
  for (const auto& h : c.facet_halfspaces()) {
    const Hyperplane shifted = Hyperplane::oriented(h.normal, h.offset - r);
    try {
      cur = clip_halfspace(cur, shifted, Side::Minus, floor_vol);
    } catch (const DegenerateCut&) {
      return ConvexPolytope::empty(c.ambient_dim());
    }
    if (cur.is_empty()) return ConvexPolytope::empty(c.ambient_dim());
  }
  if (cur.measure() < floor_vol) return ConvexPolytope::empty(c.ambient_dim());
  return cur;
}

double clipped_fraction(const ConvexPolytope& c, const Vec& u, double r) {
  const Hyperplane h = Hyperplane::oriented(u, r);
  const ClipBoth res = clip_both(c, h);
  if (res.minus.is_empty()) return 0.0;
  const double f = res.minus.measure() / c.measure();
  return std::clamp(f, 0.0, 1.0);
}

namespace {

// Concave piecewise-linear clearance function min_i (off_i - <n_i, x>).
struct ClearanceFn {
  std::vector<Hyperplane> planes;
  double operator()(const Vec& x) const {
    double g = std::numeric_limits<double>::infinity();
    for (const auto& h : planes) {
      g = std::min(g, h.offset - dot(h.normal, x));
    }
    return g;
  }
};

double ternary_max_on_segment(const ClearanceFn& g, const Vec& a,
                              const Vec& b) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double g1 = g(a + (b - a) * m1);
    const double g2 = g(a + (b - a) * m2);
    if (g1 < g2) {
      lo = m1;
    } else if (g1 > g2) {
      hi = m2;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  return g(a + (b - a) * (0.5 * (lo + hi)));
}

}  // namespace

double boundary_clearance(const ConvexPolytope& c, const Hyperplane& h) {
  const ClipBoth r = clip_both(c, h);
  ClearanceFn g{c.facet_halfspaces()};

  if (c.ambient_dim() == 2) {
    const ConvexPolytope facet = facet_from_clip(c, h, r);
    if (facet.is_empty()) return 0.0;
    return std::max(
        0.0, ternary_max_on_segment(g, facet.vertices()[0], facet.vertices()[1]));
  }

  if (r.cap_cycle.size() < 3) return 0.0;
  // Maximize the concave function over the cap polygon: outer ternary search
  // along e1, inner along the feasible e2-slice.
  Vec e1, e2;
  plane_basis(h.normal, e1, e2);
  const auto& cap = r.cap_cycle;
  std::vector<double> s1(cap.size()), s2(cap.size());
  for (std::size_t i = 0; i < cap.size(); ++i) {
    s1[i] = dot(cap[i], e1);
    s2[i] = dot(cap[i], e2);
  }
  const Vec origin_shift = h.normal * h.offset;
  auto point_at = [&](double a, double b) {
    return origin_shift + e1 * (a - dot(origin_shift, e1)) +
           e2 * (b - dot(origin_shift, e2));
  };
  auto slice_max = [&](double a) {
    // Feasible s2 interval at coordinate a.
    double lo2 = std::numeric_limits<double>::infinity();
    double hi2 = -lo2;
    const std::size_t n = cap.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      const double x1 = s1[i], x2 = s1[j];
      if ((x1 - a) * (x2 - a) <= 0.0 && x1 != x2) {
        const double t = (a - x1) / (x2 - x1);
        const double y = s2[i] + t * (s2[j] - s2[i]);
        lo2 = std::min(lo2, y);
        hi2 = std::max(hi2, y);
      }
    }
    if (!(lo2 <= hi2)) return -std::numeric_limits<double>::infinity();
    return ternary_max_on_segment(g, point_at(a, lo2), point_at(a, hi2));
  };
  double lo = *std::min_element(s1.begin(), s1.end());
  double hi = *std::max_element(s1.begin(), s1.end());
  for (int it = 0; it < 120; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double g1 = slice_max(m1);
    const double g2 = slice_max(m2);
    if (g1 < g2) {
      lo = m1;
    } else if (g1 > g2) {
      hi = m2;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  return std::max(0.0, slice_max(0.5 * (lo + hi)));
}

}  // namespace tessellate::geom
