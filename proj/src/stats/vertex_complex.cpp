#include "tessellate/stats/vertex_complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tessellate::stats {
namespace {

// Closest-approach parameters of two segments (p1 + s d1, p2 + t d2).
bool closest_params(const Vec& p1, const Vec& d1, const Vec& p2,
                    const Vec& d2, double& s, double& t) {
  const double a = dot(d1, d1);
  const double b = dot(d1, d2);
  const double c = dot(d2, d2);
  const Vec w = p1 - p2;
  const double d = dot(d1, w);
  const double e = dot(d2, w);
  const double den = a * c - b * b;
  if (std::fabs(den) < 1e-14 * a * c) return false;  // near parallel
  s = (b * e - c * d) / den;
  t = (a * e - b * d) / den;
  return true;
}

}  // namespace

bool segments_cross(const SkeletonSegment& s1, const SkeletonSegment& s2,
                    double tol, Vec* point) {
  const Vec d1 = s1.b - s1.a;
  const Vec d2 = s2.b - s2.a;
  double s, t;
  if (!closest_params(s1.a, d1, s2.a, d2, s, t)) return false;
  const double l1 = norm(d1), l2 = norm(d2);
  // Proper crossing: both parameters strictly interior (beyond tol of the
  // endpoints) and the two lines actually meet.
  if (s * l1 < tol || (1.0 - s) * l1 < tol) return false;
  if (t * l2 < tol || (1.0 - t) * l2 < tol) return false;
  const Vec q1 = s1.a + d1 * s;
  const Vec q2 = s2.a + d2 * t;
  if (dist(q1, q2) > tol) return false;
  if (point) *point = (q1 + q2) * 0.5;
  return true;
}

VertexComplex build_vertex_complex(const NestedTessellation& Y) {
  VertexComplex vc;
  const double diam = Y.window.diameter();
  const double tol = 1e-7 * diam;
  vc.merge_tol = tol;

  // Skeleton segments.
  for (std::uint32_t mi = 0; mi < Y.maximal_polytopes.size(); ++mi) {
    const ConvexPolytope& g = Y.maximal_polytopes[mi].geometry;
    if (g.dim() == 1) {
      vc.segments.push_back({g.vertices()[0], g.vertices()[1], mi});
    } else {
      const auto& v = g.vertices();
      for (std::size_t k = 0; k < v.size(); ++k) {
        vc.segments.push_back({v[k], v[(k + 1) % v.size()], mi});
      }
    }
  }

  // Candidate vertices: endpoints plus proper crossings between segments of
  // different maximal polytopes.
  std::vector<Vec> cand;
  cand.reserve(vc.segments.size() * 2);
  for (const auto& s : vc.segments) {
    cand.push_back(s.a);
    cand.push_back(s.b);
  }
  for (std::size_t i = 0; i < vc.segments.size(); ++i) {
    for (std::size_t j = i + 1; j < vc.segments.size(); ++j) {
      if (vc.segments[i].owner == vc.segments[j].owner) continue;
      Vec p;
      if (segments_cross(vc.segments[i], vc.segments[j], tol, &p)) {
        cand.push_back(p);
      }
    }
  }

  // Merge candidates within tolerance (grid hash).
  std::map<std::tuple<long long, long long, long long>, std::vector<int>> grid;
  const double cell = std::max(tol * 4.0, 1e-300);
  std::vector<Vec> merged;
  auto key_of = [&](const Vec& p) {
    return std::tuple<long long, long long, long long>{
        static_cast<long long>(std::floor(p.x / cell)),
        static_cast<long long>(std::floor(p.y / cell)),
        static_cast<long long>(std::floor(p.z / cell))};
  };
  for (const auto& p : cand) {
    bool found = false;
    const auto [kx, ky, kz] = key_of(p);
    for (long long dx = -1; dx <= 1 && !found; ++dx) {
      for (long long dy = -1; dy <= 1 && !found; ++dy) {
        for (long long dz = -1; dz <= 1 && !found; ++dz) {
          auto it = grid.find({kx + dx, ky + dy, kz + dz});
          if (it == grid.end()) continue;
          for (int idx : it->second) {
            if (dist(merged[idx], p) <= tol) {
              found = true;
              break;
            }
          }
        }
      }
    }
    if (!found) {
      grid[key_of(p)].push_back(static_cast<int>(merged.size()));
      merged.push_back(p);
    }
  }

  // Incidence scan: directions and segment break positions.
  vc.seg_breaks.assign(vc.segments.size(), {});
  vc.vertices.resize(merged.size());
  for (std::size_t vi = 0; vi < merged.size(); ++vi) {
    vc.vertices[vi].location = merged[vi];
  }
  for (std::size_t si = 0; si < vc.segments.size(); ++si) {
    const auto& s = vc.segments[si];
    const Vec d = s.b - s.a;
    const double len = norm(d);
    const Vec u = d / len;
    vc.seg_breaks[si].push_back(0.0);
    vc.seg_breaks[si].push_back(len);
    for (std::size_t vi = 0; vi < merged.size(); ++vi) {
      const Vec& p = merged[vi];
      const double along = dot(p - s.a, u);
      if (along < -tol || along > len + tol) continue;
      const Vec foot = s.a + u * std::clamp(along, 0.0, len);
      if (dist(foot, p) > tol) continue;
      auto& rec = vc.vertices[vi];
      if (along <= tol) {
        rec.incident_dirs.push_back(u);
      } else if (along >= len - tol) {
        rec.incident_dirs.push_back(-u);
      } else {
        rec.incident_dirs.push_back(u);
        rec.incident_dirs.push_back(-u);
        vc.seg_breaks[si].push_back(along);
      }
    }
    std::sort(vc.seg_breaks[si].begin(), vc.seg_breaks[si].end());
  }

  // Classification.
  const auto window_planes = Y.window.facet_halfspaces();
  for (auto& rec : vc.vertices) {
    bool on_window = false;
    for (const auto& h : window_planes) {
      if (std::fabs(h.signed_distance(rec.location)) <= tol) {
        on_window = true;
        break;
      }
    }
    if (on_window) {
      rec.vclass = VClass::WindowBoundary;
      continue;
    }
    int pairs = 0;
    const auto& dirs = rec.incident_dirs;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        if (std::fabs(1.0 - std::fabs(dot(dirs[i], -dirs[j]))) <= 1e-6 &&
            dot(dirs[i], dirs[j]) < 0.0) {
          ++pairs;
        }
      }
    }
    rec.collinear_pairs = pairs;
    rec.vclass = pairs == 1 ? VClass::T : (pairs == 2 ? VClass::X : VClass::Other);
  }

  return vc;
}

}  // namespace tessellate::stats
