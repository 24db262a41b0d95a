#include "tessellate/geom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "tessellate/geom/constants.hpp"

namespace tessellate::geom {

ConvexPolytope ConvexPolytope::empty(int ambient_dim) {
  ConvexPolytope p;
  p.ambient_ = ambient_dim;
  p.dim_ = ambient_dim;
  return p;
}

ConvexPolytope ConvexPolytope::polygon(std::vector<Vec> ccw_vertices) {
  ConvexPolytope p;
  p.ambient_ = 2;
  p.dim_ = 2;
  p.verts_ = std::move(ccw_vertices);
  return p;
}

ConvexPolytope ConvexPolytope::polyhedron(std::vector<Vec> vertices,
                                          std::vector<std::vector<int>> faces) {
  ConvexPolytope p;
  p.ambient_ = 3;
  p.dim_ = 3;
  p.verts_ = std::move(vertices);
  p.faces_ = std::move(faces);
  return p;
}

ConvexPolytope ConvexPolytope::box(const Vec& lo, const Vec& hi, int dim) {
  if (dim == 2) {
    return polygon({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
  }
  std::vector<Vec> v = {
      {lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z},
      {lo.x, hi.y, lo.z}, {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z},
      {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z}};
  // Outward-oriented cycles.
  std::vector<std::vector<int>> f = {
      {0, 3, 2, 1},  // z = lo
      {4, 5, 6, 7},  // z = hi
      {0, 1, 5, 4},  // y = lo
      {2, 3, 7, 6},  // y = hi
      {1, 2, 6, 5},  // x = hi
      {0, 4, 7, 3},  // x = lo
  };
  return polyhedron(std::move(v), std::move(f));
}

ConvexPolytope ConvexPolytope::segment(const Vec& a, const Vec& b) {
  ConvexPolytope p;
  p.ambient_ = 2;
  p.dim_ = 1;
  p.verts_ = {a, b};
  return p;
}

ConvexPolytope ConvexPolytope::planar_polygon(std::vector<Vec> cycle) {
  ConvexPolytope p;
  p.ambient_ = 3;
  p.dim_ = 2;
  p.verts_ = std::move(cycle);
  return p;
}

ConvexPolytope ConvexPolytope::regular_polygon(int n, double r, const Vec& c) {
  std::vector<Vec> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    v.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return polygon(std::move(v));
}

namespace {

double polygon_area_ccw(const std::vector<Vec>& v) {
  double a = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = v[i];
    const Vec& q = v[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

double planar_polygon_area3(const std::vector<Vec>& v) {
  if (v.size() < 3) return 0.0;
  Vec acc{};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    acc += cross(v[i] - v[0], v[i + 1] - v[0]);
  }
  return 0.5 * norm(acc);
}

}  // namespace

double ConvexPolytope::measure() const {
  if (verts_.empty()) return 0.0;
  if (dim_ == 1) {
    return verts_.size() >= 2 ? dist(verts_[0], verts_[1]) : 0.0;
  }
  if (dim_ == 2) {
    if (ambient_ == 2) return polygon_area_ccw(verts_);
    return planar_polygon_area3(verts_);
  }
  // 3D cell: signed tetrahedra over outward face fans.
  double vol6 = 0.0;
  for (const auto& f : faces_) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const Vec& a = verts_[f[0]];
      const Vec& b = verts_[f[i]];
      const Vec& c = verts_[f[i + 1]];
      vol6 += dot(a, cross(b, c));
    }
  }
  return vol6 / 6.0;
}

double ConvexPolytope::surface_measure() const {
  if (verts_.empty()) return 0.0;
  if (dim_ == 2 && ambient_ == 2) {
    double s = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      s += dist(verts_[i], verts_[(i + 1) % verts_.size()]);
    }
    return s;
  }
  if (dim_ == 3) {
    double s = 0.0;
    for (const auto& f : faces_) {
      std::vector<Vec> cycle;
      cycle.reserve(f.size());
      for (int idx : f) cycle.push_back(verts_[idx]);
      s += planar_polygon_area3(cycle);
    }
    return s;
  }
  return 0.0;
}

Vec ConvexPolytope::barycenter() const {
  if (verts_.empty()) return {};
  if (dim_ == 1) return (verts_[0] + verts_[1]) * 0.5;
  if (dim_ == 2 && ambient_ == 2) {
    double a6 = 0.0;
    Vec c{};
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& p = verts_[i];
      const Vec& q = verts_[(i + 1) % n];
      const double w = p.x * q.y - q.x * p.y;
      a6 += w;
      c += (p + q) * w;
    }
    return c / (3.0 * a6);
  }
  if (dim_ == 2 && ambient_ == 3) {
    // Area centroid of a planar convex polygon via a triangle fan.
    double area2 = 0.0;
    Vec c{};
    for (std::size_t i = 1; i + 1 < verts_.size(); ++i) {
      const double w = norm(cross(verts_[i] - verts_[0], verts_[i + 1] - verts_[0]));
      area2 += w;
      c += (verts_[0] + verts_[i] + verts_[i + 1]) * (w / 3.0);
    }
    return c / area2;
  }
  // 3D cell.
  double vol6 = 0.0;
  Vec c{};
  for (const auto& f : faces_) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const Vec& a = verts_[f[0]];
      const Vec& b = verts_[f[i]];
      const Vec& d = verts_[f[i + 1]];
      const double w = dot(a, cross(b, d));
      vol6 += w;
      c += (a + b + d) * (w / 4.0);
    }
  }
  return c / vol6;
}

double ConvexPolytope::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    for (std::size_t j = i + 1; j < verts_.size(); ++j) {
      best = std::max(best, norm2(verts_[i] - verts_[j]));
    }
  }
  return std::sqrt(best);
}

ConvexPolytope ConvexPolytope::translated(const Vec& shift) const {
  ConvexPolytope p = *this;
  for (auto& v : p.verts_) v += shift;
  return p;
}

ConvexPolytope ConvexPolytope::scaled(double factor) const {
  ConvexPolytope p = *this;
  for (auto& v : p.verts_) v *= factor;
  return p;
}

ConvexPolytope ConvexPolytope::rotated2(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  ConvexPolytope p = *this;
  for (auto& v : p.verts_) v = {c * v.x - s * v.y, s * v.x + c * v.y, 0.0};
  return p;
}

ConvexPolytope ConvexPolytope::rotated3(const Vec& axis, double theta) const {
  const Vec k = normalized(axis);
  const double c = std::cos(theta), s = std::sin(theta);
  ConvexPolytope p = *this;
  for (auto& v : p.verts_) {
    v = v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
  }
  return p;
}

std::vector<Hyperplane> ConvexPolytope::facet_halfspaces() const {
  std::vector<Hyperplane> out;
  if (dim_ == 2 && ambient_ == 2) {
    const std::size_t n = verts_.size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& a = verts_[i];
      const Vec& b = verts_[(i + 1) % n];
      const Vec nrm = normalized(Vec{b.y - a.y, a.x - b.x, 0.0});
      out.push_back(Hyperplane::oriented(nrm, dot(nrm, a)));
    }
    return out;
  }
  if (dim_ == 3) {
    out.reserve(faces_.size());
    for (const auto& f : faces_) {
      Vec nrm{};  // Newell normal, outward for outward-oriented cycles
      Vec cen{};
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Vec& p = verts_[f[k]];
        const Vec& q = verts_[f[(k + 1) % f.size()]];
        nrm += cross(p, q);
        cen += p;
      }
      nrm = normalized(nrm);
      cen = cen / static_cast<double>(f.size());
      out.push_back(Hyperplane::oriented(nrm, dot(nrm, cen)));
    }
    return out;
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, double>>
ConvexPolytope::edges_with_dihedrals() const {
  std::vector<std::pair<std::pair<int, int>, double>> out;
  if (dim_ != 3) return out;
  // Collect outward face normals and the face id of each directed edge.
  std::vector<Vec> normals;
  normals.reserve(faces_.size());
  for (const auto& f : faces_) {
    Vec nrm{};
    for (std::size_t k = 0; k < f.size(); ++k) {
      nrm += cross(verts_[f[k]], verts_[f[(k + 1) % f.size()]]);
    }
    normals.push_back(normalized(nrm));
  }
  std::map<std::pair<int, int>, int> first_face;
  for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
    const auto& f = faces_[fi];
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int i = f[k];
      const int j = f[(k + 1) % f.size()];
      const auto key = std::minmax(i, j);
      auto it = first_face.find(key);
      if (it == first_face.end()) {
        first_face.emplace(key, static_cast<int>(fi));
      } else {
        const Vec& n1 = normals[it->second];
        const Vec& n2 = normals[fi];
        const double delta = std::atan2(norm(cross(n1, n2)), dot(n1, n2));
        out.push_back({key, delta});
      }
    }
  }
  return out;
}

bool ConvexPolytope::contains(const Vec& p, double tol) const {
  if (verts_.empty()) return false;
  for (const auto& h : facet_halfspaces()) {
    if (h.signed_distance(p) > tol) return false;
  }
  return true;
}

bool ConvexPolytope::validate(std::string* reason, double tol) const {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (verts_.empty()) return fail("empty");
  const double scale = std::max(diameter(), 1e-30);
  if (dim_ == 2 && ambient_ == 2) {
    if (verts_.size() < 3) return fail("fewer than 3 vertices");
    if (measure() <= 0.0) return fail("nonpositive area");
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec a = verts_[(i + 1) % n] - verts_[i];
      const Vec b = verts_[(i + 2) % n] - verts_[(i + 1) % n];
      if (a.x * b.y - a.y * b.x < -tol * scale * scale) {
        return fail("not convex / not CCW");
      }
    }
    return true;
  }
  if (dim_ == 3) {
    if (faces_.size() < 4) return fail("fewer than 4 faces");
    if (measure() <= 0.0) return fail("nonpositive volume");
    // Hull property: all vertices behind every face plane.
    for (const auto& h : facet_halfspaces()) {
      for (const auto& v : verts_) {
        if (h.signed_distance(v) > tol * scale) {
          return fail("vertex outside a face plane");
        }
      }
    }
    // Each edge appears in exactly two faces with opposite orientation.
    std::map<std::pair<int, int>, int> directed;
    for (const auto& f : faces_) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        ++directed[{f[k], f[(k + 1) % f.size()]}];
      }
    }
    for (const auto& [e, cnt] : directed) {
      if (cnt != 1) return fail("duplicate directed edge");
      if (directed.count({e.second, e.first}) != 1) {
        return fail("edge without opposite twin");
      }
    }
    return true;
  }
  return true;  // facets: nothing structural to check beyond emptiness
}

CenteredBody recenter(const ConvexPolytope& c) {
  return CenteredBody{c.translated(-c.barycenter())};
}

SupportInterval support_interval(const ConvexPolytope& c, const Vec& u) {
  SupportInterval s;
  s.lo = std::numeric_limits<double>::infinity();
  s.hi = -std::numeric_limits<double>::infinity();
  for (const auto& v : c.vertices()) {
    const double d = dot(v, u);
    s.lo = std::min(s.lo, d);
    s.hi = std::max(s.hi, d);
  }
  return s;
}

double width(const ConvexPolytope& c, const Vec& u) {
  const SupportInterval s = support_interval(c, u);
  return s.hi - s.lo;
}

double mean_width(const ConvexPolytope& c) {
  if (c.dim() == 2) {
    return c.surface_measure() / kPi;
  }
  double acc = 0.0;
  for (const auto& [e, delta] : c.edges_with_dihedrals()) {
    acc += dist(c.vertices()[e.first], c.vertices()[e.second]) * delta;
  }
  return acc / (4.0 * kPi);
}

}  // namespace tessellate::geom
