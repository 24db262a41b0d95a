#pragma once

#include <cmath>

namespace tessellate::geom {

/// Point/vector in ambient dimension 2 or 3. 2D data keeps z == 0, which
/// lets every downstream consumer treat coordinates uniformly.
struct Vec {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec() = default;
  constexpr Vec(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec operator-() const { return {-x, -y, -z}; }
  Vec& operator+=(const Vec& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline double dot(const Vec& a, const Vec& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec cross(const Vec& a, const Vec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec& v) { return dot(v, v); }
inline double norm(const Vec& v) { return std::sqrt(norm2(v)); }

inline Vec normalized(const Vec& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

/// Strict lexicographic order on (x, y, z).
inline bool lex_less(const Vec& a, const Vec& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

/// 90-degree counterclockwise rotation in the plane.
inline Vec perp2(const Vec& v) { return {-v.y, v.x, 0.0}; }

}  // namespace tessellate::geom
