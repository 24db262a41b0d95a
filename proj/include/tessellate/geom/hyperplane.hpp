#pragma once

#include <cmath>

#include "tessellate/geom/vec.hpp"

namespace tessellate::geom {

/// Affine hyperplane {x : <x, normal> = offset} with unit normal. The
/// default constructor path canonicalizes: it keeps the lexicographically
/// larger of (normal, -normal) with the matching offset sign, so each
/// geometric hyperplane has one representation. Halfspace bookkeeping that
/// needs a specific orientation uses the oriented() factory instead.
struct Hyperplane {
  Vec normal;           // unit vector
  double offset = 0.0;  // signed, in length units

  Hyperplane() = default;

  Hyperplane(const Vec& n, double r) {
    Vec u = normalized(n);
    if (lex_less(u, -u)) {
      u = -u;
      r = -r;
    }
    normal = u;
    offset = r;
  }

  /// Normalizes but keeps the caller's orientation.
  static Hyperplane oriented(const Vec& n, double r) {
    Hyperplane h;
    const double len = norm(n);
    h.normal = n / len;
    h.offset = r / len;
    return h;
  }

  double signed_distance(const Vec& p) const {
    return dot(p, normal) - offset;
  }

  bool operator==(const Hyperplane& o) const {
    return normal.x == o.normal.x && normal.y == o.normal.y &&
           normal.z == o.normal.z && offset == o.offset;
  }
};

}  // namespace tessellate::geom
