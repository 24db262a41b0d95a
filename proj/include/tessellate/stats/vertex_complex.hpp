#pragma once

#include <cstdint>
#include <vector>

#include "tessellate/dynamics/tessellation.hpp"

namespace tessellate::stats {

using dynamics::NestedTessellation;
using geom::ConvexPolytope;
using geom::Vec;

enum class VClass { T, X, WindowBoundary, Other };

struct VertexRecord {
  Vec location;
  std::vector<Vec> incident_dirs;  // outgoing unit directions
  VClass vclass = VClass::Other;
  int collinear_pairs = 0;
  int degree() const { return static_cast<int>(incident_dirs.size()); }
};

/// One-dimensional skeleton element: a maximal segment in 2D, a side of a
/// maximal polygon in 3D. These are exactly the I-segments.
struct SkeletonSegment {
  Vec a, b;
  std::uint32_t owner = 0;  // index into maximal_polytopes
  double length() const { return dist(a, b); }
};

struct VertexComplex {
  std::vector<VertexRecord> vertices;
  std::vector<SkeletonSegment> segments;
  /// Sorted arc-length positions of incident vertices per segment,
  /// endpoints included; consecutive pairs delimit the edges.
  std::vector<std::vector<double>> seg_breaks;
  double merge_tol = 0.0;
};

/// Builds the vertex/edge complex of a finished tessellation from its
/// maximal polytopes: vertices are their endpoints/corners plus mutual
/// intersection points, merged at 1e-7 x window diameter; classification
/// counts collinear-opposite pairs among incident directions (one pair: T,
/// two pairs: X). Vertices on the window boundary are tagged separately.
VertexComplex build_vertex_complex(const NestedTessellation& Y);

/// Segment and crossing primitives shared with the tests.
bool segments_cross(const SkeletonSegment& s1, const SkeletonSegment& s2,
                    double tol, Vec* point);

}  // namespace tessellate::stats
