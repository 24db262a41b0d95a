#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tessellate/geom/hyperplane.hpp"
#include "tessellate/geom/vec.hpp"

namespace tessellate::geom {

/// Bounded convex body in ambient dimension 2 or 3.
///
/// Cells have intrinsic dimension equal to the ambient dimension; facets
/// (maximal polytopes) have intrinsic dimension one less: a segment in 2D,
/// a planar polygon embedded in 3D. 2D polygons keep their vertices in
/// counterclockwise boundary order; 3D polyhedra carry outward-oriented
/// vertex-index cycles, one per 2-face.
class ConvexPolytope {
 public:
  ConvexPolytope() = default;

  static ConvexPolytope empty(int ambient_dim);
  /// 2D cell from CCW boundary vertices.
  static ConvexPolytope polygon(std::vector<Vec> ccw_vertices);
  /// 3D cell from vertices and outward-oriented face cycles.
  static ConvexPolytope polyhedron(std::vector<Vec> vertices,
                                   std::vector<std::vector<int>> faces);
  /// Axis-aligned box, dim in {2,3}.
  static ConvexPolytope box(const Vec& lo, const Vec& hi, int dim);
  /// Facet of a 2D cell.
  static ConvexPolytope segment(const Vec& a, const Vec& b);
  /// Facet of a 3D cell: planar polygon given as a vertex cycle.
  static ConvexPolytope planar_polygon(std::vector<Vec> cycle);
  /// Regular n-gon with circumradius r centered at c (2D).
  static ConvexPolytope regular_polygon(int n, double r, const Vec& c = {});

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_empty() const { return verts_.empty(); }

  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  /// Intrinsic-dimension measure: length, area or volume.
  double measure() const;
  /// Boundary measure of a cell: perimeter in 2D, surface area in 3D.
  double surface_measure() const;
  Vec barycenter() const;
  double diameter() const;

  ConvexPolytope translated(const Vec& shift) const;
  ConvexPolytope scaled(double factor) const;  // about the origin
  /// Rotation by theta in the plane (2D) about the origin.
  ConvexPolytope rotated2(double theta) const;
  /// Rotation about a unit axis by theta (3D), Rodrigues form.
  ConvexPolytope rotated3(const Vec& axis, double theta) const;

  /// Outward halfspaces {x : <n,x> <= off}, one per boundary facet.
  std::vector<Hyperplane> facet_halfspaces() const;

  /// Edge list of a 3D cell as vertex index pairs with exterior dihedral
  /// angles; used by the closed-form isotropic hit mass.
  std::vector<std::pair<std::pair<int, int>, double>> edges_with_dihedrals()
      const;

  bool contains(const Vec& p, double tol) const;

  /// Structural sanity: convexity of the vertex set, nonempty interior,
  /// and (3D) closed face complex. Returns false with a reason on failure.
  bool validate(std::string* reason = nullptr, double tol = 1e-7) const;

 private:
  int ambient_ = 2;
  int dim_ = 2;
  std::vector<Vec> verts_;
  std::vector<std::vector<int>> faces_;
};

/// Convex body translated so its barycenter sits at the origin.
struct CenteredBody {
  ConvexPolytope body;
};

CenteredBody recenter(const ConvexPolytope& c);

/// Support interval {<x,u> : x in c}.
struct SupportInterval {
  double lo = 0.0, hi = 0.0;
};

SupportInterval support_interval(const ConvexPolytope& c, const Vec& u);

/// Width of c in direction u: h_c(u) + h_c(-u). Nonnegative and even in u.
double width(const ConvexPolytope& c, const Vec& u);

/// Direction-averaged width under the uniform distribution on the sphere,
/// in closed form: perimeter/pi in 2D, sum of edge-length x exterior
/// dihedral over 4 pi in 3D. Equals gamma_1(d) V_1(c).
double mean_width(const ConvexPolytope& c);

}  // namespace tessellate::geom
