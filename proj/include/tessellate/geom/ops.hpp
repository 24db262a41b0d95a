#pragma once

#include "tessellate/geom/polytope.hpp"

namespace tessellate::geom {

enum class Side { Plus, Minus };

/// c intersected with the halfspace <x,u> >= r (Plus) or <= r (Minus).
/// Returns an empty polytope when the halfspace misses the interior.
/// Throws DegenerateCut when the piece is cut but falls below eps_vol.
/// eps_vol < 0 selects the default kEpsVolRel * measure(c).
ConvexPolytope clip_halfspace(const ConvexPolytope& c, const Hyperplane& h,
                              Side side, double eps_vol = -1.0);

/// Clip a facet polytope (segment or planar polygon) by a halfspace.
/// Returns empty when nothing of positive (d-1)-measure remains.
ConvexPolytope clip_facet(const ConvexPolytope& facet, const Hyperplane& h,
                          Side side);

struct SplitResult {
  ConvexPolytope plus;
  ConvexPolytope minus;
  ConvexPolytope facet;  // H intersected with c, dimension d-1
};

/// Splits c by h into the two closed pieces and the separating facet.
/// Throws NotSeparating when h misses c or grazes it within tolerance.
SplitResult split_polytope(const ConvexPolytope& c, const Hyperplane& h,
                           double eps_vol = -1.0);

/// Inner parallel body {x in c : dist(x, boundary) >= r}, computed by
/// shifting every facet halfspace inward by r. Empty when inradius < r.
ConvexPolytope erosion(const ConvexPolytope& c, double r);

/// Largest clearance of the hyperplane inside the cell:
/// max over x in (h intersect c) of dist(x, boundary of c).
/// Returns 0 when h misses c. A splitting hyperplane sampled from the
/// eroded body ero(c, r) has clearance >= r.
double boundary_clearance(const ConvexPolytope& c, const Hyperplane& h);

/// Fraction of the measure of c lying on the Minus side of {<x,u> = r}.
double clipped_fraction(const ConvexPolytope& c, const Vec& u, double r);

}  // namespace tessellate::geom
