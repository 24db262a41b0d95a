#include <doctest.h>

#include <cmath>

#include "tessellate/errors.hpp"
#include "tessellate/geom/constants.hpp"
#include "tessellate/geom/ops.hpp"
#include "test_util.hpp"

using namespace tessellate;
using geom::ConvexPolytope;
using geom::Hyperplane;
using geom::kPi;
using geom::Side;
using geom::Vec;
using testutil::near;
using testutil::near_rel;

namespace {

const ConvexPolytope kUnitSquare = ConvexPolytope::box({0, 0, 0}, {1, 1, 0}, 2);
const ConvexPolytope kUnitCube = ConvexPolytope::box({0, 0, 0}, {1, 1, 1}, 3);

}  // namespace

TEST_CASE("clip_halfspace: axis cut of the unit square") {
  const Hyperplane h({1, 0, 0}, 0.5);
  const auto piece = geom::clip_halfspace(kUnitSquare, h, Side::Minus);
  CHECK(near(piece.measure(), 0.5, 1e-12));
  for (const auto& v : piece.vertices()) {
    CHECK(v.x <= 0.5 + 1e-12);
  }
  CHECK(piece.validate());
}

TEST_CASE("clip_halfspace: non-hitting plane") {
  const Hyperplane h({1, 0, 0}, 2.0);
  const auto minus = geom::clip_halfspace(kUnitSquare, h, Side::Minus);
  CHECK(near(minus.measure(), 1.0, 1e-12));
  CHECK(minus.vertices().size() == 4);
  const auto plus = geom::clip_halfspace(kUnitSquare, h, Side::Plus);
  CHECK(plus.is_empty());
}

TEST_CASE("clip_halfspace: diagonal half-cube vs grid-count oracle") {
  const double s3 = std::sqrt(3.0);
  const Hyperplane h({1.0 / s3, 1.0 / s3, 1.0 / s3}, 1.5 / s3);
  const auto piece = geom::clip_halfspace(kUnitCube, h, Side::Minus);
  REQUIRE(!piece.is_empty());
  CHECK(piece.validate());

  // Brute-force volume: dense grid count, 10^6 points.
  const int g = 100;
  long long count = 0;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      for (int k = 0; k < g; ++k) {
        const double x = (i + 0.5) / g;
        const double y = (j + 0.5) / g;
        const double z = (k + 0.5) / g;
        if (x + y + z <= 1.5) ++count;
      }
    }
  }
  const double grid_vol = static_cast<double>(count) / (g * g * g);
  CHECK(near(piece.measure(), grid_vol, 5e-3));
  CHECK(near(piece.measure(), 0.5, 1e-9));  // central symmetry
}

TEST_CASE("split_polytope: square and cube slabs") {
  {
    const auto sr = geom::split_polytope(kUnitSquare, Hyperplane({0, 1, 0}, 0.25));
    // Minus side holds y <= 0.25.
    CHECK(near(sr.minus.measure(), 0.25, 1e-12));
    CHECK(near(sr.plus.measure(), 0.75, 1e-12));
    CHECK(near(sr.facet.measure(), 1.0, 1e-12));
  }
  {
    const auto sr = geom::split_polytope(kUnitCube, Hyperplane({0, 0, 1}, 0.5));
    CHECK(near(sr.minus.measure(), 0.5, 1e-12));
    CHECK(near(sr.plus.measure(), 0.5, 1e-12));
    CHECK(near(sr.facet.measure(), 1.0, 1e-12));
    CHECK(sr.minus.validate());
    CHECK(sr.plus.validate());
  }
}

TEST_CASE("split_polytope: random triangles against the shoelace oracle") {
  Rng rng(7);
  const auto L = measure::DrivingMeasure::iso();
  for (int it = 0; it < 100; ++it) {
    std::vector<Vec> tri(3);
    for (auto& p : tri) p = {rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
    if (testutil::shoelace(tri) < 0) std::swap(tri[1], tri[2]);
    if (testutil::shoelace(tri) < 0.05) continue;
    const auto c = ConvexPolytope::polygon(tri);
    const auto h = measure::sample_hitting_hyperplane(L, c, rng);
    geom::SplitResult sr;
    try {
      sr = geom::split_polytope(c, h);
    } catch (const NotSeparating&) {
      continue;
    }
    const double oracle = testutil::shoelace(tri);
    CHECK(near_rel(testutil::shoelace(sr.plus.vertices()) +
                       testutil::shoelace(sr.minus.vertices()),
                   oracle, 1e-9));
  }
}

TEST_CASE("split_polytope: grazing plane raises NotSeparating") {
  CHECK_THROWS_AS(geom::split_polytope(kUnitSquare, Hyperplane({1, 0, 0}, 1.0)),
                  NotSeparating);
  CHECK_THROWS_AS(
      geom::split_polytope(kUnitSquare, Hyperplane({1, 0, 0}, 1.0 - 1e-15)),
      NotSeparating);
}

TEST_CASE("clipping conservation and vertex bookkeeping") {
  Rng rng(11);
  const auto L = measure::DrivingMeasure::iso();
  for (int it = 0; it < 100; ++it) {
    const ConvexPolytope c = it % 2 == 0 ? testutil::random_polygon(rng)
                                         : testutil::random_polyhedron(rng);
    const auto h = measure::sample_hitting_hyperplane(L, c, rng);
    geom::SplitResult sr;
    try {
      sr = geom::split_polytope(c, h);
    } catch (const NotSeparating&) {
      continue;
    }
    CHECK(near_rel(sr.plus.measure() + sr.minus.measure(), c.measure(), 1e-9));
    // Every original vertex lands in exactly one piece or on the facet.
    const double eps = 1e-9 * (1.0 + c.diameter());
    for (const auto& v : c.vertices()) {
      const double sd = h.signed_distance(v);
      auto in_piece = [&](const ConvexPolytope& piece) {
        for (const auto& w : piece.vertices()) {
          if (dist(v, w) <= eps) return true;
        }
        return false;
      };
      if (sd < -eps) {
        CHECK(in_piece(sr.minus));
        CHECK(!in_piece(sr.plus));
      } else if (sd > eps) {
        CHECK(in_piece(sr.plus));
        CHECK(!in_piece(sr.minus));
      }
    }
    if (c.ambient_dim() == 3) {
      CHECK(sr.plus.validate());
      CHECK(sr.minus.validate());
    }
  }
}

TEST_CASE("width: examples and evenness") {
  CHECK(near(geom::width(kUnitSquare, {1, 0, 0}), 1.0, 1e-12));
  const double s2 = std::sqrt(2.0);
  CHECK(near(geom::width(kUnitSquare, {1 / s2, 1 / s2, 0}), s2, 1e-12));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Vec u =
        measure::DirectionalDistribution::isotropic().sample(3, rng);
    CHECK(geom::width(kUnitCube, u) ==
          doctest::Approx(geom::width(kUnitCube, -u)).epsilon(1e-12));
    CHECK(geom::width(kUnitCube, u) >= 0.0);
  }
}

TEST_CASE("width: cube direction average matches the edge-angle value") {
  // Mean width of the unit cube from the edge formula: 12 * (pi/2) / (4 pi).
  const double target = 1.5;
  Rng rng(5);
  double acc = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    acc += geom::width(
        kUnitCube,
        measure::DirectionalDistribution::isotropic().sample(3, rng));
  }
  CHECK(near(acc / n, target, 0.01));
}

TEST_CASE("mean_width closed forms") {
  CHECK(near(geom::mean_width(kUnitSquare), 4.0 / kPi, 1e-12));
  CHECK(near(geom::mean_width(kUnitCube), 1.5, 1e-12));
  // gamma_1 anchors.
  CHECK(near(geom::gamma1(2), 2.0 / kPi, 1e-12));
  CHECK(near(geom::gamma1(3), 0.5, 1e-12));
}

TEST_CASE("erosion: square examples") {
  const auto e = geom::erosion(kUnitSquare, 0.2);
  REQUIRE(!e.is_empty());
  CHECK(near(e.measure(), 0.36, 1e-9));
  CHECK(near(geom::mean_width(e), 4.0 * 0.6 / kPi, 1e-9));
  CHECK(geom::erosion(kUnitSquare, 0.6).is_empty());
}

TEST_CASE("erosion: random triangle similarity via the incenter oracle") {
  Rng rng(13);
  for (int it = 0; it < 50; ++it) {
    std::vector<Vec> tri(3);
    for (auto& p : tri) p = {rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
    if (testutil::shoelace(tri) < 0) std::swap(tri[1], tri[2]);
    const double area = testutil::shoelace(tri);
    if (area < 0.3) continue;
    const double la = dist(tri[1], tri[2]);
    const double lb = dist(tri[0], tri[2]);
    const double lc = dist(tri[0], tri[1]);
    const double inradius = 2.0 * area / (la + lb + lc);
    const Vec incenter =
        (tri[0] * la + tri[1] * lb + tri[2] * lc) / (la + lb + lc);
    const double r = 0.5 * inradius;
    const auto e = geom::erosion(ConvexPolytope::polygon(tri), r);
    REQUIRE(!e.is_empty());
    // Similar triangle scaled by (1 - r/inradius) about the incenter.
    const double f = 1.0 - r / inradius;
    REQUIRE(e.vertices().size() == 3);
    for (const auto& v : e.vertices()) {
      bool matched = false;
      for (const auto& p : tri) {
        const Vec expect = incenter + (p - incenter) * f;
        if (dist(expect, v) <= 1e-9) matched = true;
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("erosion monotone in r") {
  Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    const auto c = testutil::random_polygon(rng);
    const double r2 = 0.2 * rng.uniform();
    const double r1 = r2 * rng.uniform();
    const auto e1 = geom::erosion(c, r1);
    const auto e2 = geom::erosion(c, r2);
    if (e2.is_empty()) continue;
    REQUIRE(!e1.is_empty());
    for (const auto& v : e2.vertices()) {
      CHECK(e1.contains(v, 1e-9));
    }
  }
}

TEST_CASE("barycenter and recenter") {
  CHECK(near(kUnitSquare.barycenter().x, 0.5, 1e-12));
  CHECK(near(kUnitSquare.barycenter().y, 0.5, 1e-12));
  const auto tri =
      ConvexPolytope::polygon({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}});
  CHECK(near(tri.barycenter().x, 1.0, 1e-12));
  CHECK(near(tri.barycenter().y, 1.0, 1e-12));
  const Vec bc = kUnitCube.barycenter();
  CHECK(near(bc.x, 0.5, 1e-12));
  CHECK(near(bc.y, 0.5, 1e-12));
  CHECK(near(bc.z, 0.5, 1e-12));
  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    const auto c = testutil::random_polyhedron(rng);
    const auto centered = geom::recenter(c).body;
    CHECK(norm(centered.barycenter()) <= 1e-9 * (1.0 + c.diameter()));
  }
}

TEST_CASE("hyperplane canonical orientation") {
  const Hyperplane h1({-1, 0, 0}, -0.5);
  CHECK(h1.normal.x == 1.0);
  CHECK(h1.offset == 0.5);
  const Hyperplane h2({0, -1, 0}, 0.3);
  CHECK(h2.normal.y == 1.0);
  CHECK(h2.offset == -0.3);
  // Both representations collapse to the same object.
  CHECK(Hyperplane({0, 1, 0}, -0.3) == h2);
}

TEST_CASE("boundary_clearance on boxes") {
  CHECK(near(geom::boundary_clearance(kUnitSquare, Hyperplane({1, 0, 0}, 0.5)),
             0.5, 1e-9));
  CHECK(near(geom::boundary_clearance(kUnitSquare, Hyperplane({1, 0, 0}, 0.15)),
             0.15, 1e-9));
  CHECK(geom::boundary_clearance(kUnitSquare, Hyperplane({1, 0, 0}, 2.0)) ==
        0.0);
  CHECK(near(geom::boundary_clearance(kUnitCube, Hyperplane({0, 0, 1}, 0.3)),
             0.3, 1e-6));
  // Diagonal line through the square: the deepest point is the center.
  const double s2 = std::sqrt(2.0);
  CHECK(near(geom::boundary_clearance(kUnitSquare,
                                      Hyperplane({1 / s2, 1 / s2, 0}, 1 / s2)),
             0.5, 1e-9));
}

TEST_CASE("polytope validate flags broken inputs") {
  std::string why;
  // Not CCW.
  const auto bad =
      ConvexPolytope::polygon({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}});
  CHECK(!bad.validate(&why));
  CHECK(kUnitSquare.validate());
  CHECK(kUnitCube.validate());
}
