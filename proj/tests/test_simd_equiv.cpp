#include <doctest.h>

#include <cstring>
#include <vector>

#include "tessellate/rng.hpp"
#include "tessellate/simd/batch.hpp"

using namespace tessellate;

namespace {

std::vector<double> randoms(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

// The AVX2 variants must reproduce the scalar reference bit for bit; the
// kernels are written mul-then-add with per-element reductions so this is
// an exact property, not a tolerance check.
TEST_CASE("simd kernels match scalar bit-exactly") {
  if (!simd::avx2_supported()) {
    MESSAGE("AVX2 not available; skipping equivalence checks");
    return;
  }
  Rng rng(2024);
  const auto& sc = simd::scalar_kernels;
  const auto& vx = simd::avx2_kernels;

  for (int round = 0; round < 20; ++round) {
    const std::size_t nv = 1 + rng.index(40);
    const std::size_t nd = 1 + rng.index(300);
    const auto xs = randoms(rng, nv, -30, 30);
    const auto ys = randoms(rng, nv, -30, 30);
    const auto zs = randoms(rng, nv, -30, 30);
    const auto ux = randoms(rng, nd, -1, 1);
    const auto uy = randoms(rng, nd, -1, 1);
    const auto uz = randoms(rng, nd, -1, 1);

    std::vector<double> a(nv), b(nv);
    sc.signed_distance2(xs.data(), ys.data(), nv, 0.3, -0.7, 1.25, a.data());
    vx.signed_distance2(xs.data(), ys.data(), nv, 0.3, -0.7, 1.25, b.data());
    CHECK(bit_equal(a, b));

    sc.signed_distance3(xs.data(), ys.data(), zs.data(), nv, 0.3, -0.7, 0.64,
                        1.25, a.data());
    vx.signed_distance3(xs.data(), ys.data(), zs.data(), nv, 0.3, -0.7, 0.64,
                        1.25, b.data());
    CHECK(bit_equal(a, b));

    std::vector<double> wa(nd), wb(nd);
    sc.width2(xs.data(), ys.data(), nv, ux.data(), uy.data(), nd, wa.data());
    vx.width2(xs.data(), ys.data(), nv, ux.data(), uy.data(), nd, wb.data());
    CHECK(bit_equal(wa, wb));

    sc.width3(xs.data(), ys.data(), zs.data(), nv, ux.data(), uy.data(),
              uz.data(), nd, wa.data());
    vx.width3(xs.data(), ys.data(), zs.data(), nv, ux.data(), uy.data(),
              uz.data(), nd, wb.data());
    CHECK(bit_equal(wa, wb));

    const std::size_t n = nd;
    const auto c1 = randoms(rng, n, -1, 1);
    const auto c2 = randoms(rng, n, -1, 1);
    const auto c3 = randoms(rng, n, -1, 1);
    std::vector<double> da(n), db(n);
    sc.abs_det2(ux.data(), uy.data(), c1.data(), c2.data(), n, da.data());
    vx.abs_det2(ux.data(), uy.data(), c1.data(), c2.data(), n, db.data());
    CHECK(bit_equal(da, db));

    sc.abs_det3(ux.data(), uy.data(), uz.data(), c1.data(), c2.data(),
                c3.data(), c1.data(), c3.data(), c2.data(), n, da.data());
    vx.abs_det3(ux.data(), uy.data(), uz.data(), c1.data(), c2.data(),
                c3.data(), c1.data(), c3.data(), c2.data(), n, db.data());
    CHECK(bit_equal(da, db));

    sc.cross_norm3(ux.data(), uy.data(), uz.data(), c1.data(), c2.data(),
                   c3.data(), n, da.data());
    vx.cross_norm3(ux.data(), uy.data(), uz.data(), c1.data(), c2.data(),
                   c3.data(), n, db.data());
    CHECK(bit_equal(da, db));
  }
}

TEST_CASE("simd dispatch level control") {
  const simd::Level initial = simd::active_level();
  simd::set_level(simd::Level::Scalar);
  CHECK(simd::active_level() == simd::Level::Scalar);
  CHECK(&simd::kernels() == &simd::scalar_kernels);
  if (simd::avx2_supported()) {
    simd::set_level(simd::Level::Avx2);
    CHECK(&simd::kernels() == &simd::avx2_kernels);
  } else {
    CHECK_THROWS(simd::set_level(simd::Level::Avx2));
  }
  simd::set_level(initial);
}
