#include "tessellate/stats/zeta.hpp"

#include <cmath>
#include <vector>

#include "tessellate/rng.hpp"
#include "tessellate/simd/batch.hpp"

namespace tessellate::stats {
namespace {

struct Welford {
  double mean = 0.0, m2 = 0.0;
  std::size_t n = 0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double se() const {
    return n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
  }
};

}  // namespace

ZetaResult zeta_constants(const measure::DirectionalDistribution& R, int dim,
                          std::size_t n, std::uint64_t seed) {
  ZetaResult res;
  res.dim = dim;
  res.n = n;
  Rng rng(seed);
  const std::size_t chunk = 65536;

  std::vector<double> ax(chunk), ay(chunk), az(chunk);
  std::vector<double> bx(chunk), by(chunk), bz(chunk);
  std::vector<double> cx(chunk), cy(chunk), cz(chunk);
  std::vector<double> out2(chunk), out3(chunk);

  Welford w2, w3;
  std::size_t left = n;
  const auto& k = simd::kernels();
  while (left > 0) {
    const std::size_t m = std::min(left, chunk);
    for (std::size_t i = 0; i < m; ++i) {
      const geom::Vec a = R.sample(dim, rng);
      const geom::Vec b = R.sample(dim, rng);
      ax[i] = a.x;
      ay[i] = a.y;
      az[i] = a.z;
      bx[i] = b.x;
      by[i] = b.y;
      bz[i] = b.z;
      if (dim == 3) {
        const geom::Vec c = R.sample(dim, rng);
        cx[i] = c.x;
        cy[i] = c.y;
        cz[i] = c.z;
      }
    }
    if (dim == 2) {
      k.abs_det2(ax.data(), ay.data(), bx.data(), by.data(), m, out2.data());
    } else {
      k.cross_norm3(ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                    bz.data(), m, out2.data());
      k.abs_det3(ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                 bz.data(), cx.data(), cy.data(), cz.data(), m, out3.data());
    }
    for (std::size_t i = 0; i < m; ++i) {
      w2.add(out2[i]);
      if (dim == 3) w3.add(out3[i]);
    }
    left -= m;
  }

  if (dim == 2) {
    res.zeta = w2.mean;
    res.zeta_se = w2.se();
  } else {
    res.zeta2 = w2.mean;
    res.zeta2_se = w2.se();
    res.zeta3 = w3.mean;
    res.zeta3_se = w3.se();
  }
  return res;
}

}  // namespace tessellate::stats
