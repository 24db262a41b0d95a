#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tessellate::stats {

/// Regularized lower/upper incomplete gamma functions P(a,x), Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Survival function of the chi-squared distribution with k dof.
double chi2_sf(double x, double k);

/// Regularized incomplete beta I_x(a, b); the CDF of Beta(a, b).
double beta_inc(double a, double b, double x);
inline double beta_cdf(double a, double b, double x) {
  return beta_inc(a, b, x);
}

/// Kolmogorov distribution survival function Q_KS(lambda).
double kolmogorov_sf(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

/// One-sample Kolmogorov-Smirnov against a CDF.
KsResult ks_test(std::vector<double> values,
                 const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov.
KsResult ks_test_2s(std::vector<double> a, std::vector<double> b);

struct Chi2Result {
  double statistic = 0.0;
  double p_value = 1.0;
  int dof = 0;
};

/// Pearson chi-squared goodness of fit for binned counts.
Chi2Result chi2_gof(const std::vector<double>& observed,
                    const std::vector<double>& expected);

}  // namespace tessellate::stats
