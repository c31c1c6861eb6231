#pragma once

#include <span>
#include <vector>

namespace hlab::stats {

double mean(std::span<const double> v);
/// Unbiased sample variance.
double variance(std::span<const double> v);
double std_error(std::span<const double> v);
/// Normal-approximation standard error of the sample variance,
/// sqrt((m4 - s^4) / n).
double variance_std_error(std::span<const double> v);

struct Correlation {
  double r = 0.0;
  double se = 0.0;  ///< (1 - r^2) / sqrt(n - 1)
};
Correlation correlation(std::span<const double> a, std::span<const double> b);

/// Proportion of successes with binomial standard error.
struct Proportion {
  double p = 0.0;
  double se = 0.0;
  std::size_t hits = 0;
  std::size_t n = 0;
};
Proportion proportion(std::size_t hits, std::size_t n);

/// One-sided upper confidence bound for a probability when none of n trials
/// hit: 1 - (1 - level)^(1/n).
double zero_hit_upper_bound(std::size_t n, double level);

/// Upper tail of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_sf(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  std::size_t m = 0;
};
/// Two-sample Kolmogorov-Smirnov test; ties across samples are handled by
/// evaluating both empirical CDFs after each distinct value. p-value from the
/// asymptotic law at lambda = (sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) * D with
/// ne = n m / (n + m).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
};
/// Weighted least squares y = a + b x with weights 1 / sigma^2. Empty sigma
/// means ordinary least squares. Needs at least two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> sigma = {});

/// log-log fit of (x, y > 0) with y standard errors propagated to log y.
LineFit fit_power_law(std::span<const double> x, std::span<const double> y,
                      std::span<const double> y_se);

}  // namespace hlab::stats
