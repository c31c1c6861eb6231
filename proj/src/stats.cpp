#include "hlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hlab/errors.hpp"

namespace hlab::stats {

namespace {

void need(std::size_t n, std::size_t k) {
  if (n < k) throw InvalidParameter("not enough samples");
}

}  // namespace

double mean(std::span<const double> v) {
  need(v.size(), 1);
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
  need(v.size(), 2);
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double std_error(std::span<const double> v) {
  return std::sqrt(variance(v) / static_cast<double>(v.size()));
}

double variance_std_error(std::span<const double> v) {
  need(v.size(), 2);
  const double m = mean(v);
  double m2 = 0.0, m4 = 0.0;
  for (double x : v) {
    const double d2 = (x - m) * (x - m);
    m2 += d2;
    m4 += d2 * d2;
  }
  const double n = static_cast<double>(v.size());
  m2 /= n;
  m4 /= n;
  return std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
}

Correlation correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidParameter("sample sizes differ");
  need(a.size(), 3);
  const double ma = mean(a), mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  Correlation c;
  c.r = (saa > 0.0 && sbb > 0.0) ? sab / std::sqrt(saa * sbb) : 0.0;
  c.se = (1.0 - c.r * c.r) / std::sqrt(static_cast<double>(a.size() - 1));
  return c;
}

Proportion proportion(std::size_t hits, std::size_t n) {
  need(n, 1);
  Proportion p;
  p.hits = hits;
  p.n = n;
  p.p = static_cast<double>(hits) / static_cast<double>(n);
  p.se = std::sqrt(p.p * (1.0 - p.p) / static_cast<double>(n));
  return p;
}

double zero_hit_upper_bound(std::size_t n, double level) {
  need(n, 1);
  if (!(level > 0.0 && level < 1.0)) throw InvalidParameter("level must lie in (0, 1)");
  return -std::expm1(std::log1p(-level) / static_cast<double>(n));
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // CDF via the theta-function form, fast for small lambda
    const double w = -pi * pi / (8.0 * lambda * lambda);
    double cdf = 0.0;
    for (int k = 1; k <= 40; k += 2) cdf += std::exp(w * k * k);
    cdf *= std::sqrt(2.0 * pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-300) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidParameter("KS test needs two non-empty samples");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double n = static_cast<double>(sa.size());
  const double m = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  KsResult out;
  out.statistic = d;
  out.n = sa.size();
  out.m = sb.size();
  const double ne = std::sqrt(n * m / (n + m));
  out.p_value = kolmogorov_sf((ne + 0.12 + 0.11 / ne) * d);
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> sigma) {
  if (x.size() != y.size() || (!sigma.empty() && sigma.size() != x.size()))
    throw InvalidParameter("fit_line: size mismatch");
  need(x.size(), 2);
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = sigma.empty() ? 1.0 : 1.0 / (sigma[i] * sigma[i]);
    sw += w;
    sx += w * x[i];
    sy += w * y[i];
  }
  const double xbar = sx / sw, ybar = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = sigma.empty() ? 1.0 : 1.0 / (sigma[i] * sigma[i]);
    sxx += w * (x[i] - xbar) * (x[i] - xbar);
    sxy += w * (x[i] - xbar) * (y[i] - ybar);
  }
  if (!(sxx > 0.0)) throw InvalidParameter("fit_line: x values are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = ybar - f.slope * xbar;
  if (!sigma.empty()) {
    f.slope_se = std::sqrt(1.0 / sxx);
  } else if (x.size() > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - f.intercept - f.slope * x[i];
      rss += e * e;
    }
    f.slope_se = std::sqrt(rss / static_cast<double>(x.size() - 2) / sxx);
  }
  return f;
}

LineFit fit_power_law(std::span<const double> x, std::span<const double> y,
                      std::span<const double> y_se) {
  std::vector<double> lx, ly, ls;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidParameter("power-law fit needs positive values");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
    if (!y_se.empty()) ls.push_back(std::max(y_se[i] / y[i], 1e-12));
  }
  return fit_line(lx, ly, ls);
}

}  // namespace hlab::stats
