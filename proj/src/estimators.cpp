#include "hlab/estimators.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hlab/dynamics.hpp"
#include "hlab/errors.hpp"
#include "hlab/paths.hpp"
#include "hlab/realization.hpp"

namespace hlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Fraction of starved runs above which a Monte Carlo estimate is abandoned.
constexpr double kStarvationLimit = 0.01;

std::vector<double> finite_only(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v)
    if (!std::isnan(x)) out.push_back(x);
  return out;
}

void check_starvation(std::size_t starved, std::size_t reps) {
  if (static_cast<double>(starved) > kStarvationLimit * static_cast<double>(reps))
    throw StarvedRealization(
        "more than 1% of the runs starved; enlarge the simulation window");
}

void check_reps(const McOptions& opt, std::size_t minimum) {
  if (opt.reps < minimum)
    throw InvalidParameter("at least " + std::to_string(minimum) + " replications needed");
}

// Standard error of mean(f) where f is an influence function sample.
double influence_se(const std::vector<double>& f) {
  return stats::std_error(f);
}

// Exit point Z(t) and length L(t,t) of one stationary square.
struct SquareSample {
  double z = 0.0;
  double z_prime = 0.0;
  double length = 0.0;
};

SquareSample square_sample(double t, std::uint64_t seed, std::uint64_t id) {
  const auto r = generate({1.0, 1.0}, {t, t}, seed, id);
  const auto p = longest_weakly_ne(r, t, t, ProfileDetail::none);
  return {p.exit_right, p.exit_left, static_cast<double>(p.length)};
}

void require_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw InvalidParameter(std::string("empty ") + what + " grid");
  for (double v : grid)
    if (!std::isfinite(v)) throw InvalidParameter(std::string("bad ") + what + " value");
}

std::string label(const std::string& base, double v) {
  return base + "@" + format_double(v);
}

}  // namespace

double window_width(double x, double t, double lambda) {
  return std::max(x, 2.0 * t / (lambda * lambda));
}

EstimatorReport theorem21_check(double x, double t, double lambda,
                                const McOptions& opt) {
  check_reps(opt, 100);
  if (!(x > 0.0) || !(t > 0.0) || !(lambda > 0.0))
    throw InvalidParameter("x, t and lambda must be positive");
  const Box box{window_width(x, t, lambda), t};
  struct Out {
    double length = kNaN;
    double excess = kNaN;
  };
  const auto runs = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    const auto r = generate({1.0, lambda}, box, opt.seed, i);
    const auto ev = evolve(r, t);
    if (ev.log.starved()) return Out{};
    const auto traj = second_class_trajectory(r, t, SecondClassKind::normal);
    return Out{static_cast<double>(ev.flux(x)), std::max(0.0, x - traj.at(t))};
  });

  std::vector<double> len, exc;
  for (const auto& o : runs)
    if (!std::isnan(o.length)) {
      len.push_back(o.length);
      exc.push_back(o.excess);
    }
  const std::size_t starved = runs.size() - len.size();
  check_starvation(starved, runs.size());

  const double var_l = stats::variance(len);
  const double mean_l = stats::mean(len);
  const double mean_e = stats::mean(exc);
  const double rhs = -lambda * x + t / lambda + 2.0 * lambda * mean_e;
  std::vector<double> influence(len.size());
  for (std::size_t i = 0; i < len.size(); ++i)
    influence[i] = (len[i] - mean_l) * (len[i] - mean_l) - 2.0 * lambda * exc[i];

  EstimatorReport rep;
  rep.name = "thm21";
  rep.params = {{"x", x}, {"t", t}, {"lambda", lambda}, {"window", box.width}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  rep.add("var_L", var_l, stats::variance_std_error(len));
  rep.add("mean_excess", mean_e, stats::std_error(exc));
  rep.add("rhs", rhs, 2.0 * lambda * stats::std_error(exc));
  rep.add("mean_L", mean_l, stats::std_error(len));
  rep.add("starved", static_cast<double>(starved));
  rep.residual = Estimate{"var_L - rhs", var_l - rhs, influence_se(influence)};
  rep.pass = std::abs(rep.residual->value) <= 3.0 * rep.residual->se;
  rep.notes.push_back("pass when |residual| <= 3 combined SE");
  return rep;
}

EstimatorReport variance_exit_identity(double t, const McOptions& opt) {
  check_reps(opt, 100);
  if (!(t > 0.0)) throw InvalidParameter("t must be positive");
  const Box box{window_width(t, t, 1.0), t};
  struct Out {
    double length = kNaN;
    double z = kNaN;
  };
  const auto runs = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    const auto r = generate({1.0, 1.0}, box, opt.seed, i);
    const auto ev = evolve(r, t);
    if (ev.log.starved()) return Out{};
    const auto path = longest_weakly_ne(r, t, t, ProfileDetail::none);
    const long flux = ev.flux(t);
    if (flux != path.length)
      throw std::logic_error("flux differs from the longest path length");
    return Out{static_cast<double>(flux), path.exit_right};
  });

  std::vector<double> len, zplus, znonneg;
  for (const auto& o : runs)
    if (!std::isnan(o.length)) {
      len.push_back(o.length);
      zplus.push_back(std::max(0.0, o.z));
      znonneg.push_back(o.z >= 0.0 ? 1.0 : 0.0);
    }
  const std::size_t starved = runs.size() - len.size();
  check_starvation(starved, runs.size());

  const double var_l = stats::variance(len);
  const double mean_l = stats::mean(len);
  const double mean_z = stats::mean(zplus);
  std::vector<double> influence(len.size());
  for (std::size_t i = 0; i < len.size(); ++i)
    influence[i] = (len[i] - mean_l) * (len[i] - mean_l) - 2.0 * zplus[i];
  const auto nonneg = stats::proportion(
      static_cast<std::size_t>(stats::mean(znonneg) * znonneg.size() + 0.5),
      znonneg.size());

  EstimatorReport rep;
  rep.name = "var-exit";
  rep.params = {{"t", t}, {"window", box.width}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  rep.add("var_L", var_l, stats::variance_std_error(len));
  rep.add("two_mean_Z_plus", 2.0 * mean_z, 2.0 * stats::std_error(zplus));
  rep.add("mean_L", mean_l, stats::std_error(len));
  rep.add("P_Z_nonneg", nonneg.p, nonneg.se);
  rep.add("starved", static_cast<double>(starved));
  rep.residual = Estimate{"var_L - 2 E Z_+", var_l - 2.0 * mean_z, influence_se(influence)};

  const bool identity = std::abs(rep.residual->value) <= 3.0 * rep.residual->se;
  const bool mean_ok =
      std::abs(mean_l - 2.0 * t) <= 3.0 * rep.estimate("mean_L").se;
  const bool half_ok = nonneg.p >= 0.5 - 3.0 * nonneg.se;
  if (!identity) rep.notes.push_back("variance identity outside 3 SE");
  if (!mean_ok) rep.notes.push_back("mean L(t,t) differs from 2t by more than 3 SE");
  if (!half_ok) rep.notes.push_back("P(Z >= 0) below 1/2 - 3 SE");
  rep.pass = identity && mean_ok && half_ok;
  return rep;
}

EstimatorReport scaling_sweep(std::span<const double> t_grid, const McOptions& opt) {
  require_grid(t_grid, "t");
  check_reps(opt, 2);
  const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
  if (t_grid.size() < 4 || !(*lo > 0.0) || *hi < 8.0 * *lo)
    throw InvalidParameter("scaling grid needs 4 or more t values spanning a factor of 8");

  EstimatorReport rep;
  rep.name = "scaling";
  rep.params = {{"t_grid", std::vector<double>(t_grid.begin(), t_grid.end())}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  std::vector<double> ts, ez, ez_se, vl, vl_se;
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const double t = t_grid[g];
    const std::uint64_t seed = derive_seed(opt.seed, g);
    const auto runs = mc_run(opt.reps, opt.threads,
                             [&](std::size_t i) { return square_sample(t, seed, i); });
    std::vector<double> zplus, len;
    for (const auto& s : runs) {
      zplus.push_back(std::max(0.0, s.z));
      len.push_back(s.length);
    }
    ts.push_back(t);
    ez.push_back(stats::mean(zplus));
    ez_se.push_back(stats::std_error(zplus));
    vl.push_back(stats::variance(len));
    vl_se.push_back(stats::variance_std_error(len));
    const double scale = std::pow(t, 2.0 / 3.0);
    rep.rows.push_back({"EZ_plus", t, ez.back(), ez_se.back(), opt.reps, seed});
    rep.rows.push_back({"var_L", t, vl.back(), vl_se.back(), opt.reps, seed});
    rep.rows.push_back({"EZ_plus_over_t23", t, ez.back() / scale, ez_se.back() / scale,
                        opt.reps, seed});
  }
  const auto fit_z = stats::fit_power_law(ts, ez, ez_se);
  const auto fit_v = stats::fit_power_law(ts, vl, vl_se);
  rep.add("slope_EZ_plus", fit_z.slope, fit_z.slope_se);
  rep.add("slope_var_L", fit_v.slope, fit_v.slope_se);

  bool var_trend = true;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (vl[i] < vl[i - 1] - 3.0 * std::hypot(vl_se[i], vl_se[i - 1])) var_trend = false;
  if (!var_trend) rep.notes.push_back("Var L(t,t) decreases by more than 3 SE somewhere on the grid");
  rep.pass = fit_z.slope >= 0.55 && fit_z.slope <= 0.80;
  rep.notes.push_back("pass when the E Z_+ log-log slope lies in [0.55, 0.80]");
  return rep;
}

EstimatorReport tail_profile(double t, std::span<const double> c_grid,
                             const McOptions& opt) {
  require_grid(c_grid, "c");
  check_reps(opt, 2);
  const double cmax = std::cbrt(t);
  for (double c : c_grid)
    if (c < 1.0 || c > cmax * (1.0 + 1e-12))
      throw InvalidParameter("c must lie in [1, t^(1/3)]");

  const auto runs = mc_run(opt.reps, opt.threads,
                           [&](std::size_t i) { return square_sample(t, opt.seed, i); });
  const double scale = std::pow(t, 2.0 / 3.0);
  EstimatorReport rep;
  rep.name = "tail";
  rep.params = {{"t", t}, {"c_grid", std::vector<double>(c_grid.begin(), c_grid.end())}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;

  std::vector<double> cs, ps, ses, upper;
  std::vector<std::size_t> hits_by_c;
  for (double c : c_grid) {
    std::size_t hits = 0;
    for (const auto& s : runs) hits += s.z > c * scale;
    const auto p = stats::proportion(hits, runs.size());
    hits_by_c.push_back(hits);
    rep.rows.push_back({"P_Z_gt_c_t23", c, p.p, p.se, opt.reps, opt.seed});
    cs.push_back(c);
    ps.push_back(p.p);
    ses.push_back(p.se);
    upper.push_back(hits > 0 ? p.p : stats::zero_hit_upper_bound(runs.size(), 0.95));
  }
  bool monotone = true;
  for (std::size_t i = 0; i < c_grid.size(); ++i)
    for (std::size_t j = 0; j < c_grid.size(); ++j)
      if (c_grid[i] < c_grid[j] && hits_by_c[i] < hits_by_c[j]) monotone = false;
  rep.add("monotone", monotone ? 1.0 : 0.0);

  // With every tail observed the slope is a weighted log-log fit. A tail with
  // no hits is replaced by its one-sided 95% upper bound; when all such c lie
  // above the geometric mean of the grid the ordinary least squares slope
  // through the bounds is an upper bound for the slope itself.
  const bool all_observed =
      std::find(hits_by_c.begin(), hits_by_c.end(), 0) == hits_by_c.end();
  bool slope_ok = false;
  if (c_grid.size() < 2) {
    rep.notes.push_back("slope needs two c values or more");
  } else if (all_observed) {
    const auto fit = stats::fit_power_law(cs, ps, ses);
    rep.add("slope", fit.slope, fit.slope_se);
    slope_ok = fit.slope <= -2.0;
  } else {
    double log_mean = 0.0;
    for (double c : cs) log_mean += std::log(c);
    log_mean /= static_cast<double>(cs.size());
    bool bound_valid = true;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (hits_by_c[i] == 0 && std::log(cs[i]) <= log_mean) bound_valid = false;
    const auto fit = stats::fit_power_law(cs, upper, {});
    rep.add("slope_upper_95", fit.slope);
    if (bound_valid) {
      slope_ok = fit.slope <= -2.0;
      rep.notes.push_back(
          "a tail had no hits; slope bounded above using the 95% upper bound for it");
    } else {
      rep.notes.push_back("a tail below the grid's geometric mean had no hits; slope undetermined");
    }
  }
  rep.pass = monotone && slope_ok;
  rep.notes.push_back("pass when tails are monotone in c and the log-log slope is <= -2");
  return rep;
}

EstimatorReport distribution_equality(std::span<const double> a,
                                      std::span<const double> b,
                                      const std::string& name) {
  const auto ks = stats::ks_two_sample(a, b);
  EstimatorReport rep;
  rep.name = name;
  rep.params = {{"n", ks.n}, {"m", ks.m}};
  rep.reps = std::min(ks.n, ks.m);
  rep.add("D", ks.statistic);
  rep.add("p_value", ks.p_value);
  rep.pass = ks.p_value > 0.01;
  rep.notes.push_back("pass when p > 0.01");
  return rep;
}

EstimatorReport local_gain_probability(double t, std::span<const double> eps_grid,
                                       std::span<const double> level_grid,
                                       const McOptions& opt) {
  require_grid(eps_grid, "eps");
  require_grid(level_grid, "level");
  check_reps(opt, 2);
  for (double e : eps_grid)
    if (e < 0.0) throw InvalidParameter("eps must be nonnegative");
  const double scale = std::pow(t, 2.0 / 3.0);
  const double unit = std::cbrt(t);

  // gains[i][k] = sup over [0, eps_k t^{2/3}] of N + A_t minus A_t(0)
  const auto gains = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    const auto r = generate({1.0, 1.0}, {t, t}, opt.seed, i);
    const auto p = longest_weakly_ne(r, t, t, ProfileDetail::full);
    const int a0 = p.chain(0.0);
    std::vector<int> g;
    for (double e : eps_grid) g.push_back(p.total.max_on(0.0, std::min(t, e * scale)) - a0);
    return g;
  });

  EstimatorReport rep;
  rep.name = "local-gain";
  rep.params = {{"t", t},
                {"eps_grid", std::vector<double>(eps_grid.begin(), eps_grid.end())},
                {"level_grid", std::vector<double>(level_grid.begin(), level_grid.end())}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  std::vector<std::vector<std::size_t>> hits(level_grid.size(),
                                             std::vector<std::size_t>(eps_grid.size()));
  for (std::size_t l = 0; l < level_grid.size(); ++l)
    for (std::size_t k = 0; k < eps_grid.size(); ++k) {
      for (const auto& g : gains) hits[l][k] += g[k] >= level_grid[l] * unit;
      const auto p = stats::proportion(hits[l][k], gains.size());
      rep.rows.push_back({label("P_gain_level", level_grid[l]), eps_grid[k], p.p, p.se,
                          opt.reps, opt.seed});
    }
  bool monotone = true;
  for (std::size_t l = 0; l < level_grid.size(); ++l)
    for (std::size_t k = 0; k < eps_grid.size(); ++k)
      for (std::size_t m = 0; m < eps_grid.size(); ++m)
        if (eps_grid[k] < eps_grid[m] && hits[l][k] > hits[l][m]) monotone = false;
  bool decreasing_in_level = true;
  for (std::size_t k = 0; k < eps_grid.size(); ++k)
    for (std::size_t l = 0; l < level_grid.size(); ++l)
      for (std::size_t m = 0; m < level_grid.size(); ++m)
        if (level_grid[l] < level_grid[m] && hits[l][k] < hits[m][k])
          decreasing_in_level = false;
  rep.add("monotone_in_eps", monotone ? 1.0 : 0.0);
  rep.add("monotone_in_level", decreasing_in_level ? 1.0 : 0.0);
  rep.pass = monotone && decreasing_in_level;
  return rep;
}

EstimatorReport exit_near_zero_probability(double t, std::span<const double> eps_grid,
                                           const McOptions& opt) {
  require_grid(eps_grid, "eps");
  check_reps(opt, 2);
  const auto runs = mc_run(opt.reps, opt.threads,
                           [&](std::size_t i) { return square_sample(t, opt.seed, i); });
  const double scale = std::pow(t, 2.0 / 3.0);
  EstimatorReport rep;
  rep.name = "exit-near-zero";
  rep.params = {{"t", t}, {"eps_grid", std::vector<double>(eps_grid.begin(), eps_grid.end())}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;

  std::vector<std::pair<double, std::size_t>> by_eps;
  for (double e : eps_grid) {
    std::size_t hits = 0;
    for (const auto& s : runs) hits += s.z >= 0.0 && s.z <= e * scale;
    const auto p = stats::proportion(hits, runs.size());
    rep.rows.push_back({"P_Z_in_0_eps_t23", e, p.p, p.se, opt.reps, opt.seed});
    by_eps.push_back({e, hits});
  }
  std::size_t nonneg = 0;
  for (const auto& s : runs) nonneg += s.z >= 0.0;
  const auto half = stats::proportion(nonneg, runs.size());
  rep.add("P_Z_nonneg", half.p, half.se);

  std::sort(by_eps.begin(), by_eps.end());
  bool strictly = true;
  for (std::size_t i = 1; i < by_eps.size(); ++i) {
    if (by_eps[i].first == by_eps[i - 1].first) continue;
    if (by_eps[i].second <= by_eps[i - 1].second) strictly = false;
  }
  rep.add("strictly_increasing", strictly ? 1.0 : 0.0);
  const bool half_ok = half.p >= 0.5 - 3.0 * half.se;
  rep.pass = strictly && half_ok;
  rep.notes.push_back("pass when the estimates increase strictly in eps and P(Z >= 0) >= 1/2 - 3 SE");
  return rep;
}

EstimatorReport l0_mean_gap(std::span<const double> t_grid, const McOptions& opt) {
  require_grid(t_grid, "t");
  check_reps(opt, 2);
  if (t_grid.size() < 2) throw InvalidParameter("gap slope needs two t values or more");
  EstimatorReport rep;
  rep.name = "l0-gap";
  rep.params = {{"t_grid", std::vector<double>(t_grid.begin(), t_grid.end())}};
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  std::vector<double> ts, gaps, ses;
  bool positive = true;
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const double t = t_grid[g];
    if (!(t > 0.0)) throw InvalidParameter("t must be positive");
    const std::uint64_t seed = derive_seed(opt.seed, g);
    const auto l0 = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
      const auto r = generate({1.0, 1.0}, {t, t}, seed, i);
      return static_cast<double>(longest_strictly_ne(r.alpha_points, t, t));
    });
    const double gap = 2.0 * t - stats::mean(l0);
    const double se = stats::std_error(l0);
    rep.rows.push_back({"gap_2t_minus_EL0", t, gap, se, opt.reps, seed});
    positive = positive && gap - 3.0 * se > 0.0;
    ts.push_back(t);
    gaps.push_back(gap);
    ses.push_back(se);
  }
  bool slope_ok = false;
  if (positive) {
    const auto fit = stats::fit_power_law(ts, gaps, ses);
    rep.add("slope", fit.slope, fit.slope_se);
    slope_ok = fit.slope < 0.5;
  } else {
    rep.notes.push_back("a gap is not positive at 3 SE; slope not estimated");
  }
  rep.pass = positive && slope_ok;
  rep.notes.push_back("pass when every gap exceeds 3 SE and the log-log slope is < 0.5");
  return rep;
}

EstimatorReport distributional_identities(double t, const McOptions& opt) {
  check_reps(opt, 2);
  const std::size_t n = opt.reps;
  auto sample = [&](std::uint64_t stream_seed, auto&& fn) {
    return finite_only(mc_run(n, opt.threads, [&](std::size_t i) { return fn(stream_seed, i); }));
  };
  std::vector<EstimatorReport> parts;
  std::uint64_t next = 0;
  auto seed_for = [&] { return derive_seed(opt.seed, next++); };

  // Z(t) against -Z'(t)
  {
    const auto za = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      return square_sample(t, s, i).z;
    });
    const auto zb = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      return -square_sample(t, s, i).z_prime;
    });
    parts.push_back(distribution_equality(za, zb, "Z_vs_neg_Z_prime"));
  }
  // lambda X_lambda(t) against X(t / lambda) at lambda = 2; both windows map
  // to the same rescaled width so escapes compare like for like.
  {
    constexpr double lambda = 2.0;
    const double width = 4.0 * t / lambda;
    auto position = [](const Realization& r, double until) {
      if (evolve(r, until).log.starved()) return kNaN;
      return second_class_trajectory(r, until, SecondClassKind::normal).at(until);
    };
    const auto xa = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      const auto r = generate({1.0, lambda}, {width / lambda, t}, s, i);
      return lambda * position(r, t);
    });
    const auto xb = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      const auto r = generate({1.0, 1.0}, {width, t / lambda}, s, i);
      return position(r, t / lambda);
    });
    check_starvation(2 * n - xa.size() - xb.size(), 2 * n);
    parts.push_back(distribution_equality(xa, xb, "lambda_X_lambda_vs_X_rescaled"));
  }
  // Z(t) against Y(t) on independent runs
  {
    const auto za = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      return square_sample(t, s, i).z;
    });
    const auto ya = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      const auto r = generate({1.0, 1.0}, {window_width(t, t, 1.0), t}, s, i);
      if (evolve(r, t).log.starved()) return kNaN;
      return y_value(second_class_trajectory(r, t, SecondClassKind::normal), t);
    });
    check_starvation(n - ya.size(), n);
    parts.push_back(distribution_equality(za, ya, "Z_vs_Y"));
  }
  // A_t(0) - A_t(z) against L_0(t,t) - L_0(t - z, t) at z = t/2
  {
    const double z = 0.5 * t;
    const auto da = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      const auto r = generate({1.0, 1.0}, {t, t}, s, i);
      const auto a = strict_chain_profile(r.alpha_points, t, t);
      return static_cast<double>(a(0.0) - a(z));
    });
    const auto db = sample(seed_for(), [&](std::uint64_t s, std::size_t i) {
      const auto r = generate({1.0, 1.0}, {t, t}, s, i);
      return static_cast<double>(longest_strictly_ne(r.alpha_points, t, t) -
                                 longest_strictly_ne(r.alpha_points, t - z, t));
    });
    parts.push_back(distribution_equality(da, db, "A_gain_vs_L0_gain"));
  }

  EstimatorReport rep;
  rep.name = "distributional";
  rep.params = {{"t", t}, {"samples_per_side", n}, {"z", 0.5 * t}};
  rep.reps = n;
  rep.seed = opt.seed;
  rep.pass = true;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    rep.add("D_" + p.name, p.estimate("D").value);
    rep.add("p_" + p.name, p.estimate("p_value").value);
    rep.rows.push_back({"ks_p_" + p.name, static_cast<double>(k),
                        p.estimate("p_value").value, 0.0, n, derive_seed(opt.seed, 2 * k)});
    rep.pass = rep.pass && p.pass;
  }
  rep.notes.push_back("four KS tests at level 0.01 each; Bonferroni family level 0.04");
  return rep;
}

}  // namespace hlab
