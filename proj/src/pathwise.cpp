#include "hlab/pathwise.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hlab/duality.hpp"
#include "hlab/dynamics.hpp"
#include "hlab/errors.hpp"
#include "hlab/paths.hpp"
#include "hlab/realization.hpp"

namespace hlab {

namespace {

struct Tally {
  std::size_t assertions = 0;
  std::size_t violations = 0;
  bool starved = false;

  void expect(bool ok) {
    ++assertions;
    violations += !ok;
  }
};

EstimatorReport summarize(std::string name, nlohmann::json params,
                          const std::vector<Tally>& tallies, const McOptions& opt) {
  EstimatorReport rep;
  rep.name = std::move(name);
  rep.params = std::move(params);
  rep.reps = opt.reps;
  rep.seed = opt.seed;
  rep.pathwise = true;
  std::size_t checked = 0, starved = 0, assertions = 0, violations = 0;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    const auto& t = tallies[i];
    if (t.starved) {
      ++starved;
      continue;
    }
    ++checked;
    assertions += t.assertions;
    violations += t.violations;
    if (t.violations > 0 && bad.size() < 10) bad.push_back(i);
  }
  rep.add("realizations_checked", static_cast<double>(checked));
  rep.add("starved", static_cast<double>(starved));
  rep.add("assertions", static_cast<double>(assertions));
  rep.add("violations", static_cast<double>(violations));
  for (auto i : bad) rep.notes.push_back("violation at stream_id " + std::to_string(i));
  rep.pass = violations == 0 && checked > 0;
  if (static_cast<double>(starved) > 0.01 * static_cast<double>(tallies.size())) {
    rep.pass = false;
    rep.notes.push_back("more than 1% of the draws starved");
  }
  return rep;
}

// Sorted copy of v with midpoints between consecutive entries appended.
std::vector<double> with_midpoints(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) v.push_back(0.5 * (v[i] + v[i + 1]));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> merged_positions(const Configuration& a, const Configuration& b) {
  std::vector<double> out;
  std::merge(a.positions().begin(), a.positions().end(), b.positions().begin(),
             b.positions().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

EstimatorReport flux_check(double t, double lambda, const McOptions& opt) {
  if (!(t > 0.0) || !(lambda > 0.0)) throw InvalidParameter("t and lambda must be positive");
  const Box box{window_width(t, t, lambda), t};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto r = generate({1.0, lambda}, box, opt.seed, i);
    for (double s : {0.5 * t, t}) {
      const auto ev = evolve(r, s);
      if (ev.log.starved()) {
        tally.starved = true;
        return tally;
      }
      std::vector<double> xs{0.25 * t, 0.5 * t, t, box.width};
      for (double p : ev.config.positions()) xs.push_back(p);
      for (double x : with_midpoints(xs)) {
        const auto c = crossings(r, ev, x, s);
        tally.expect(ev.flux(x) == longest_weakly_ne(r, x, s, ProfileDetail::none).length);
        tally.expect(c.south + c.east == c.north + c.west);
      }
    }
    return tally;
  });
  return summarize("flux", {{"t", t}, {"lambda", lambda}, {"window", box.width}}, tallies, opt);
}

EstimatorReport oracle_check(std::size_t max_points, const McOptions& opt) {
  if (max_points < 1 || max_points > kBruteForceCap)
    throw InvalidParameter("point cap must lie in [1, " + std::to_string(kBruteForceCap) + "]");
  const Box box{3.0, 2.0};
  const std::array<double, 3> lambdas{0.5, 1.0, 2.0};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const double lambda = lambdas[i % lambdas.size()];
    // Redraw under derived seeds until the realization is small enough; the
    // sequence depends only on (seed, i).
    Realization r;
    for (std::uint64_t k = 0;; ++k) {
      r = generate({1.0, lambda}, box, derive_seed(opt.seed, k), i);
      if (r.alpha_points.size() + r.sources.size() + r.sinks.size() <= max_points) break;
    }
    Stream pick(opt.seed, i, Purpose::pathwise_samples);
    const double x = box.width * pick.uniform_open();
    const double t = box.height * pick.uniform_open();
    for (const auto& [qx, qt] : {std::pair{box.width, box.height}, std::pair{x, t}}) {
      const auto fast = longest_weakly_ne(r, qx, qt, ProfileDetail::none);
      const auto slow = brute_force_longest(r, qx, qt);
      tally.expect(fast.length == slow.length);
      tally.expect(fast.exit_right == slow.exit_right);
      tally.expect(fast.exit_left == slow.exit_left);
    }
    return tally;
  });
  return summarize("oracle", {{"max_points", max_points}, {"box", {box.width, box.height}}},
                   tallies, opt);
}

EstimatorReport lemma41_check(double t, const McOptions& opt) {
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto base = generate({1.0, 1.0}, {t, t}, opt.seed, i);
    Stream pick(opt.seed, i, Purpose::pathwise_samples);
    const double lambda = 1.0 + 2.0 * pick.uniform_open();
    const auto thick = thicken_thin(base, lambda);
    const int l_tt = longest_weakly_ne(thick, t, t, ProfileDetail::none).length;
    const auto chain = strict_chain_profile(base.alpha_points, t, t);

    std::vector<double> zs{0.0, t};
    for (double b : chain.breaks)
      if (b >= 0.0) zs.push_back(b);
    for (double s : thick.sources)
      if (s <= t) zs.push_back(s);
    for (double z : with_midpoints(zs)) {
      const auto below = std::upper_bound(thick.sources.begin(), thick.sources.end(), z) -
                         thick.sources.begin();
      tally.expect(chain(z) <= l_tt - static_cast<int>(below));
    }
    return tally;
  });
  return summarize("lemma41", {{"t", t}, {"lambda_prime", "uniform(1,3)"}}, tallies, opt);
}

EstimatorReport coupling52_check(double t, double r, const McOptions& opt) {
  const double lambda = 1.0 - r / std::cbrt(t);
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw InvalidParameter("1 - r t^(-1/3) must lie in (0, 1)");
  const Box box{window_width(t, t, lambda), t};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto aux = independent_aux({1.0, lambda}, box, opt.seed, i);
    const auto ev = evolve(aux, t);
    if (ev.log.starved()) {
      tally.starved = true;
      return tally;
    }
    const auto bare = evolve(strip_boundaries(aux), t);
    const double dual = second_class_trajectory(aux, t, SecondClassKind::dual).at(t);
    tally.expect(static_cast<int>(bare.flux(t)) ==
                 longest_strictly_ne(aux.alpha_points, t, t));

    std::vector<double> ys{0.0};
    for (double p : merged_positions(ev.config, bare.config))
      if (p < dual) ys.push_back(p);
    long prev = ev.flux(0.0) - bare.flux(0.0);
    for (double y : ys) {
      const long d = ev.flux(y) - bare.flux(y);
      tally.expect(d <= prev);
      prev = d;
    }
    return tally;
  });
  return summarize("coupling52", {{"t", t}, {"r", r}, {"lambda", lambda}, {"window", box.width}},
                   tallies, opt);
}

EstimatorReport coupling61_check(double t, double r, const McOptions& opt) {
  const double lambda = 1.0 + r / std::cbrt(t);
  if (!(lambda > 1.0)) throw InvalidParameter("r must be positive");
  const Box box{window_width(t, t, lambda), t};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto aux = independent_aux({1.0, lambda}, box, opt.seed, i);
    const auto ev = evolve(aux, t);
    if (ev.log.starved()) {
      tally.starved = true;
      return tally;
    }
    const auto bare = evolve(strip_boundaries(aux), t);
    const double second = second_class_trajectory(aux, t, SecondClassKind::normal).at(t);
    if (second == kBeyondWindow) return tally;

    std::vector<double> xs{second};
    for (double p : merged_positions(ev.config, bare.config))
      if (p > second) xs.push_back(p);
    xs.push_back(box.width);
    long prev = ev.flux(second) - bare.flux(second);
    for (double x : xs) {
      const long d = ev.flux(x) - bare.flux(x);
      tally.expect(d >= prev);
      prev = d;
    }
    return tally;
  });
  return summarize("coupling61", {{"t", t}, {"r", r}, {"lambda", lambda}, {"window", box.width}},
                   tallies, opt);
}

EstimatorReport switch_check(double t, const McOptions& opt) {
  const Box box{window_width(t, t, 1.0), t};
  const auto k_star = static_cast<std::size_t>(std::floor(2.0 * t));
  const std::vector<double> margins{0.5, 1.0, 2.0, 4.0};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto r = generate({1.0, 1.0}, box, opt.seed, i);
    const auto ev = evolve(r, t);
    if (ev.log.starved()) {
      tally.starved = true;
      return tally;
    }
    std::vector<double> xs{box.width};
    for (double p : ev.config.positions()) xs.push_back(p);
    const std::size_t kmax = ev.exits + ev.config.size() + 1;
    for (double x : with_midpoints(xs)) {
      const long len = longest_weakly_ne(r, x, t, ProfileDetail::none).length;
      for (std::size_t k = 1; k <= kmax; ++k)
        tally.expect((particle_location(ev, k) > x) == (len < static_cast<long>(k)));
    }
    for (double m : margins) {
      if (t - m > 0.0) {
        const long len = longest_weakly_ne(r, t - m, t, ProfileDetail::none).length;
        tally.expect((particle_location(ev, k_star) <= t - m) ==
                     (len >= static_cast<long>(k_star)));
      }
      const long len = longest_weakly_ne(r, t + m, t, ProfileDetail::none).length;
      tally.expect((particle_location(ev, k_star) > t + m) ==
                   (len < static_cast<long>(k_star)));
    }

    const auto bare = evolve(strip_boundaries(r), t);
    std::vector<double> bare_xs{box.width};
    for (double p : bare.config.positions()) bare_xs.push_back(p);
    for (double x : with_midpoints(bare_xs)) {
      const int l0 = longest_strictly_ne(r.alpha_points, x, t);
      for (std::size_t k = 1; k <= bare.config.size() + 1; ++k)
        tally.expect((particle_location(bare, k) > x) == (l0 < static_cast<int>(k)));
    }
    return tally;
  });
  return summarize("switch", {{"t", t}, {"k", k_star}, {"margins", margins}}, tallies, opt);
}

EstimatorReport exit_y_check(double t, const McOptions& opt) {
  const Box box{window_width(t, t, 1.0), t};
  const auto tallies = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    Tally tally;
    const auto d = exit_equals_y_check(generate({1.0, 1.0}, box, opt.seed, i), t);
    tally.expect(d.z_matches);
    tally.expect(d.z_prime_matches);
    return tally;
  });
  auto rep = summarize("exit-y", {{"t", t}}, tallies, opt);
  const double a = rep.estimate("assertions").value;
  rep.add("equality_rate", a > 0 ? 1.0 - rep.estimate("violations").value / a : 0.0);
  return rep;
}

EstimatorReport burke_check(double x, double t, double lambda, const McOptions& opt) {
  if (!(x > 0.0) || !(t > 0.0) || !(lambda > 0.0))
    throw InvalidParameter("x, t and lambda must be positive");
  const Box box{window_width(x, t, lambda), t};
  const auto runs = mc_run(opt.reps, opt.threads, [&](std::size_t i) {
    const auto r = generate({1.0, lambda}, box, opt.seed, i);
    const auto ev = evolve(r, t);
    if (ev.log.starved()) return std::optional<Crossings>{};
    return std::optional<Crossings>{crossings(r, ev, x, t)};
  });
  std::vector<Crossings> samples;
  for (const auto& c : runs)
    if (c) samples.push_back(*c);
  const std::size_t starved = runs.size() - samples.size();
  if (static_cast<double>(starved) > 0.01 * static_cast<double>(runs.size()))
    throw StarvedRealization("more than 1% of the runs starved; enlarge the simulation window");
  auto rep = burke_statistics(samples, x, t, lambda);
  rep.seed = opt.seed;
  rep.reps = opt.reps;
  rep.params["window"] = box.width;
  rep.add("starved", static_cast<double>(starved));
  return rep;
}

}  // namespace hlab
