#include "hlab/duality.hpp"

#include <algorithm>
#include <cmath>

#include "hlab/errors.hpp"
#include "hlab/paths.hpp"
#include "hlab/stats.hpp"

namespace hlab {

Realization reflect(const Realization& r, double t) {
  if (!(t > 0.0) || t > r.box.width || t > r.box.height)
    throw InvalidParameter("reflection square [0,t]^2 must lie inside the box");
  const auto ev = evolve(r, t);

  Realization out;
  out.box = {t, t};
  out.intensities = r.intensities;
  out.seed = r.seed;
  out.stream_id = r.stream_id;

  // Every path inside the square turns at most once per event. A turn at
  // (x_old, s) with x_old <= t is a corner of the picture and becomes an
  // alpha-point of the reflected process; a path that enters through x = t
  // becomes a sink of the reflected process.
  for (const auto& e : ev.log.events) {
    switch (e.kind) {
      case EventKind::alpha_jump:
      case EventKind::sink_exit:
        if (e.x_old <= t)
          out.alpha_points.push_back({t - e.x_old, t - e.time});
        else if (e.kind == EventKind::sink_exit || e.x_new <= t)
          out.sinks.push_back(t - e.time);
        break;
      case EventKind::birth:
        if (e.x_new <= t) out.sinks.push_back(t - e.time);
        break;
      case EventKind::starved_sink:
        // the sink took a particle from beyond the window: the path crosses
        // the whole square
        out.sinks.push_back(t - e.time);
        break;
    }
  }
  for (double u : ev.config.positions()) {
    if (u > t) break;
    out.sources.push_back(t - u);
  }
  std::sort(out.alpha_points.begin(), out.alpha_points.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  std::sort(out.sources.begin(), out.sources.end());
  std::sort(out.sinks.begin(), out.sinks.end());
  out.validate();
  return out;
}

void to_json(nlohmann::json& j, const ExitDuality& d) {
  j = {{"Z", d.z},
       {"Z_prime", d.z_prime},
       {"Y", d.y},
       {"Y_prime", d.y_prime},
       {"Z_matches", d.z_matches},
       {"Z_prime_matches", d.z_prime_matches}};
}

ExitDuality exit_equals_y_check(const Realization& r, double t) {
  const auto path = longest_weakly_ne(r, t, t, ProfileDetail::none);
  const auto mirror = reflect(r, t);
  ExitDuality d;
  d.z = path.exit_right;
  d.z_prime = path.exit_left;
  d.y = y_value(second_class_trajectory(mirror, t, SecondClassKind::normal), t);
  d.y_prime = y_value(second_class_trajectory(mirror, t, SecondClassKind::dual), t);
  const double tol = 1e-9 * (1.0 + t);
  d.z_matches = std::abs(d.z - d.y) <= tol;
  d.z_prime_matches = std::abs(d.z_prime - d.y_prime) <= tol;
  return d;
}

EstimatorReport burke_statistics(std::span<const Crossings> samples, double x,
                                 double t, double lambda) {
  if (samples.size() < 2) throw InvalidParameter("need at least two samples");
  std::vector<double> n, e, s, w;
  for (const auto& c : samples) {
    n.push_back(static_cast<double>(c.north));
    e.push_back(static_cast<double>(c.east));
    s.push_back(static_cast<double>(c.south));
    w.push_back(static_cast<double>(c.west));
  }
  EstimatorReport rep;
  rep.name = "burke";
  rep.params = {{"x", x}, {"t", t}, {"lambda", lambda}};
  rep.reps = samples.size();
  rep.add("mean_N", stats::mean(n), stats::std_error(n));
  rep.add("var_N", stats::variance(n), stats::variance_std_error(n));
  rep.add("mean_E", stats::mean(e), stats::std_error(e));
  rep.add("var_E", stats::variance(e), stats::variance_std_error(e));
  rep.add("expected_N", lambda * x);
  rep.add("expected_E", t / lambda);

  bool pass = true;
  auto within = [&](const std::string& key, double target) {
    const auto& est = rep.estimate(key);
    const bool ok = std::abs(est.value - target) <= 3.0 * est.se;
    if (!ok) rep.notes.push_back(key + " outside 3 SE");
    pass = pass && ok;
  };
  within("mean_N", lambda * x);
  within("var_N", lambda * x);
  within("mean_E", t / lambda);
  within("var_E", t / lambda);
  if (samples.size() >= 3) {
    const auto ne = stats::correlation(n, e);
    const auto sw = stats::correlation(s, w);
    rep.add("corr_NE", ne.r, ne.se);
    rep.add("corr_SW", sw.r, sw.se);
    within("corr_NE", 0.0);
    within("corr_SW", 0.0);
  }
  rep.pass = pass;
  return rep;
}

}  // namespace hlab
