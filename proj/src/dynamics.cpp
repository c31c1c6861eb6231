#include "hlab/dynamics.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <stdexcept>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

struct Timed {
  double time;
  bool is_sink;
  double x;  // alpha x-coordinate, unused for sinks
};

// Alpha-points and sinks with time <= until, in time order.
std::vector<Timed> event_schedule(const Realization& r, double until) {
  std::vector<Timed> out;
  out.reserve(r.alpha_points.size() + r.sinks.size());
  for (const auto& p : r.alpha_points)
    if (p.s <= until) out.push_back({p.s, false, p.x});
  std::sort(out.begin(), out.end(),
            [](const Timed& a, const Timed& b) { return a.time < b.time; });
  std::vector<Timed> merged;
  merged.reserve(out.size() + r.sinks.size());
  auto it = out.begin();
  for (double s : r.sinks) {
    if (s > until) break;
    while (it != out.end() && it->time < s) merged.push_back(*it++);
    merged.push_back({s, true, 0.0});
  }
  merged.insert(merged.end(), it, out.end());
  for (std::size_t i = 1; i < merged.size(); ++i)
    if (!(merged[i - 1].time < merged[i].time))
      throw std::logic_error("event times are not strictly increasing");
  return merged;
}

void check_horizon(const Realization& r, double until) {
  if (!(until >= 0.0) || until > r.box.height)
    throw InvalidParameter("time outside the realization box");
}

}  // namespace

Configuration::Configuration(std::span<const double> sorted_positions)
    : data_(sorted_positions.begin(), sorted_positions.end()) {}

std::size_t Configuration::count_at_most(double x) const {
  const auto p = positions();
  return static_cast<std::size_t>(std::upper_bound(p.begin(), p.end(), x) -
                                  p.begin());
}

double Configuration::apply_alpha(double x) {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(head_);
  const auto it = std::upper_bound(first, data_.end(), x);
  if (it == data_.end()) {
    data_.push_back(x);
    return kBeyondWindow;
  }
  const double old = *it;
  *it = x;
  return old;
}

std::optional<double> Configuration::apply_sink() {
  if (empty()) return std::nullopt;
  const double old = data_[head_++];
  if (head_ > 64 && head_ * 2 > data_.size()) {
    data_.erase(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(head_));
    head_ = 0;
  }
  return old;
}

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::alpha_jump: return "alpha";
    case EventKind::birth: return "birth";
    case EventKind::sink_exit: return "sink";
    case EventKind::starved_sink: return "starved";
  }
  return "?";
}

void EventLog::write_csv(std::ostream& out) const {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "time,type,x_old,x_new\n";
  for (const auto& e : events) {
    out << e.time << ',' << to_string(e.kind) << ',';
    if (e.kind == EventKind::alpha_jump || e.kind == EventKind::sink_exit)
      out << e.x_old;
    out << ',';
    if (e.kind == EventKind::alpha_jump || e.kind == EventKind::birth ||
        e.kind == EventKind::sink_exit)
      out << e.x_new;
    out << '\n';
  }
  out.precision(old);
}

long Evolution::flux(double x) const {
  return static_cast<long>(exits + config.count_at_most(x));
}

Evolution evolve(const Realization& r, double until) {
  check_horizon(r, until);
  Evolution ev;
  ev.config = Configuration(r.sources);
  const auto schedule = event_schedule(r, until);
  ev.log.events.reserve(schedule.size());
  for (const auto& e : schedule) {
    if (e.is_sink) {
      if (auto gone = ev.config.apply_sink()) {
        ++ev.exits;
        ev.log.events.push_back({e.time, EventKind::sink_exit, *gone, 0.0});
      } else {
        ++ev.log.starved_sinks;
        ev.log.events.push_back({e.time, EventKind::starved_sink, 0.0, 0.0});
      }
    } else {
      const double old = ev.config.apply_alpha(e.x);
      const auto kind = old == kBeyondWindow ? EventKind::birth : EventKind::alpha_jump;
      ev.log.events.push_back({e.time, kind, old, e.x});
    }
    ev.config.clock = e.time;
  }
  ev.config.clock = until;
  return ev;
}

Configuration replay(std::span<const double> sources, const EventLog& log) {
  std::set<double> live(sources.begin(), sources.end());
  for (const auto& e : log.events) {
    switch (e.kind) {
      case EventKind::alpha_jump:
        if (live.erase(e.x_old) != 1)
          throw std::logic_error("replay: jumping particle not present");
        live.insert(e.x_new);
        break;
      case EventKind::birth:
        live.insert(e.x_new);
        break;
      case EventKind::sink_exit:
        if (live.erase(e.x_old) != 1)
          throw std::logic_error("replay: exiting particle not present");
        break;
      case EventKind::starved_sink:
        break;
    }
  }
  std::vector<double> pos(live.begin(), live.end());
  return Configuration(pos);
}

long flux(const Realization& r, double x, double t) {
  if (!(x >= 0.0) || x > r.box.width)
    throw InvalidParameter("x outside the realization box");
  const auto ev = evolve(r, t);
  if (ev.log.starved())
    throw StarvedRealization("a sink found the window empty");
  return ev.flux(x);
}

Crossings crossings(const Realization& r, double x, double t) {
  return crossings(r, evolve(r, t), x, t);
}

Crossings crossings(const Realization& r, const Evolution& ev, double x,
                    double t) {
  if (!(x >= 0.0) || x > r.box.width)
    throw InvalidParameter("x outside the realization box");
  if (ev.config.clock != t)
    throw InvalidParameter("evolution does not end at the query time");
  if (ev.log.starved())
    throw StarvedRealization("a sink found the window empty");
  Crossings c;
  c.south = static_cast<long>(
      std::upper_bound(r.sources.begin(), r.sources.end(), x) - r.sources.begin());
  c.north = static_cast<long>(ev.config.count_at_most(x));
  for (const auto& e : ev.log.events) {
    if (e.time > t) break;
    switch (e.kind) {
      case EventKind::sink_exit:
        ++c.west;
        if (e.x_old > x) ++c.east;
        break;
      case EventKind::alpha_jump:
      case EventKind::birth:
        if (e.x_new <= x && e.x_old > x) ++c.east;
        break;
      case EventKind::starved_sink:
        break;
    }
  }
  if (c.south + c.east != c.north + c.west)
    throw std::logic_error("crossing balance violated");
  return c;
}

double particle_location(const Evolution& ev, std::size_t k) {
  if (k == 0) throw InvalidParameter("particle index starts at 1");
  if (k <= ev.exits) return 0.0;
  const std::size_t i = k - ev.exits;
  if (i > ev.config.size()) return kBeyondWindow;
  return ev.config.positions()[i - 1];
}

double particle_location(const Realization& r, std::size_t k, double t) {
  const auto ev = evolve(r, t);
  if (ev.log.starved())
    throw StarvedRealization("a sink found the window empty");
  return particle_location(ev, k);
}

double Trajectory::at(double time) const {
  auto it = std::upper_bound(
      jumps.begin(), jumps.end(), time,
      [](double v, const std::pair<double, double>& j) { return v < j.first; });
  if (it == jumps.begin()) throw InvalidParameter("time before trajectory start");
  return std::prev(it)->second;
}

Trajectory second_class_trajectory(const Realization& r, double until,
                                   SecondClassKind kind) {
  check_horizon(r, until);
  Configuration a(r.sources);
  std::vector<double> other(r.sources);
  if (kind == SecondClassKind::normal)
    other.insert(other.begin(), 0.0);
  else if (!other.empty())
    other.erase(other.begin());
  Configuration b(other);

  // Positions held by only one of the two copies. Under the coupling at most
  // one position differs at any time.
  std::vector<double> only_a, only_b;
  auto toggle = [](std::vector<double>& mine, std::vector<double>& theirs,
                   double v, bool added) {
    // `mine` gained (added) or lost v; `theirs` is the other copy's surplus.
    auto& from = added ? theirs : mine;
    auto& to = added ? mine : theirs;
    if (auto it = std::find(from.begin(), from.end(), v); it != from.end())
      from.erase(it);
    else
      to.push_back(v);
  };
  auto change = [&](std::vector<double>& mine, std::vector<double>& theirs,
                    std::optional<double> removed, std::optional<double> added) {
    if (removed && *removed != kBeyondWindow) toggle(mine, theirs, *removed, false);
    if (added) toggle(mine, theirs, *added, true);
  };

  Trajectory traj;
  traj.kind = kind;
  traj.horizon = until;
  double start = 0.0;
  if (kind == SecondClassKind::dual)
    start = r.sources.empty() ? kBeyondWindow : r.sources.front();
  traj.jumps.push_back({0.0, start});
  if (start == kBeyondWindow) return traj;

  auto surplus = [&]() -> const std::vector<double>& {
    return kind == SecondClassKind::normal ? only_b : only_a;
  };
  if (kind == SecondClassKind::normal)
    only_b.push_back(0.0);
  else
    only_a.push_back(start);

  for (const auto& e : event_schedule(r, until)) {
    if (e.is_sink) {
      const auto ra = a.apply_sink();
      const auto rb = b.apply_sink();
      // A sink on an empty window takes a particle from beyond it. The window
      // contents stay exact; a discrepancy removed this way has jumped past
      // the window.
      change(only_a, only_b, ra, std::nullopt);
      change(only_b, only_a, rb, std::nullopt);
    } else {
      const double oa = a.apply_alpha(e.x);
      const double ob = b.apply_alpha(e.x);
      change(only_a, only_b, oa, e.x);
      change(only_b, only_a, ob, e.x);
    }
    const auto& s = surplus();
    const auto& wrong = kind == SecondClassKind::normal ? only_a : only_b;
    if (!wrong.empty() || s.size() > 1)
      throw std::logic_error("second class coupling lost its single discrepancy");
    const double pos = s.empty() ? kBeyondWindow : s.front();
    if (pos != traj.jumps.back().second) {
      if (pos < traj.jumps.back().second)
        throw std::logic_error("second class particle moved left");
      traj.jumps.push_back({e.time, pos});
    }
    if (pos == kBeyondWindow) break;
  }
  return traj;
}

double y_value(const Trajectory& traj, double t) {
  if (t > traj.horizon) throw HorizonInsufficient("trajectory ends before t");
  const double xt = traj.at(t);
  if (xt <= t) return t - xt;
  for (const auto& [time, pos] : traj.jumps)
    if (pos >= t) return time - t;
  throw std::logic_error("unreachable: X(t) > t but never reached t");
}

std::vector<std::vector<Point>> space_time_paths(const Realization& r,
                                                 double until) {
  check_horizon(r, until);
  std::vector<std::vector<Point>> paths;
  std::vector<std::pair<double, std::size_t>> live;  // sorted by position
  for (double x : r.sources) {
    live.push_back({x, paths.size()});
    paths.push_back({{x, 0.0}});
  }
  for (const auto& e : event_schedule(r, until)) {
    if (e.is_sink) {
      if (live.empty()) continue;
      auto& path = paths[live.front().second];
      path.push_back({live.front().first, e.time});
      path.push_back({0.0, e.time});
      live.erase(live.begin());
      continue;
    }
    auto it = std::upper_bound(
        live.begin(), live.end(), e.x,
        [](double v, const std::pair<double, std::size_t>& p) { return v < p.first; });
    if (it == live.end()) {
      live.push_back({e.x, paths.size()});
      paths.push_back({{r.box.width, e.time}, {e.x, e.time}});
    } else {
      auto& path = paths[it->second];
      path.push_back({it->first, e.time});
      path.push_back({e.x, e.time});
      it->first = e.x;
    }
  }
  for (const auto& [x, id] : live) paths[id].push_back({x, until});
  return paths;
}

}  // namespace hlab
