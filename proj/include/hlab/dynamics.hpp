#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hlab/realization.hpp"

namespace hlab {

inline constexpr double kBeyondWindow = std::numeric_limits<double>::infinity();

/// Sorted particle positions of the Hammersley process inside the window.
///
/// An alpha-point at x moves the nearest particle to the right of x onto x;
/// this never changes the order, so positions live in a plain sorted vector
/// and the leftmost particle is popped by advancing a head index.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::span<const double> sorted_positions);

  std::span<const double> positions() const {
    return {data_.data() + head_, data_.size() - head_};
  }
  std::size_t size() const { return data_.size() - head_; }
  bool empty() const { return size() == 0; }
  std::size_t count_at_most(double x) const;

  /// Returns the old position of the particle that moved, or kBeyondWindow
  /// when the particle enters from outside the window (a birth).
  double apply_alpha(double x);
  /// Removes the leftmost particle and returns its position; nullopt when
  /// the window is empty.
  std::optional<double> apply_sink();

  double clock = 0.0;

 private:
  std::vector<double> data_;
  std::size_t head_ = 0;
};

enum class EventKind { alpha_jump, birth, sink_exit, starved_sink };

const char* to_string(EventKind k);

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::alpha_jump;
  double x_old = 0.0;  ///< position before the event (kBeyondWindow for births)
  double x_new = 0.0;  ///< position after the event (0 for exits)
};

struct EventLog {
  std::vector<Event> events;
  std::size_t starved_sinks = 0;

  bool starved() const { return starved_sinks > 0; }
  /// time,type,x_old,x_new
  void write_csv(std::ostream& out) const;
};

struct Evolution {
  Configuration config;
  EventLog log;
  std::size_t exits = 0;  ///< sinks that removed a particle

  /// L(x, t) at the evolved time: exits plus particles in [0, x].
  long flux(double x) const;
};

/// Runs the process from the sources through every alpha-point and sink with
/// time <= until. Events are totally ordered by time.
Evolution evolve(const Realization& r, double until);

/// Replays a log on top of the sources without using the process rules.
Configuration replay(std::span<const double> sources, const EventLog& log);

/// Sinks in [0, t] plus particles in [0, x] at time t. Throws
/// StarvedRealization when a sink found the window empty.
long flux(const Realization& r, double x, double t);

/// Crossings of the sides of [0, x] x [0, t] by space-time paths.
struct Crossings {
  long north = 0;
  long east = 0;
  long south = 0;
  long west = 0;
};

/// south and west are counted from the data, north from the configuration at
/// time t and east by tracing which events bring a path across x = const.
/// Throws std::logic_error if south + east != north + west.
Crossings crossings(const Realization& r, double x, double t);
Crossings crossings(const Realization& r, const Evolution& ev, double x, double t);

/// Position at time t of the particle that started as the k-th source
/// (k >= 1). Particles that left through a sink sit at 0; a particle that was
/// never inside the window reports kBeyondWindow.
double particle_location(const Realization& r, std::size_t k, double t);
double particle_location(const Evolution& ev, std::size_t k);

enum class SecondClassKind { normal, dual };

/// Piecewise-constant, right-continuous path of a (dual) second class
/// particle. A value of kBeyondWindow means the particle has left the window
/// to the right and stays there.
struct Trajectory {
  SecondClassKind kind = SecondClassKind::normal;
  double horizon = 0.0;
  std::vector<std::pair<double, double>> jumps;  ///< (time, new position)

  double at(double time) const;
  bool escaped() const { return jumps.back().second == kBeyondWindow; }
};

/// Runs r and a copy with an extra particle at 0 (normal) or without the
/// first source (dual) on the same alpha-points and sinks, and records the
/// single position where the two configurations differ. A sink that finds a
/// copy empty removes a particle from beyond the window, so a discrepancy can
/// leave through a sink as well as to the right.
Trajectory second_class_trajectory(const Realization& r, double until,
                                   SecondClassKind kind);

/// Y(t) = t - X(t) if X(t) <= t, else inf{s : X(s) >= t} - t.
double y_value(const Trajectory& traj, double t);

/// Space-time paths of all particles up to `until`, as polylines of (x, s)
/// vertices, for plotting. Paths entering from the right start at the window
/// edge; paths leaving through a sink end on the time axis.
std::vector<std::vector<Point>> space_time_paths(const Realization& r,
                                                 double until);

}  // namespace hlab
