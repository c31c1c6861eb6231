#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/rng.hpp"

namespace hlab {

/// Rates of the three driving Poisson processes. The sink rate is always the
/// reciprocal of the source rate.
struct Intensities {
  double alpha = 1.0;
  double lambda = 1.0;

  double source_rate() const { return lambda; }
  double sink_rate() const { return 1.0 / lambda; }

  void validate() const;
  bool operator==(const Intensities&) const = default;
};

/// Space-time window (0, width] x (0, height].
struct Box {
  double width = 0.0;
  double height = 0.0;

  void validate() const;
  bool operator==(const Box&) const = default;
};

struct Point {
  double x = 0.0;  ///< space coordinate
  double s = 0.0;  ///< time coordinate

  bool operator==(const Point&) const = default;
};

/// One draw of alpha-points, sources and sinks.
///
/// alpha_points are kept sorted by x. sources and sinks are strictly
/// increasing. No two x-coordinates (alpha-points and sources jointly) and no
/// two time coordinates (alpha-points and sinks jointly) coincide.
struct Realization {
  Box box;
  Intensities intensities;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::vector<Point> alpha_points;
  std::vector<double> sources;
  std::vector<double> sinks;

  /// Throws InvalidParameter or FormatError when an invariant is broken.
  void validate() const;
  bool in_general_position() const;

  bool operator==(const Realization&) const = default;
};

Realization generate(const Intensities& intensities, const Box& box,
                     std::uint64_t seed, std::uint64_t stream_id);

/// Same law as generate(), drawn from a stream namespace disjoint from every
/// base realization.
Realization independent_aux(const Intensities& intensities, const Box& box,
                            std::uint64_t seed, std::uint64_t stream_id);

/// Monotone coupling to a stationary process with source rate
/// lambda_prime >= base.lambda: sources gain an independent Poisson layer of
/// rate lambda_prime - lambda, each sink survives with probability
/// lambda / lambda_prime. Alpha-points are shared.
Realization thicken_thin(const Realization& base, double lambda_prime);

/// Same alpha-points, no sources, no sinks.
Realization strip_boundaries(const Realization& r);

/// Subset of r inside (0, width] x (0, height].
Realization restrict_to(const Realization& r, const Box& box);

void to_json(nlohmann::json& j, const Realization& r);
void from_json(const nlohmann::json& j, Realization& r);

Realization load_realization(const std::string& path);
void save_realization(const Realization& r, const std::string& path);

}  // namespace hlab
