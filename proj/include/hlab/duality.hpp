#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hlab/dynamics.hpp"
#include "hlab/realization.hpp"
#include "hlab/report.hpp"

namespace hlab {

/// Point reflection of [0,t]^2 through (t/2, t/2).
///
/// Alpha-points (u, s) become (t - u, t - s). The particles at time t (North
/// crossings) become the sources and the times at which paths enter through
/// the line x = t (East crossings) become the sinks. The result lives on the
/// box (t, t) with the intensities and seed provenance of r.
///
/// A sink that found the window empty took a particle from beyond it; that
/// path crosses the square from East to West and becomes a sink as well.
/// Throws InvalidParameter if [0,t]^2 is not inside the box.
Realization reflect(const Realization& r, double t);

struct ExitDuality {
  double z = 0.0;        ///< Z(t) of r
  double z_prime = 0.0;  ///< Z'(t) of r
  double y = 0.0;        ///< Y(t) of reflect(r, t)
  double y_prime = 0.0;  ///< Y'(t) of reflect(r, t)
  bool z_matches = false;
  bool z_prime_matches = false;
};

void to_json(nlohmann::json& j, const ExitDuality& d);

/// Computes both pairs and compares them with a relative tolerance of 1e-9.
ExitDuality exit_equals_y_check(const Realization& r, double t);

/// Sample moments of the four crossing counts at a fixed (x, t, lambda):
/// N against Poisson(lambda x), E against Poisson(t / lambda), and the
/// correlations of (N, E) and (S, W) against zero. Needs two samples or more.
EstimatorReport burke_statistics(std::span<const Crossings> samples, double x,
                                 double t, double lambda);

}  // namespace hlab
