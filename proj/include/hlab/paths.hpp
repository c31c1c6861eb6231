#pragma once

#include <span>

#include <json.hpp>

#include "hlab/profile.hpp"
#include "hlab/realization.hpp"

namespace hlab {

/// Longest weakly North-East path from (0,0) to (x,t).
///
/// exit_right is the supremum and exit_left the infimum of the set of z in
/// [-t, x] where boundary(z) + chain(z) attains length. Positive z is an exit
/// on the space axis after the sources in [0,z], negative z an exit on the
/// time axis after the sinks in [0,|z|].
struct PathResult {
  int length = 0;
  double exit_right = 0.0;
  double exit_left = 0.0;
  double x = 0.0;
  double t = 0.0;

  /// Filled only with ProfileDetail::full.
  StepProfile boundary;  ///< N(z)
  StepProfile chain;     ///< A_t(z)
  StepProfile total;     ///< N(z) + A_t(z)
};

enum class ProfileDetail { none, full };

void to_json(nlohmann::json& j, const PathResult& p);

/// N(z) on [-t, x]: sources in [0, z] for z >= 0, sinks in [0, |z|] otherwise.
StepProfile source_sink_profile(const Realization& r, double x, double t);
inline StepProfile source_sink_profile(const Realization& r, double t) {
  return source_sink_profile(r, r.box.width, t);
}

/// A_t(z) on [-t, x]: longest strictly NE chain of alpha-points ending by
/// (x, t) that starts after (z, 0) (z >= 0) or after (0, |z|) (z < 0).
/// Two patience sweeps, O(n log n).
StepProfile strict_chain_profile(std::span<const Point> alpha_points, double x,
                                 double t);

PathResult longest_weakly_ne(const Realization& r, double x, double t,
                             ProfileDetail detail = ProfileDetail::full);

/// L_0(x, t): longest chain strictly increasing in both coordinates among
/// alpha-points in (0, x] x (0, t].
int longest_strictly_ne(std::span<const Point> alpha_points, double x,
                        double t);

struct BruteForceResult {
  int length = 0;
  double exit_right = 0.0;
  double exit_left = 0.0;
};

/// Exhaustive oracle: enumerates every chain of alpha-points as a subset and
/// evaluates N + A on every elementary interval. At most `kBruteForceCap`
/// points in total.
inline constexpr std::size_t kBruteForceCap = 20;
BruteForceResult brute_force_longest(const Realization& r, double x, double t);

}  // namespace hlab
