#pragma once

#include "hlab/estimators.hpp"

namespace hlab {

/// Per-realization assertions over opt.reps coupled draws at time t. Each
/// report counts the realizations checked, the assertions evaluated and the
/// violations found; it passes only with zero violations. Starved draws are
/// skipped and counted.

/// Flux from the particle dynamics equals the longest weakly NE path length
/// and the crossings balance, at times t/2 and t and at every particle
/// position, the midpoints between them and a few fixed x.
EstimatorReport flux_check(double t, double lambda, const McOptions& opt);

/// The sweep and the exhaustive oracle agree on (L, Z, Z') for realizations
/// of at most max_points points, at lambda cycling through {1/2, 1, 2}, at the
/// full box corner and one uniformly drawn corner.
EstimatorReport oracle_check(std::size_t max_points, const McOptions& opt);

/// A_t(z) <= L_lambda(t,t) - L_lambda(z,0) for z in [0, t], with the sources
/// thickened and the sinks thinned to lambda' drawn uniformly in [1, 3].
EstimatorReport lemma41_check(double t, const McOptions& opt);

/// For x < y < X'_lambda(t):
/// L_lambda(y,t) - L_lambda(x,t) <= L_0(y,t) - L_0(x,t), with
/// lambda = 1 - r t^{-1/3} and L_0 the process on the same alpha-points
/// without sources or sinks.
EstimatorReport coupling52_check(double t, double r, const McOptions& opt);

/// For y >= x > X_lambda(t):
/// L_0(y,t) - L_0(x,t) <= L_lambda(y,t) - L_lambda(x,t), lambda = 1 + r t^{-1/3}.
EstimatorReport coupling61_check(double t, double r, const McOptions& opt);

/// z_t(k) > x iff L(x,t) < k, with z_t from the particle dynamics and L from
/// the longest path sweep; the complementary form z_t(k) <= x iff
/// L(x,t) >= k at k = [2t], x = t -+ M; and the same relation for the process
/// without sources or sinks against L_0.
EstimatorReport switch_check(double t, const McOptions& opt);

/// Z(t) = Y(t) and Z'(t) = Y'(t) of the reflected realization.
EstimatorReport exit_y_check(double t, const McOptions& opt);

/// Crossing counts of [0,x] x [0,t] against their Poisson marginals.
EstimatorReport burke_check(double x, double t, double lambda, const McOptions& opt);

}  // namespace hlab
