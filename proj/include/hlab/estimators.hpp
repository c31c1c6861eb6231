#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "hlab/report.hpp"
#include "hlab/stats.hpp"

namespace hlab {

/// Evaluates fn(i) for i in [0, reps) on `threads` workers and returns the
/// results in index order. Replication i must draw its randomness from stream
/// id i, which makes the output independent of the number of threads.
template <class Fn>
auto mc_run(std::size_t reps, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(reps);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps)));
  if (threads == 1) {
    for (std::size_t i = 0; i < reps; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < reps;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = reps;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct McOptions {
  std::size_t reps = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Width of the simulation window for second class particle runs up to time
/// t at source rate lambda: max(x, 2 t / lambda^2).
double window_width(double x, double t, double lambda);

/// Var L_lambda(x,t) against -lambda x + t/lambda + 2 lambda E(x - X_lambda(t))_+.
/// Aborts with StarvedRealization when more than 1% of the runs starve.
EstimatorReport theorem21_check(double x, double t, double lambda,
                                const McOptions& opt);

/// Var L(t,t) against 2 E Z(t)_+, plus E L(t,t) = 2t and P(Z(t) >= 0) >= 1/2.
EstimatorReport variance_exit_identity(double t, const McOptions& opt);

/// E Z(t)_+ and Var L(t,t) over a grid of t with log-log slopes. The grid
/// needs four values or more spanning a factor of at least 8.
EstimatorReport scaling_sweep(std::span<const double> t_grid, const McOptions& opt);

/// P(Z(t) > c t^{2/3}) for c in [1, t^{1/3}] on common samples.
EstimatorReport tail_profile(double t, std::span<const double> c_grid,
                             const McOptions& opt);

/// Two-sample KS report with the 0.01 threshold.
EstimatorReport distribution_equality(std::span<const double> a,
                                      std::span<const double> b,
                                      const std::string& name = "ks");

/// P(sup_{0 <= z <= eps t^{2/3}} (N(z) + A_t(z)) - A_t(0) >= level t^{1/3})
/// for every (eps, level) pair, on common samples.
EstimatorReport local_gain_probability(double t, std::span<const double> eps_grid,
                                       std::span<const double> level_grid,
                                       const McOptions& opt);

/// P(0 <= Z(t) <= eps t^{2/3}) across eps on common samples, and P(Z(t) >= 0).
EstimatorReport exit_near_zero_probability(double t, std::span<const double> eps_grid,
                                           const McOptions& opt);

/// 2t - E L_0(t,t) across t with its log-log slope.
EstimatorReport l0_mean_gap(std::span<const double> t_grid, const McOptions& opt);

/// The four distributional identities checked by KS at a single t with n
/// independent samples per side.
EstimatorReport distributional_identities(double t, const McOptions& opt);

}  // namespace hlab
