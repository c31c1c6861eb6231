#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hlab {

/// Philox4x32-10 counter-based block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// SplitMix64 finalizer. Used to fold seeds, stream ids and tags into keys.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// What a stream is used for. Distinct tags give independent streams for
/// the same (seed, stream_id).
enum class Purpose : std::uint32_t {
  alpha_points = 1,
  sources = 2,
  sinks = 3,
  thicken_sources = 4,
  thin_sinks = 5,
  pathwise_samples = 6,
};

/// Namespaces separate realizations that must be independent even when they
/// share (seed, stream_id), e.g. a base realization and an auxiliary one.
enum class Namespace : std::uint32_t { base = 0, auxiliary = 1 };

/// Keyed counter-based random stream.
///
/// The key is derived from the seed alone; the upper half of the counter
/// carries (stream_id, purpose, namespace, attempt). Output depends only on
/// these values and the number of draws, never on scheduling.
class Stream {
 public:
  using result_type = std::uint64_t;

  Stream(std::uint64_t seed, std::uint64_t stream_id, Purpose purpose,
         Namespace ns = Namespace::base, std::uint32_t attempt = 0);

  result_type operator()();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open();
  /// Exponential with the given rate (> 0).
  double exponential(double rate);
  bool bernoulli(double p);

  std::uint64_t draws() const { return counter_; }

 private:
  std::array<std::uint32_t, 2> key_{};
  std::uint64_t stream_word_ = 0;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int cached_ = 0;
};

/// Seed for grid point `index` of a sweep rooted at `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x5851F42D4C957F2DULL));
}

}  // namespace hlab
