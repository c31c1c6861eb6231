#include "hlab/rng.hpp"

#include <cmath>

namespace hlab {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53U;
constexpr std::uint32_t kMul1 = 0xCD9E8D57U;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9U;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85U;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c,
                                        std::array<std::uint32_t, 2> k) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

Stream::Stream(std::uint64_t seed, std::uint64_t stream_id, Purpose purpose,
               Namespace ns, std::uint32_t attempt) {
  const std::uint64_t k = mix64(seed);
  key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  const std::uint64_t tag = (static_cast<std::uint64_t>(ns) << 48) ^
                            (static_cast<std::uint64_t>(purpose) << 32) ^
                            attempt;
  stream_word_ = mix64(stream_id ^ mix64(tag));
}

Stream::result_type Stream::operator()() {
  if (cached_ == 0) {
    const std::uint64_t block_index = counter_ / 2;
    block_ = philox4x32({static_cast<std::uint32_t>(block_index),
                         static_cast<std::uint32_t>(block_index >> 32),
                         static_cast<std::uint32_t>(stream_word_),
                         static_cast<std::uint32_t>(stream_word_ >> 32)},
                        key_);
    cached_ = 2;
  }
  const int slot = 2 - cached_;
  --cached_;
  ++counter_;
  return (static_cast<std::uint64_t>(block_[2 * slot]) << 32) |
         block_[2 * slot + 1];
}

double Stream::uniform_open() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::exponential(double rate) { return -std::log(uniform_open()) / rate; }

bool Stream::bernoulli(double p) { return uniform_open() < p; }

}  // namespace hlab
