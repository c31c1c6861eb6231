#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "hlab/rng.hpp"

using hlab::Namespace;
using hlab::Purpose;
using hlab::Stream;

TEST_CASE("philox4x32-10 known answers") {
  using C = std::array<std::uint32_t, 4>;
  using K = std::array<std::uint32_t, 2>;
  CHECK(hlab::philox4x32(C{0, 0, 0, 0}, K{0, 0}) ==
        C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(hlab::philox4x32(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                         K{0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(hlab::philox4x32(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                         K{0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and separated by every key part") {
  auto first = [](Stream s) {
    std::vector<std::uint64_t> v;
    for (int i = 0; i < 8; ++i) v.push_back(s());
    return v;
  };
  const auto base = first(Stream(7, 3, Purpose::sources));
  CHECK(base == first(Stream(7, 3, Purpose::sources)));
  std::set<std::vector<std::uint64_t>> seen{base};
  seen.insert(first(Stream(8, 3, Purpose::sources)));
  seen.insert(first(Stream(7, 4, Purpose::sources)));
  seen.insert(first(Stream(7, 3, Purpose::sinks)));
  seen.insert(first(Stream(7, 3, Purpose::sources, Namespace::auxiliary)));
  seen.insert(first(Stream(7, 3, Purpose::sources, Namespace::base, 1)));
  CHECK(seen.size() == 6);
}

TEST_CASE("uniform_open stays inside (0,1) with the right mean") {
  Stream s(1, 0, Purpose::pathwise_samples);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // SE of the mean is sqrt(1/12 / n)
  CHECK(std::abs(sum / n - 0.5) < 3.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("exponential mean matches 1/rate") {
  Stream s(2, 0, Purpose::pathwise_samples);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += s.exponential(4.0);
  CHECK(std::abs(sum / n - 0.25) < 3.0 * 0.25 / std::sqrt(double(n)));
}

TEST_CASE("derived seeds differ per index") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(hlab::derive_seed(42, i));
  CHECK(seeds.size() == 1000);
}
