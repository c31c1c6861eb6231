#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "hlab/errors.hpp"
#include "hlab/paths.hpp"
#include "hlab/realization.hpp"

using namespace hlab;

TEST_CASE("source/sink profile on the fixture") {
  const auto r = testing::fixture_a();
  const auto n = source_sink_profile(r, 2.0);
  CHECK(n(0.4) == 0);
  CHECK(n(0.5) == 1);
  CHECK(n(2.0) == 2);
  CHECK(n(-1.0) == 1);
  CHECK(n(-0.9) == 0);
  CHECK(n.lo() == -2.0);
  CHECK(n.hi() == 2.0);
  const auto e = source_sink_profile(testing::empty_realization(), 2.0);
  for (double z : {-2.0, -0.3, 0.0, 1.7, 2.0}) CHECK(e(z) == 0);
}

TEST_CASE("strict chain profile on the fixture") {
  const auto r = testing::fixture_a();
  const auto a = strict_chain_profile(r.alpha_points, 2.0, 2.0);
  CHECK(a(0.0) == 1);
  CHECK(a(0.99) == 1);
  CHECK(a(1.0) == 0);
  CHECK(a(2.0) == 0);
  CHECK(a(-0.49) == 1);
  CHECK(a(-0.5) == 0);
  CHECK(a(-2.0) == 0);
  const auto none = strict_chain_profile({}, 2.0, 2.0);
  CHECK(none(0.0) == 0);
  CHECK(none(-1.0) == 0);
}

TEST_CASE("longest weakly NE path on the fixture") {
  // N + A equals 2 on [0.5, 1.0) and at [1.5, 2]; the closure of the
  // maximizer set reaches 2.0 on the right.
  const auto p = longest_weakly_ne(testing::fixture_a(), 2.0, 2.0);
  CHECK(p.length == 2);
  CHECK(p.exit_right == 2.0);
  CHECK(p.exit_left == 0.5);
  CHECK(p.total(0.5) == 2);
  CHECK(p.total(1.2) == 1);
  CHECK(p.total(1.5) == 2);
  CHECK(p.total(-0.2) == 1);

  const auto b = brute_force_longest(testing::fixture_a(), 2.0, 2.0);
  CHECK(b.length == 2);
  CHECK(b.exit_right == 2.0);
  CHECK(b.exit_left == 0.5);
}

TEST_CASE("empty and single point realizations") {
  const auto e = longest_weakly_ne(testing::empty_realization(3.0), 3.0, 3.0);
  CHECK(e.length == 0);
  CHECK(e.exit_right == 3.0);
  CHECK(e.exit_left == -3.0);
  const auto be = brute_force_longest(testing::empty_realization(3.0), 3.0, 3.0);
  CHECK(be.length == 0);
  CHECK(be.exit_right == 3.0);
  CHECK(be.exit_left == -3.0);

  auto one = testing::empty_realization(2.0);
  one.alpha_points = {{0.7, 1.1}};
  const auto p = longest_weakly_ne(one, 2.0, 2.0);
  CHECK(p.length == 1);
  CHECK(p.exit_right >= 0.0);
  CHECK(p.exit_right == doctest::Approx(0.7));
  CHECK(p.exit_left == doctest::Approx(-1.1));
}

TEST_CASE("L0 examples") {
  CHECK(longest_strictly_ne(testing::fixture_a().alpha_points, 2.0, 2.0) == 1);
  CHECK(longest_strictly_ne({}, 2.0, 2.0) == 0);
  std::vector<Point> chain;
  for (int i = 1; i <= 5; ++i) chain.push_back({i / 10.0, i / 10.0});
  CHECK(longest_strictly_ne(chain, 1.0, 1.0) == 5);
  CHECK(longest_strictly_ne(chain, 0.35, 1.0) == 3);
  std::vector<Point> anti{{0.1, 0.5}, {0.2, 0.4}, {0.3, 0.3}};
  CHECK(longest_strictly_ne(anti, 1.0, 1.0) == 1);
}

TEST_CASE("sweep agrees with the exhaustive oracle") {
  int checked = 0;
  for (std::uint64_t id = 0; checked < 1000; ++id) {
    const auto r = generate({1.0, 1.0}, {2.0, 1.5}, 2024, id);
    if (r.alpha_points.size() + r.sources.size() + r.sinks.size() > kBruteForceCap) continue;
    ++checked;
    for (const auto& [x, t] : {std::pair{2.0, 1.5}, std::pair{1.3, 0.9}}) {
      const auto fast = longest_weakly_ne(r, x, t, ProfileDetail::none);
      const auto slow = brute_force_longest(r, x, t);
      REQUIRE(fast.length == slow.length);
      REQUIRE(fast.exit_right == slow.exit_right);
      REQUIRE(fast.exit_left == slow.exit_left);
    }
  }
}

TEST_CASE("oracle refuses large inputs") {
  const auto r = generate({1.0, 1.0}, {8.0, 8.0}, 1, 0);
  REQUIRE(r.alpha_points.size() > kBruteForceCap);
  CHECK_THROWS_AS(brute_force_longest(r, 8.0, 8.0), SizeCapExceeded);
}

TEST_CASE("structural properties on random realizations") {
  for (std::uint64_t id = 0; id < 300; ++id) {
    const auto r = generate({1.0, 1.3}, {6.0, 6.0}, 77, id);
    const auto p = longest_weakly_ne(r, 6.0, 6.0);
    REQUIRE(p.exit_left <= p.exit_right);
    REQUIRE(p.length >= p.boundary(6.0));
    REQUIRE(p.length >= p.boundary(-6.0));
    REQUIRE(p.length >= p.chain(0.0));
    // A_t grows towards z = 0 from both sides
    for (std::size_t i = 0; i + 1 < p.chain.pieces.size(); ++i) {
      if (p.chain.breaks[i + 1] <= 0.0)
        REQUIRE(p.chain.pieces[i] <= p.chain.pieces[i + 1]);
      else if (p.chain.breaks[i + 1] > 0.0 && p.chain.breaks[i] >= 0.0)
        REQUIRE(p.chain.pieces[i] >= p.chain.pieces[i + 1]);
    }
    REQUIRE(p.chain(0.0) == longest_strictly_ne(r.alpha_points, 6.0, 6.0));

    int prev = 0;
    for (double x : {1.0, 2.5, 4.0, 6.0}) {
      const int l = longest_weakly_ne(r, x, 6.0, ProfileDetail::none).length;
      REQUIRE(l >= prev);
      prev = l;
    }
    prev = 0;
    for (double t : {1.0, 2.5, 4.0, 6.0}) {
      const int l = longest_weakly_ne(r, 6.0, t, ProfileDetail::none).length;
      REQUIRE(l >= prev);
      prev = l;
    }
  }
}

TEST_CASE("queries outside the box are rejected") {
  const auto r = testing::fixture_a();
  CHECK_THROWS_AS(longest_weakly_ne(r, 3.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(longest_weakly_ne(r, 1.0, 2.5), InvalidParameter);
}

TEST_CASE("profile CSV lists vertices") {
  const auto p = longest_weakly_ne(testing::fixture_a(), 2.0, 2.0);
  std::ostringstream out;
  p.total.write_csv(out);
  const auto s = out.str();
  CHECK(s.rfind("z,value\n", 0) == 0);
  CHECK(s.find("0.5,2") != std::string::npos);
}
