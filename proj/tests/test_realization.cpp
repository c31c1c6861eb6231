#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>

#include "fixtures.hpp"
#include "hlab/errors.hpp"
#include "hlab/realization.hpp"
#include "hlab/stats.hpp"

using namespace hlab;

TEST_CASE("generate is deterministic and stays in the box") {
  const auto a = generate({1.0, 1.0}, {2.0, 2.0}, 7, 0);
  const auto b = generate({1.0, 1.0}, {2.0, 2.0}, 7, 0);
  CHECK(a == b);
  CHECK_FALSE(a == generate({1.0, 1.0}, {2.0, 2.0}, 7, 1));
  for (std::uint64_t id = 0; id < 200; ++id) {
    const auto r = generate({1.0, 1.0}, {2.0, 2.0}, 11, id);
    for (const auto& p : r.alpha_points) {
      REQUIRE(p.x > 0.0);
      REQUIRE(p.x <= 2.0);
      REQUIRE(p.s > 0.0);
      REQUIRE(p.s <= 2.0);
    }
    REQUIRE(r.in_general_position());
    REQUIRE_NOTHROW(r.validate());
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(generate({1.0, 1.0}, {0.0, 2.0}, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(generate({1.0, 1.0}, {2.0, -1.0}, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(generate({0.0, 1.0}, {2.0, 2.0}, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(generate({1.0, 0.0}, {2.0, 2.0}, 1, 0), InvalidParameter);
  const Intensities in{1.0, 4.0};
  CHECK(in.sink_rate() == 0.25);
}

TEST_CASE("Poisson counts have the right means and variances") {
  const std::size_t n = 100000;
  std::vector<double> src(n), snk(n), alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = generate({1.0, 1.0}, {10.0, 10.0}, 3, i);
    src[i] = double(r.sources.size());
    snk[i] = double(r.sinks.size());
    alpha[i] = double(r.alpha_points.size());
  }
  CHECK(std::abs(stats::mean(src) - 10.0) <= 3.0 * stats::std_error(src));
  CHECK(std::abs(stats::mean(snk) - 10.0) <= 3.0 * stats::std_error(snk));
  CHECK(std::abs(stats::mean(alpha) - 100.0) <= 3.0 * stats::std_error(alpha));
  CHECK(std::abs(stats::variance(src) - 10.0) <= 3.0 * stats::variance_std_error(src));
}

TEST_CASE("sink intensity follows 1/lambda") {
  const std::size_t n = 20000;
  std::vector<double> snk(n);
  for (std::size_t i = 0; i < n; ++i)
    snk[i] = double(generate({1.0, 2.0}, {10.0, 10.0}, 5, i).sinks.size());
  CHECK(std::abs(stats::mean(snk) - 5.0) <= 3.0 * stats::std_error(snk));
}

TEST_CASE("thicken_thin couples monotonically") {
  const auto base = generate({1.0, 1.0}, {10.0, 10.0}, 9, 0);
  CHECK(thicken_thin(base, 1.0) == base);
  CHECK_THROWS_AS(thicken_thin(base, 0.5), InvalidParameter);

  const std::size_t n = 20000;
  std::vector<double> extra(n), kept(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = generate({1.0, 1.0}, {10.0, 10.0}, 9, i);
    const auto th = thicken_thin(b, 2.0);
    REQUIRE(std::includes(th.sources.begin(), th.sources.end(), b.sources.begin(),
                          b.sources.end()));
    REQUIRE(std::includes(b.sinks.begin(), b.sinks.end(), th.sinks.begin(),
                          th.sinks.end()));
    REQUIRE(th.alpha_points == b.alpha_points);
    REQUIRE(th.intensities.lambda == 2.0);
    extra[i] = double(th.sources.size() - b.sources.size());
    kept[i] = double(th.sinks.size());
  }
  CHECK(std::abs(stats::mean(extra) - 10.0) <= 3.0 * stats::std_error(extra));
  CHECK(std::abs(stats::mean(kept) - 5.0) <= 3.0 * stats::std_error(kept));
}

TEST_CASE("independent_aux is independent of the base draw") {
  const Box box{3.0, 3.0};
  CHECK_FALSE(independent_aux({1.0, 1.0}, box, 4, 0) == generate({1.0, 1.0}, box, 4, 0));
  const std::size_t n = 10000;
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = double(generate({1.0, 1.0}, box, 4, i).alpha_points.size());
    b[i] = double(independent_aux({1.0, 1.0}, box, 4, i).alpha_points.size());
  }
  const auto c = stats::correlation(a, b);
  CHECK(std::abs(c.r) <= 3.0 * c.se);
  CHECK(std::abs(stats::mean(b) - 9.0) <= 3.0 * stats::std_error(b));
}

TEST_CASE("strip_boundaries keeps only alpha-points") {
  const auto a = testing::fixture_a();
  const auto s = strip_boundaries(a);
  CHECK(s.sources.empty());
  CHECK(s.sinks.empty());
  CHECK(s.alpha_points == std::vector<Point>{{1.0, 0.5}});
  CHECK(strip_boundaries(s) == s);
  const auto r = generate({1.0, 1.0}, {5.0, 5.0}, 1, 2);
  CHECK(strip_boundaries(r).alpha_points.size() == r.alpha_points.size());
}

TEST_CASE("realization JSON round trip is exact") {
  const auto r = generate({1.0, 1.5}, {4.0, 3.0}, 123, 45);
  const nlohmann::json j = r;
  CHECK(j.get<Realization>() == r);
  const auto path = std::filesystem::temp_directory_path() / "hlab_roundtrip.json";
  save_realization(r, path.string());
  CHECK(load_realization(path.string()) == r);
  std::filesystem::remove(path);

  auto bad = j;
  bad["sources"] = {1.0, 1.0};
  CHECK_THROWS_AS(bad.get<Realization>(), FormatError);
  bad = j;
  bad["alpha_points"] = {{5.0, 1.0}};
  CHECK_THROWS_AS(bad.get<Realization>(), FormatError);
  bad = j;
  bad.erase("box");
  CHECK_THROWS_AS(bad.get<Realization>(), FormatError);
}

TEST_CASE("general position detects shared coordinates") {
  auto r = testing::fixture_a();
  CHECK(r.in_general_position());
  r.sources = {0.5, 1.0};  // shares x with the alpha-point
  CHECK_FALSE(r.in_general_position());
  CHECK_THROWS_AS(r.validate(), FormatError);
}
