#include <doctest.h>

#include <stdexcept>

#include "hlab/errors.hpp"
#include "hlab/estimators.hpp"
#include "hlab/pathwise.hpp"
#include "hlab/rng.hpp"

using namespace hlab;

TEST_CASE("mc_run output does not depend on the thread count") {
  auto fn = [](std::size_t i) { return Stream(3, i, Purpose::pathwise_samples).uniform_open(); };
  CHECK(mc_run(257, 1, fn) == mc_run(257, 8, fn));
  CHECK_THROWS_AS(mc_run(50, 4,
                         [](std::size_t i) -> int {
                           if (i == 17) throw std::runtime_error("boom");
                           return 0;
                         }),
                  std::runtime_error);
}

TEST_CASE("window width") {
  CHECK(window_width(5.0, 2.0, 1.0) == 5.0);
  CHECK(window_width(1.0, 2.0, 0.5) == 16.0);
}

TEST_CASE("estimator argument checks") {
  const McOptions opt{200, 1, 1};
  CHECK_THROWS_AS(theorem21_check(-1.0, 1.0, 1.0, opt), InvalidParameter);
  CHECK_THROWS_AS(theorem21_check(1.0, 1.0, 1.0, {10, 1, 1}), InvalidParameter);
  const std::vector<double> short_grid{10, 20, 40};
  CHECK_THROWS_AS(scaling_sweep(short_grid, opt), InvalidParameter);
  const std::vector<double> narrow{10, 11, 12, 13};
  CHECK_THROWS_AS(scaling_sweep(narrow, opt), InvalidParameter);
  const std::vector<double> bad_c{0.5, 1.0};
  CHECK_THROWS_AS(tail_profile(8.0, bad_c, opt), InvalidParameter);
  const std::vector<double> empty;
  CHECK_THROWS_AS(exit_near_zero_probability(8.0, empty, opt), InvalidParameter);
  CHECK_THROWS_AS(coupling52_check(1.0, 2.0, opt), InvalidParameter);
  CHECK_THROWS_AS(coupling61_check(8.0, -1.0, opt), InvalidParameter);
}

TEST_CASE("small identity checks pass") {
  const McOptions opt{400, 11, 2};
  CHECK(theorem21_check(5.0, 5.0, 1.0, opt).pass);
  CHECK(variance_exit_identity(5.0, opt).pass);
  for (const auto& rep : {lemma41_check(5.0, opt), coupling52_check(5.0, 0.5, opt),
                          coupling61_check(5.0, 0.5, opt), switch_check(5.0, opt),
                          exit_y_check(5.0, opt)}) {
    CAPTURE(rep.name);
    CHECK(rep.pass);
    CHECK(rep.pathwise);
    CHECK(rep.estimate("violations").value == 0.0);
    CHECK(rep.estimate("assertions").value > 0.0);
  }
}

TEST_CASE("sweeps report monotone estimates") {
  const McOptions opt{500, 4, 2};
  const std::vector<double> eps{0.1, 0.3, 0.9};
  const auto near = exit_near_zero_probability(27.0, eps, opt);
  CHECK(near.estimate("strictly_increasing").value == 1.0);
  CHECK(near.rows.size() >= eps.size());

  const std::vector<double> c{1.0, 1.5, 2.0};
  const auto tail = tail_profile(27.0, c, opt);
  CHECK(tail.estimate("monotone").value == 1.0);

  const std::vector<double> levels{0.5, 1.0};
  const auto gain = local_gain_probability(27.0, eps, levels, opt);
  CHECK(gain.estimate("monotone_in_eps").value == 1.0);
  CHECK(gain.estimate("monotone_in_level").value == 1.0);
}

TEST_CASE("reports are reproducible across thread counts") {
  const McOptions one{300, 9, 1}, many{300, 9, 8};
  const nlohmann::json a = variance_exit_identity(6.0, one);
  const nlohmann::json b = variance_exit_identity(6.0, many);
  CHECK(a.dump() == b.dump());
}
