#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hlab {

struct Estimate {
  std::string name;
  double value = 0.0;
  double se = 0.0;
};

/// One line of a sweep table.
struct SweepRow {
  std::string quantity;
  double parameter = 0.0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo summary. Replication i of a report with seed s uses the
/// realization stream (s, i) unless a row carries its own seed.
struct EstimatorReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<Estimate> estimates;
  std::optional<Estimate> residual;  ///< lhs - rhs with combined standard error
  bool pass = false;
  bool pathwise = false;  ///< failures are invariant violations, not statistics
  std::vector<std::string> notes;
  std::vector<SweepRow> rows;

  const Estimate& estimate(const std::string& name) const;
  void add(std::string name, double value, double se = 0.0);
};

void to_json(nlohmann::json& j, const EstimatorReport& r);

/// quantity,parameter,estimate,stderr,reps,seed
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace hlab
