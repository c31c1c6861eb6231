#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kPass = 0,
  kStatisticalFail = 2,
  kInvariantFail = 3,
  kUsage = 64,
};

/// Everything a run depends on. Serialized into the manifest so that a run
/// can be repeated from the manifest alone.
struct RunRequest {
  std::string command;  ///< simulate | check | sweep
  std::string kind;     ///< identity or sweep name; empty for simulate
  std::optional<double> t;
  std::optional<double> x;
  double lambda = 1.0;
  double r = 0.5;  ///< coupling offset, lambda = 1 -+ r t^{-1/3}
  std::size_t reps = 1000;
  std::uint64_t seed = 1;
  std::uint64_t stream_id = 0;  ///< simulate only
  std::vector<double> grid;
  std::vector<double> levels{0.5, 1.0, 2.0};
  std::string input;  ///< realization JSON for simulate
  std::string out_dir = ".";
  unsigned threads = 1;
  std::string format = "json";
};

/// Parameters that change results; threads and out_dir are excluded.
nlohmann::json request_to_json(const RunRequest& req);
RunRequest request_from_json(const nlohmann::json& j);

/// Runs a request, writes its outputs and manifest into req.out_dir and
/// returns the exit code. Messages go to `log`.
int execute(const RunRequest& req, std::ostream& log);

/// Reads a manifest and repeats the run with the given threads and output
/// directory.
int replay(const std::string& manifest_path, unsigned threads,
           const std::string& out_dir, std::ostream& log);

/// Name of the main result file of a request, relative to out_dir.
std::string result_file(const RunRequest& req);
std::string manifest_file(const RunRequest& req);

int run_cli(int argc, char** argv);

}  // namespace hlab::cli
