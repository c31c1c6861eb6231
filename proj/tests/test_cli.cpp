#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "hlab/realization.hpp"

namespace fs = std::filesystem;
using namespace hlab::cli;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "hamlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hlab_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  const auto dir = fresh_dir("usage").string();
  CHECK(run({"check", "thm21", "--out-dir", dir}) == kUsage);
  CHECK(run({"check", "nonsense", "--t", "2", "--out-dir", dir}) == kUsage);
  CHECK(run({"sweep", "tail", "--t", "8", "--out-dir", dir}) == kUsage);
  CHECK(run({"check", "var-exit", "--t", "2", "--format", "xml", "--out-dir", dir}) == kUsage);
  CHECK(run({"check", "var-exit", "--t", "-2", "--out-dir", dir}) == kUsage);
  CHECK(run({"sweep", "scaling", "--grid", "1,x", "--out-dir", dir}) == kUsage);
  CHECK(run({"frobnicate"}) == kUsage);
}

TEST_CASE("a passing check exits with 0 and writes a manifest") {
  const auto dir = fresh_dir("pass");
  CHECK(run({"check", "exit-y", "--t", "4", "--reps", "50", "--out-dir", dir.string()}) ==
        kPass);
  const auto report = nlohmann::json::parse(slurp(dir / "check-exit-y.json"));
  CHECK(report["pass"] == true);
  const auto manifest = nlohmann::json::parse(slurp(dir / "check-exit-y.manifest.json"));
  CHECK(manifest["exit_code"] == 0);
  CHECK(manifest["request"]["t"] == 4.0);
  CHECK(manifest["tool_version"] == kToolVersion);

  CHECK(run({"check", "exit-y", "--t", "4", "--reps", "50", "--format", "csv", "--out-dir",
             dir.string()}) == kPass);
  CHECK(slurp(dir / "check-exit-y.csv").rfind("quantity,parameter,estimate,stderr,reps,seed\n",
                                              0) == 0);
}

TEST_CASE("simulate is deterministic and accepts a realization file") {
  const auto a = fresh_dir("sim_a"), b = fresh_dir("sim_b");
  for (const auto& d : {a, b})
    CHECK(run({"simulate", "--t", "3", "--seed", "5", "--stream-id", "2", "--out-dir",
               d.string()}) == kPass);
  for (const char* f : {"simulate.realization.json", "simulate.events.csv",
                        "simulate.paths.csv", "simulate.path.json"}) {
    CAPTURE(f);
    CHECK(slurp(a / f) == slurp(b / f));
  }
  CHECK(hlab::load_realization((a / "simulate.realization.json").string()) ==
        hlab::generate({1.0, 1.0}, {6.0, 3.0}, 5, 2));

  const auto fx = fresh_dir("sim_fixture");
  hlab::save_realization(hlab::testing::fixture_a(), (fx / "a.json").string());
  CHECK(run({"simulate", "--t", "2", "--input", (fx / "a.json").string(), "--out-dir",
             fx.string()}) == kPass);
  const auto path = nlohmann::json::parse(slurp(fx / "simulate.path.json"));
  CHECK(path["L"] == 2);
  CHECK(path["Z"] == 2.0);
  CHECK(slurp(fx / "simulate.events.csv") ==
        "time,type,x_old,x_new\n0.5,alpha,1.5,1\n1,sink,0.5,0\n");

  CHECK(run({"simulate", "--t", "2", "--input", (fx / "missing.json").string(), "--out-dir",
             fx.string()}) == kUsage);
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto dir = fresh_dir("config");
  std::ofstream(dir / "c.json") << R"({"t": 3, "reps": 150, "seed": 9})";
  CHECK(run({"check", "var-exit", "--config", (dir / "c.json").string(), "--seed", "12",
             "--out-dir", dir.string()}) != kUsage);
  const auto m = nlohmann::json::parse(slurp(dir / "check-var-exit.manifest.json"));
  CHECK(m["request"]["t"] == 3.0);
  CHECK(m["request"]["reps"] == 150);
  CHECK(m["request"]["seed"] == 12);

  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK(run({"check", "var-exit", "--config", (dir / "bad.json").string(), "--out-dir",
             dir.string()}) == kUsage);
}

TEST_CASE("replay reproduces the result table with more threads") {
  const auto a = fresh_dir("replay_a"), b = fresh_dir("replay_b");
  RunRequest req;
  req.command = "sweep";
  req.kind = "exit-near-zero";
  req.t = 8.0;
  req.grid = {0.2, 0.5, 1.0};
  req.reps = 200;
  req.seed = 3;
  req.out_dir = a.string();
  std::ostringstream log;
  const int code = execute(req, log);
  CHECK((code == kPass || code == kStatisticalFail));
  CHECK(replay((a / manifest_file(req)).string(), 8, b.string(), log) == code);
  CHECK(slurp(a / result_file(req)) == slurp(b / result_file(req)));
  CHECK(request_from_json(request_to_json(req)).grid == req.grid);
}
