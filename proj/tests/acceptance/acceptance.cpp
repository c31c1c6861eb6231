// Runs every acceptance criterion through the command-line layer and prints
// one PASS/FAIL line per criterion. The last criterion replays every run from
// its manifest with 1 and 8 threads and compares the result tables byte by
// byte.
//
// usage: acceptance [output-directory]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hlab/dynamics.hpp"
#include "hlab/paths.hpp"
#include "hlab/realization.hpp"

namespace fs = std::filesystem;
using hlab::cli::RunRequest;

namespace {

struct Run {
  RunRequest req;
  int code = -1;
};

fs::path g_root;
std::vector<Run> g_runs;
std::ofstream g_log;

RunRequest check(std::string kind, double t, std::size_t reps) {
  RunRequest r;
  r.command = "check";
  r.kind = std::move(kind);
  r.t = t;
  r.reps = reps;
  return r;
}

RunRequest sweep(std::string kind, std::vector<double> grid, std::size_t reps) {
  RunRequest r;
  r.command = "sweep";
  r.kind = std::move(kind);
  r.grid = std::move(grid);
  r.reps = reps;
  return r;
}

// Each run gets its own directory so that equal stems never collide.
bool execute(RunRequest req) {
  req.out_dir = (g_root / ("run" + std::to_string(g_runs.size()))).string();
  fs::create_directories(req.out_dir);
  const int code = hlab::cli::execute(req, g_log);
  g_log.flush();
  g_runs.push_back({req, code});
  return code == hlab::cli::kPass;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool fixture_flux() {
  hlab::Realization r;
  r.box = {2.0, 2.0};
  r.sources = {0.5, 1.5};
  r.sinks = {1.0};
  r.alpha_points = {{1.0, 0.5}};
  return hlab::flux(r, 2.0, 2.0) == 2 &&
         hlab::longest_weakly_ne(r, 2.0, 2.0, hlab::ProfileDetail::none).length == 2;
}

bool replay_all() {
  bool ok = !g_runs.empty();
  for (std::size_t i = 0; i < g_runs.size(); ++i) {
    const auto& run = g_runs[i];
    const fs::path dir = run.req.out_dir;
    const auto manifest = nlohmann::json::parse(slurp(dir / hlab::cli::manifest_file(run.req)));
    for (unsigned threads : {1u, 8u}) {
      const fs::path again = g_root / ("replay" + std::to_string(i) + "_t" + std::to_string(threads));
      fs::create_directories(again);
      const int code =
          hlab::cli::replay((dir / hlab::cli::manifest_file(run.req)).string(), threads,
                            again.string(), g_log);
      bool same = code == run.code;
      for (const auto& f : manifest["outputs"]) {
        const auto name = f.get<std::string>();
        if (slurp(dir / name) != slurp(again / name)) same = false;
      }
      if (!same)
        std::cout << "  replay mismatch: " << run.req.command << " " << run.req.kind
                  << " threads=" << threads << "\n";
      ok = ok && same;
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  g_root = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_runs");
  fs::remove_all(g_root);
  fs::create_directories(g_root);
  g_log.open(g_root / "acceptance.log");

  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"1 flux identity",
       [] {
         auto one = check("flux", 10, 1000);
         auto two = one;
         two.lambda = 2.0;
         const bool a = execute(one), b = execute(two);
         return a && b && fixture_flux();
       }},
      {"2 oracle equivalence", [] { return execute(check("oracle", 10, 1000)); }},
      {"3 variance formula at lambda, x, t",
       [] {
         bool ok = true;
         for (auto [x, t, lambda] : {std::tuple{10.0, 10.0, 1.0}, std::tuple{10.0, 20.0, 1.0},
                                     std::tuple{10.0, 10.0, 2.0}}) {
           auto r = check("thm21", t, 10000);
           r.x = x;
           r.lambda = lambda;
           ok = execute(r) && ok;
         }
         return ok;
       }},
      {"4 variance equals twice the mean positive exit",
       [] {
         const bool a = execute(check("var-exit", 10, 10000));
         const bool b = execute(check("var-exit", 50, 10000));
         return a && b;
       }},
      {"5 crossing statistics",
       [] {
         auto r = check("burke", 10, 10000);
         r.x = 10.0;
         return execute(r);
       }},
      {"6 pathwise couplings and switch relations",
       [] {
         bool ok = true;
         for (const char* k : {"lemma41", "coupling52", "coupling61", "switch"})
           ok = execute(check(k, 10, 1000)) && ok;
         return ok;
       }},
      {"7 distributional identities", [] { return execute(check("distributional", 10, 5000)); }},
      {"8 cube-root scaling", [] { return execute(sweep("scaling", {50, 100, 200, 400}, 2000)); }},
      {"9 tail decay",
       [] {
         auto r = sweep("tail", {1, 2, 4}, 2000);
         r.t = 200.0;
         return execute(r);
       }},
      {"10 exit near zero",
       [] {
         auto r = sweep("exit-near-zero", {0.05, 0.1, 0.2, 0.4}, 2000);
         r.t = 200.0;
         return execute(r);
       }},
      {"11 L0 mean gap", [] { return execute(sweep("l0-gap", {25, 50, 100, 200}, 2000)); }},
      {"12 determinism under replay", replay_all},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << "  error: " << e.what() << "\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << static_cast<int>(secs) << " s)"
              << std::endl;
    failed += !ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
