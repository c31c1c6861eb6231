#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hlab/duality.hpp"
#include "hlab/dynamics.hpp"
#include "hlab/errors.hpp"
#include "hlab/estimators.hpp"
#include "hlab/paths.hpp"
#include "hlab/pathwise.hpp"
#include "hlab/realization.hpp"
#include "hlab/report.hpp"

namespace fs = std::filesystem;

namespace hlab::cli {

namespace {

const std::vector<std::string> kIdentities{
    "flux",   "oracle",  "thm21",      "var-exit",   "burke",  "exit-y",
    "lemma41", "coupling52", "coupling61", "switch", "distributional"};
const std::vector<std::string> kSweeps{"scaling", "tail", "local-gain", "exit-near-zero",
                                       "l0-gap"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed grid value '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw UsageError("malformed grid value '" + item + "'");
    out.push_back(v);
  }
  return out;
}

double need_t(const RunRequest& req) {
  if (!req.t) throw UsageError("--t is required for " + req.command + " " + req.kind);
  return *req.t;
}

McOptions mc_options(const RunRequest& req) {
  return {req.reps, req.seed, req.threads};
}

std::string stem(const RunRequest& req) {
  return req.kind.empty() ? req.command : req.command + "-" + req.kind;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string report_json(const EstimatorReport& rep) {
  return nlohmann::json(rep).dump(2) + "\n";
}

// Estimates become table rows when a report has no sweep table of its own.
std::string report_csv(const EstimatorReport& rep) {
  auto rows = rep.rows;
  if (rows.empty())
    for (const auto& e : rep.estimates)
      rows.push_back({e.name, std::numeric_limits<double>::quiet_NaN(), e.value, e.se,
                      rep.reps, rep.seed});
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

EstimatorReport run_check(const RunRequest& req) {
  const auto opt = mc_options(req);
  if (req.kind == "oracle") return oracle_check(15, opt);
  const double t = need_t(req);
  const double x = req.x.value_or(t);
  if (req.kind == "flux") return flux_check(t, req.lambda, opt);
  if (req.kind == "thm21") return theorem21_check(x, t, req.lambda, opt);
  if (req.kind == "var-exit") return variance_exit_identity(t, opt);
  if (req.kind == "burke") return burke_check(x, t, req.lambda, opt);
  if (req.kind == "exit-y") return exit_y_check(t, opt);
  if (req.kind == "lemma41") return lemma41_check(t, opt);
  if (req.kind == "coupling52") return coupling52_check(t, req.r, opt);
  if (req.kind == "coupling61") return coupling61_check(t, req.r, opt);
  if (req.kind == "switch") return switch_check(t, opt);
  if (req.kind == "distributional") return distributional_identities(t, opt);
  throw UsageError("unknown identity '" + req.kind + "'");
}

EstimatorReport run_sweep(const RunRequest& req) {
  const auto opt = mc_options(req);
  if (req.grid.empty()) throw UsageError("--grid must list at least one value");
  if (req.kind == "scaling") return scaling_sweep(req.grid, opt);
  if (req.kind == "tail") return tail_profile(need_t(req), req.grid, opt);
  if (req.kind == "local-gain")
    return local_gain_probability(need_t(req), req.grid, req.levels, opt);
  if (req.kind == "exit-near-zero") return exit_near_zero_probability(need_t(req), req.grid, opt);
  if (req.kind == "l0-gap") return l0_mean_gap(req.grid, opt);
  throw UsageError("unknown sweep '" + req.kind + "'");
}

std::vector<std::string> run_simulate(const RunRequest& req, const fs::path& dir) {
  Realization r;
  double t = 0.0;
  if (!req.input.empty()) {
    r = load_realization(req.input);
    t = req.t.value_or(r.box.height);
  } else {
    t = need_t(req);
    if (!(t > 0.0)) throw InvalidParameter("--t must be positive");
    r = generate({1.0, req.lambda}, {req.x.value_or(2.0 * t), t}, req.seed, req.stream_id);
  }
  const auto ev = evolve(r, t);
  const double x = std::min(req.x.value_or(t), r.box.width);
  const auto path = longest_weakly_ne(r, x, t, ProfileDetail::none);

  const std::string base = stem(req);
  std::vector<std::string> files{base + ".realization.json", base + ".events.csv",
                                 base + ".paths.csv", base + ".path.json"};
  write_text(dir / files[0], nlohmann::json(r).dump(2) + "\n");
  std::ostringstream events;
  ev.log.write_csv(events);
  write_text(dir / files[1], events.str());
  std::ostringstream paths;
  paths << "path_id,vertex,x,s\n";
  const auto polylines = space_time_paths(r, t);
  for (std::size_t id = 0; id < polylines.size(); ++id)
    for (std::size_t v = 0; v < polylines[id].size(); ++v)
      paths << id << ',' << v << ',' << format_double(polylines[id][v].x) << ','
            << format_double(polylines[id][v].s) << '\n';
  write_text(dir / files[2], paths.str());
  nlohmann::json pj = path;
  pj["starved_sinks"] = ev.log.starved_sinks;
  write_text(dir / files[3], pj.dump(2) + "\n");
  return files;
}

}  // namespace

std::string result_file(const RunRequest& req) {
  if (req.command == "simulate") return stem(req) + ".events.csv";
  if (req.command == "sweep") return stem(req) + ".csv";
  return stem(req) + (req.format == "csv" ? ".csv" : ".json");
}

std::string manifest_file(const RunRequest& req) { return stem(req) + ".manifest.json"; }

nlohmann::json request_to_json(const RunRequest& req) {
  nlohmann::json j = {{"command", req.command}, {"kind", req.kind},
                      {"lambda", req.lambda},   {"r", req.r},
                      {"reps", req.reps},       {"seed", req.seed},
                      {"stream_id", req.stream_id}, {"grid", req.grid},
                      {"levels", req.levels},   {"input", req.input},
                      {"format", req.format}};
  j["t"] = req.t ? nlohmann::json(*req.t) : nlohmann::json(nullptr);
  j["x"] = req.x ? nlohmann::json(*req.x) : nlohmann::json(nullptr);
  return j;
}

RunRequest request_from_json(const nlohmann::json& j) {
  RunRequest req;
  auto opt_num = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
  };
  req.command = j.value("command", "");
  req.kind = j.value("kind", "");
  req.t = opt_num("t");
  req.x = opt_num("x");
  req.lambda = j.value("lambda", req.lambda);
  req.r = j.value("r", req.r);
  req.reps = j.value("reps", req.reps);
  req.seed = j.value("seed", req.seed);
  req.stream_id = j.value("stream_id", req.stream_id);
  req.grid = j.value("grid", req.grid);
  req.levels = j.value("levels", req.levels);
  req.input = j.value("input", req.input);
  req.format = j.value("format", req.format);
  req.threads = j.value("threads", req.threads);
  req.out_dir = j.value("out_dir", req.out_dir);
  return req;
}

int execute(const RunRequest& req, std::ostream& log) {
  const std::string started = utc_now();
  try {
    if (req.format != "json" && req.format != "csv")
      throw UsageError("--format must be json or csv");
    if (req.reps < 1) throw UsageError("--reps must be at least 1");
    const fs::path dir(req.out_dir);
    fs::create_directories(dir);

    std::vector<std::string> outputs;
    int code = kPass;
    std::string summary;
    if (req.command == "simulate") {
      outputs = run_simulate(req, dir);
      summary = "wrote " + std::to_string(outputs.size()) + " files";
    } else if (req.command == "check" || req.command == "sweep") {
      const auto rep = req.command == "check" ? run_check(req) : run_sweep(req);
      if (req.command == "sweep") {
        outputs = {stem(req) + ".csv", stem(req) + ".json"};
        write_text(dir / outputs[0], report_csv(rep));
        write_text(dir / outputs[1], report_json(rep));
      } else {
        outputs = {result_file(req)};
        write_text(dir / outputs[0], req.format == "csv" ? report_csv(rep) : report_json(rep));
      }
      code = rep.pass ? kPass : rep.pathwise ? kInvariantFail : kStatisticalFail;
      summary = rep.name + (rep.pass ? " PASS" : " FAIL");
    } else {
      throw UsageError("unknown command '" + req.command + "'");
    }

    nlohmann::json manifest = {{"command", req.command},
                               {"kind", req.kind},
                               {"request", request_to_json(req)},
                               {"seed", req.seed},
                               {"tool_version", kToolVersion},
                               {"started", started},
                               {"finished", utc_now()},
                               {"threads", req.threads},
                               {"outputs", outputs},
                               {"exit_code", code}};
    write_text(dir / manifest_file(req), manifest.dump(2) + "\n");
    log << summary << '\n';
    return code;
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    log << "invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    log << "bad input: " << e.what() << '\n';
    return kUsage;
  } catch (const StarvedRealization& e) {
    log << "starved: " << e.what() << '\n';
    return kStatisticalFail;
  } catch (const std::logic_error& e) {
    log << "invariant violated: " << e.what() << '\n';
    return kInvariantFail;
  }
}

int replay(const std::string& manifest_path, unsigned threads, const std::string& out_dir,
           std::ostream& log) {
  std::ifstream in(manifest_path);
  if (!in) {
    log << "cannot read manifest " << manifest_path << '\n';
    return kUsage;
  }
  nlohmann::json m;
  try {
    in >> m;
  } catch (const nlohmann::json::exception& e) {
    log << "bad manifest: " << e.what() << '\n';
    return kUsage;
  }
  auto req = request_from_json(m.at("request"));
  req.threads = threads;
  req.out_dir = out_dir;
  return execute(req, log);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Hammersley process laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  struct Flags {
    double t = 0, x = 0, lambda = 1, r = 0.5;
    std::size_t reps = 0;
    std::uint64_t seed = 0, stream_id = 0;
    std::string grid, levels, input, out_dir, format, config;
    unsigned threads = 1;
  } f;
  std::string kind, manifest;

  struct Bound {
    CLI::Option* opt;
    std::function<void(RunRequest&)> apply;
  };
  std::vector<Bound> bound;
  auto add_common = [&](CLI::App* sub) {
    bound.push_back({sub->add_option("--t", f.t, "time horizon"),
                     [&](RunRequest& q) { q.t = f.t; }});
    bound.push_back({sub->add_option("--x", f.x, "space coordinate"),
                     [&](RunRequest& q) { q.x = f.x; }});
    bound.push_back({sub->add_option("--lambda", f.lambda, "source intensity"),
                     [&](RunRequest& q) { q.lambda = f.lambda; }});
    bound.push_back({sub->add_option("--reps", f.reps, "replications"),
                     [&](RunRequest& q) { q.reps = f.reps; }});
    bound.push_back({sub->add_option("--seed", f.seed, "root seed"),
                     [&](RunRequest& q) { q.seed = f.seed; }});
    bound.push_back({sub->add_option("--grid", f.grid, "comma separated grid"),
                     [&](RunRequest& q) { q.grid = parse_grid(f.grid); }});
    bound.push_back({sub->add_option("--out-dir", f.out_dir, "output directory"),
                     [&](RunRequest& q) { q.out_dir = f.out_dir; }});
    bound.push_back({sub->add_option("--threads", f.threads, "worker threads"),
                     [&](RunRequest& q) { q.threads = f.threads; }});
    bound.push_back({sub->add_option("--format", f.format, "json or csv"),
                     [&](RunRequest& q) { q.format = f.format; }});
    bound.push_back({sub->add_option("--r", f.r, "coupling offset r"),
                     [&](RunRequest& q) { q.r = f.r; }});
    bound.push_back({sub->add_option("--levels", f.levels, "local gain levels"),
                     [&](RunRequest& q) { q.levels = parse_grid(f.levels); }});
    sub->add_option("--config", f.config, "JSON file with defaults; flags win");
  };

  auto* sim = app.add_subcommand("simulate", "draw one realization and export it");
  add_common(sim);
  bound.push_back({sim->add_option("--input", f.input, "realization JSON to replay"),
                   [&](RunRequest& q) { q.input = f.input; }});
  bound.push_back({sim->add_option("--stream-id", f.stream_id, "replication index"),
                   [&](RunRequest& q) { q.stream_id = f.stream_id; }});
  auto* chk = app.add_subcommand("check", "run an identity check");
  chk->add_option("identity", kind, "flux|oracle|thm21|var-exit|burke|exit-y|lemma41|"
                                    "coupling52|coupling61|switch|distributional")
      ->required();
  add_common(chk);
  auto* swp = app.add_subcommand("sweep", "run an estimator over a grid");
  swp->add_option("kind", kind, "scaling|tail|local-gain|exit-near-zero|l0-gap")->required();
  add_common(swp);
  auto* rep = app.add_subcommand("replay", "repeat a run from its manifest");
  rep->add_option("manifest", manifest, "manifest JSON")->required();
  bound.push_back({rep->add_option("--out-dir", f.out_dir, "output directory"), nullptr});
  bound.push_back({rep->add_option("--threads", f.threads, "worker threads"), nullptr});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (rep->parsed())
    return replay(manifest, f.threads, f.out_dir.empty() ? "." : f.out_dir, std::cerr);

  try {
    RunRequest req;
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw UsageError("cannot read config " + f.config);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad config: ") + e.what());
      }
      req = request_from_json(j);
    }
    req.command = sim->parsed() ? "simulate" : chk->parsed() ? "check" : "sweep";
    req.kind = sim->parsed() ? "" : kind;
    for (const auto& b : bound)
      if (b.apply && b.opt->count() > 0) b.apply(req);
    if (req.command == "check" &&
        std::find(kIdentities.begin(), kIdentities.end(), req.kind) == kIdentities.end())
      throw UsageError("unknown identity '" + req.kind + "'");
    if (req.command == "sweep" &&
        std::find(kSweeps.begin(), kSweeps.end(), req.kind) == kSweeps.end())
      throw UsageError("unknown sweep '" + req.kind + "'");
    return execute(req, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hlab::cli
