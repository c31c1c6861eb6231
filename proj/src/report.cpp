#include "hlab/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hlab {

const Estimate& EstimatorReport::estimate(const std::string& key) const {
  for (const auto& e : estimates)
    if (e.name == key) return e;
  throw std::out_of_range("no estimate named " + key);
}

void EstimatorReport::add(std::string key, double value, double se) {
  estimates.push_back({std::move(key), value, se});
}

namespace {

// JSON has no infinities or NaN; they are written as null.
nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json estimate_json(const Estimate& e) {
  return {{"name", e.name}, {"value", number(e.value)}, {"se", number(e.se)}};
}

}  // namespace

void to_json(nlohmann::json& j, const EstimatorReport& r) {
  j = nlohmann::json::object();
  j["name"] = r.name;
  j["params"] = r.params;
  j["reps"] = r.reps;
  j["seed"] = r.seed;
  j["estimates"] = nlohmann::json::array();
  for (const auto& e : r.estimates) j["estimates"].push_back(estimate_json(e));
  j["residual"] = r.residual ? estimate_json(*r.residual) : nlohmann::json(nullptr);
  j["pass"] = r.pass;
  j["pathwise"] = r.pathwise;
  j["notes"] = r.notes;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"quantity", row.quantity},
                         {"parameter", number(row.parameter)},
                         {"estimate", number(row.estimate)},
                         {"stderr", number(row.stderr_)},
                         {"reps", row.reps},
                         {"seed", row.seed}});
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "quantity,parameter,estimate,stderr,reps,seed\n";
  for (const auto& r : rows)
    out << r.quantity << ','
        << (std::isnan(r.parameter) ? std::string() : format_double(r.parameter)) << ','
        << format_double(r.estimate) << ',' << format_double(r.stderr_) << ','
        << r.reps << ',' << r.seed << '\n';
}

}  // namespace hlab
