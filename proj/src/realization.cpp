#include "hlab/realization.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

constexpr std::uint32_t kMaxAttempts = 64;

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// Poisson points on (0, length] by exponential spacings.
std::vector<double> poisson_line(Stream& rng, double rate, double length) {
  std::vector<double> out;
  if (rate <= 0.0) return out;
  out.reserve(static_cast<std::size_t>(rate * length * 1.1) + 8);
  double pos = rng.exponential(rate);
  while (pos <= length) {
    out.push_back(pos);
    pos += rng.exponential(rate);
  }
  return out;
}

bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
         v.end();
}

bool all_distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

Realization draw(const Intensities& in, const Box& box, std::uint64_t seed,
                 std::uint64_t stream_id, Namespace ns) {
  in.validate();
  box.validate();
  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Realization r;
    r.box = box;
    r.intensities = in;
    r.seed = seed;
    r.stream_id = stream_id;

    Stream alpha_rng(seed, stream_id, Purpose::alpha_points, ns, attempt);
    // Planar points: x by spacings at rate alpha * height, time uniform.
    const auto xs = poisson_line(alpha_rng, in.alpha * box.height, box.width);
    r.alpha_points.reserve(xs.size());
    for (double x : xs)
      r.alpha_points.push_back({x, box.height * alpha_rng.uniform_open()});

    Stream source_rng(seed, stream_id, Purpose::sources, ns, attempt);
    r.sources = poisson_line(source_rng, in.source_rate(), box.width);
    Stream sink_rng(seed, stream_id, Purpose::sinks, ns, attempt);
    r.sinks = poisson_line(sink_rng, in.sink_rate(), box.height);

    if (r.in_general_position()) return r;
  }
  throw std::runtime_error("could not draw a realization in general position");
}

}  // namespace

void Intensities::validate() const {
  if (!finite_positive(alpha)) throw InvalidParameter("alpha must be > 0");
  if (!finite_positive(lambda)) throw InvalidParameter("lambda must be > 0");
}

void Box::validate() const {
  if (!finite_positive(width) || !finite_positive(height))
    throw InvalidParameter("box dimensions must be > 0");
}

bool Realization::in_general_position() const {
  std::vector<double> xs(alpha_points.size());
  std::vector<double> ts(sinks);
  ts.reserve(ts.size() + alpha_points.size());
  for (std::size_t i = 0; i < alpha_points.size(); ++i) {
    xs[i] = alpha_points[i].x;
    ts.push_back(alpha_points[i].s);
  }
  // alpha-points arrive sorted by x from the generator; only unsorted input
  // pays for a sort
  if (!std::is_sorted(xs.begin(), xs.end())) std::sort(xs.begin(), xs.end());
  std::vector<double> merged;
  merged.reserve(xs.size() + sources.size());
  if (std::is_sorted(sources.begin(), sources.end())) {
    std::merge(xs.begin(), xs.end(), sources.begin(), sources.end(),
               std::back_inserter(merged));
  } else {
    merged = xs;
    merged.insert(merged.end(), sources.begin(), sources.end());
    std::sort(merged.begin(), merged.end());
  }
  return std::adjacent_find(merged.begin(), merged.end()) == merged.end() &&
         all_distinct(std::move(ts));
}

void Realization::validate() const {
  box.validate();
  intensities.validate();
  auto inside = [](double v, double hi) { return v > 0.0 && v <= hi; };
  for (const auto& p : alpha_points)
    if (!inside(p.x, box.width) || !inside(p.s, box.height))
      throw FormatError("alpha-point outside the box");
  if (!std::is_sorted(alpha_points.begin(), alpha_points.end(),
                      [](const Point& a, const Point& b) { return a.x < b.x; }))
    throw FormatError("alpha-points must be sorted by x");
  for (double x : sources)
    if (!inside(x, box.width)) throw FormatError("source outside the box");
  for (double s : sinks)
    if (!inside(s, box.height)) throw FormatError("sink outside the box");
  if (!strictly_increasing(sources) || !strictly_increasing(sinks))
    throw FormatError("sources and sinks must be strictly increasing");
  if (!in_general_position())
    throw FormatError("realization is not in general position");
}

Realization generate(const Intensities& intensities, const Box& box,
                     std::uint64_t seed, std::uint64_t stream_id) {
  return draw(intensities, box, seed, stream_id, Namespace::base);
}

Realization independent_aux(const Intensities& intensities, const Box& box,
                            std::uint64_t seed, std::uint64_t stream_id) {
  return draw(intensities, box, seed, stream_id, Namespace::auxiliary);
}

Realization thicken_thin(const Realization& base, double lambda_prime) {
  if (!std::isfinite(lambda_prime) || lambda_prime < base.intensities.lambda)
    throw InvalidParameter("lambda_prime must be >= base lambda");
  if (lambda_prime == base.intensities.lambda) return base;

  const double extra_rate = lambda_prime - base.intensities.lambda;
  const double keep = base.intensities.lambda / lambda_prime;
  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Realization out = base;
    out.intensities.lambda = lambda_prime;

    Stream extra_rng(base.seed, base.stream_id, Purpose::thicken_sources,
                     Namespace::base, attempt);
    auto extra = poisson_line(extra_rng, extra_rate, base.box.width);
    std::vector<double> merged;
    merged.reserve(base.sources.size() + extra.size());
    std::merge(base.sources.begin(), base.sources.end(), extra.begin(),
               extra.end(), std::back_inserter(merged));
    out.sources = std::move(merged);

    Stream thin_rng(base.seed, base.stream_id, Purpose::thin_sinks,
                    Namespace::base, attempt);
    out.sinks.clear();
    for (double s : base.sinks)
      if (thin_rng.bernoulli(keep)) out.sinks.push_back(s);

    if (out.in_general_position()) return out;
  }
  throw std::runtime_error("could not thicken in general position");
}

Realization strip_boundaries(const Realization& r) {
  Realization out = r;
  out.sources.clear();
  out.sinks.clear();
  return out;
}

Realization restrict_to(const Realization& r, const Box& box) {
  box.validate();
  Realization out = r;
  out.box = box;
  std::erase_if(out.alpha_points, [&](const Point& p) {
    return p.x > box.width || p.s > box.height;
  });
  std::erase_if(out.sources, [&](double x) { return x > box.width; });
  std::erase_if(out.sinks, [&](double s) { return s > box.height; });
  return out;
}

void to_json(nlohmann::json& j, const Realization& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : r.alpha_points) pts.push_back({p.x, p.s});
  j = nlohmann::json{
      {"box", {{"X", r.box.width}, {"T", r.box.height}}},
      {"intensities",
       {{"alpha", r.intensities.alpha}, {"lambda", r.intensities.lambda}}},
      {"seed", r.seed},
      {"stream_id", r.stream_id},
      {"alpha_points", std::move(pts)},
      {"sources", r.sources},
      {"sinks", r.sinks},
  };
}

void from_json(const nlohmann::json& j, Realization& r) {
  try {
    r = Realization{};
    r.box.width = j.at("box").at("X").get<double>();
    r.box.height = j.at("box").at("T").get<double>();
    if (j.contains("intensities")) {
      const auto& in = j.at("intensities");
      r.intensities.alpha = in.value("alpha", 1.0);
      r.intensities.lambda = in.value("lambda", 1.0);
    }
    r.seed = j.value("seed", std::uint64_t{0});
    r.stream_id = j.value("stream_id", std::uint64_t{0});
    for (const auto& p : j.at("alpha_points")) {
      if (!p.is_array() || p.size() != 2)
        throw FormatError("alpha point must be [x, s]");
      r.alpha_points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    std::sort(r.alpha_points.begin(), r.alpha_points.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    r.sources = j.at("sources").get<std::vector<double>>();
    r.sinks = j.at("sinks").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad realization JSON: ") + e.what());
  }
  r.validate();
}

Realization load_realization(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j.get<Realization>();
}

void save_realization(const Realization& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << nlohmann::json(r).dump(2) << '\n';
}

}  // namespace hlab
