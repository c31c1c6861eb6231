#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hlab/errors.hpp"
#include "hlab/paths.hpp"

namespace hlab {

namespace {

struct Chain {
  int size;
  double first_x;
  double first_s;
};

std::vector<Chain> all_chains(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<Chain> chains;
  chains.push_back({0, std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()});
  std::vector<Point> members;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) members.push_back(pts[i]);
    std::sort(members.begin(), members.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    bool ok = true;
    for (std::size_t i = 1; i < members.size() && ok; ++i)
      ok = members[i].x > members[i - 1].x && members[i].s > members[i - 1].s;
    if (ok)
      chains.push_back({static_cast<int>(members.size()), members[0].x,
                        members[0].s});
  }
  return chains;
}

}  // namespace

BruteForceResult brute_force_longest(const Realization& r, double x, double t) {
  std::vector<Point> pts;
  for (const auto& p : r.alpha_points)
    if (p.x <= x && p.s <= t) pts.push_back(p);
  std::vector<double> src, snk;
  for (double v : r.sources)
    if (v <= x) src.push_back(v);
  for (double v : r.sinks)
    if (v <= t) snk.push_back(v);
  if (pts.size() + src.size() + snk.size() > kBruteForceCap)
    throw SizeCapExceeded("brute force oracle limited to 20 points");

  const auto chains = all_chains(pts);

  auto value = [&](double z) {
    int boundary = 0;
    int chain = 0;
    if (z >= 0.0) {
      for (double v : src) boundary += (v <= z);
      for (const auto& c : chains)
        if (c.first_x > z) chain = std::max(chain, c.size);
    } else {
      for (double v : snk) boundary += (v <= -z);
      for (const auto& c : chains)
        if (c.first_s > -z) chain = std::max(chain, c.size);
    }
    return boundary + chain;
  };

  std::vector<double> grid{-t, 0.0, x};
  for (double v : src) grid.push_back(v);
  for (double v : snk) grid.push_back(-v);
  for (const auto& p : pts) {
    grid.push_back(p.x);
    grid.push_back(-p.s);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  struct Sample {
    double lo, hi;
    int v;
  };
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    samples.push_back({grid[i], grid[i], value(grid[i])});
    if (i + 1 < grid.size()) {
      const double mid = 0.5 * (grid[i] + grid[i + 1]);
      samples.push_back({grid[i], grid[i + 1], value(mid)});
    }
  }

  // Path enumeration: k boundary points first, then a chain that starts
  // strictly after the last one.
  int by_paths = 0;
  for (std::size_t k = 0; k <= src.size(); ++k) {
    const double after = k == 0 ? 0.0 : src[k - 1];
    for (const auto& c : chains)
      if (c.first_x > after) by_paths = std::max(by_paths, int(k) + c.size);
  }
  for (std::size_t k = 1; k <= snk.size(); ++k)
    for (const auto& c : chains)
      if (c.first_s > snk[k - 1]) by_paths = std::max(by_paths, int(k) + c.size);

  BruteForceResult out;
  for (const auto& s : samples) out.length = std::max(out.length, s.v);
  if (out.length != by_paths)
    throw std::logic_error("brute force: path enumeration disagrees with sup");
  out.exit_right = -std::numeric_limits<double>::infinity();
  out.exit_left = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (s.v != out.length) continue;
    out.exit_right = std::max(out.exit_right, s.hi);
    out.exit_left = std::min(out.exit_left, s.lo);
  }
  return out;
}

}  // namespace hlab
