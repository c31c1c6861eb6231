#include "hlab/paths.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

// Chain lengths of the patience sweeps.
//
// by_x[k] is the longest chain among the k alpha-points with the largest x,
// by_s[k] the same for the k largest times. xs_asc and ss_asc hold the
// coordinates so that A_t(z) can be read off by counting.
struct ChainTable {
  std::vector<double> xs_asc;
  std::vector<double> ss_asc;
  std::vector<int> by_x;
  std::vector<int> by_s;

  std::size_t size() const { return xs_asc.size(); }
  int full() const { return by_x.back(); }
};

// Longest chain starting at each point, processed in decreasing `key`.
// `value` is the other coordinate; successors need a strictly larger value.
// tops[k] = largest value among processed points whose chain length is k+1,
// strictly decreasing in k.
void patience_sweep(const std::vector<double>& values_in_order,
                    std::vector<int>& lengths) {
  std::vector<double> tops;
  lengths.assign(values_in_order.size() + 1, 0);
  for (std::size_t i = 0; i < values_in_order.size(); ++i) {
    const double v = values_in_order[i];
    // first k with tops[k] < v
    const auto it =
        std::lower_bound(tops.begin(), tops.end(), v, std::greater<>());
    if (it == tops.end())
      tops.push_back(v);
    else
      *it = v;
    lengths[i + 1] = static_cast<int>(tops.size());
  }
}

ChainTable build_chain_table(std::span<const Point> alpha, double x, double t) {
  std::vector<Point> pts;
  pts.reserve(alpha.size());
  for (const auto& p : alpha)
    if (p.x <= x && p.s <= t) pts.push_back(p);
  const auto by_x = [](const Point& a, const Point& b) { return a.x < b.x; };
  if (!std::is_sorted(pts.begin(), pts.end(), by_x))
    std::sort(pts.begin(), pts.end(), by_x);

  ChainTable tab;
  const std::size_t n = pts.size();
  tab.xs_asc.resize(n);
  std::vector<double> s_by_desc_x(n);
  for (std::size_t i = 0; i < n; ++i) {
    tab.xs_asc[i] = pts[i].x;
    s_by_desc_x[n - 1 - i] = pts[i].s;
  }
  patience_sweep(s_by_desc_x, tab.by_x);

  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.s < b.s; });
  tab.ss_asc.resize(n);
  std::vector<double> x_by_desc_s(n);
  for (std::size_t i = 0; i < n; ++i) {
    tab.ss_asc[i] = pts[i].s;
    x_by_desc_s[n - 1 - i] = pts[i].x;
  }
  patience_sweep(x_by_desc_s, tab.by_s);
  assert(tab.by_x.back() == tab.by_s.back());
  return tab;
}

std::size_t count_le(const std::vector<double>& sorted, double v) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

std::vector<double> clipped(const std::vector<double>& sorted, double hi) {
  return {sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(
                                               count_le(sorted, hi))};
}

// Breakpoints of the three profiles on [-t, x] with their values. The positive
// side is right-continuous, the negative side left-continuous, so the value at
// each breakpoint equals the value on the piece that lies further from zero.
struct Layout {
  std::vector<double> breaks;
  std::vector<int> n_at, a_at;        // values at breaks
  std::vector<int> n_piece, a_piece;  // values on (breaks[i], breaks[i+1])
};

Layout layout(const std::vector<double>& sources,
              const std::vector<double>& sinks, const ChainTable& tab,
              double x, double t) {
  const std::size_t n = tab.size();

  // Negative side, in w = |z|.
  std::vector<double> ws;
  ws.reserve(sinks.size() + n + 2);
  std::merge(sinks.begin(), sinks.end(), tab.ss_asc.begin(), tab.ss_asc.end(),
             std::back_inserter(ws));
  if (ws.empty() || ws.back() < t) ws.push_back(t);
  std::vector<int> neg_n(ws.size()), neg_a(ws.size());
  {
    std::size_t i_sink = 0, i_s = 0;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      while (i_sink < sinks.size() && sinks[i_sink] <= ws[j]) ++i_sink;
      while (i_s < n && tab.ss_asc[i_s] <= ws[j]) ++i_s;
      neg_n[j] = static_cast<int>(i_sink);
      neg_a[j] = tab.by_s[n - i_s];
    }
  }

  // Positive side.
  std::vector<double> zs;
  zs.reserve(sources.size() + n + 2);
  std::merge(sources.begin(), sources.end(), tab.xs_asc.begin(),
             tab.xs_asc.end(), std::back_inserter(zs));
  if (zs.empty() || zs.back() < x) zs.push_back(x);
  std::vector<int> pos_n(zs.size()), pos_a(zs.size());
  {
    std::size_t i_src = 0, i_x = 0;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      while (i_src < sources.size() && sources[i_src] <= zs[j]) ++i_src;
      while (i_x < n && tab.xs_asc[i_x] <= zs[j]) ++i_x;
      pos_n[j] = static_cast<int>(i_src);
      pos_a[j] = tab.by_x[n - i_x];
    }
  }

  Layout out;
  const std::size_t total = ws.size() + 1 + zs.size();
  out.breaks.reserve(total);
  out.n_at.reserve(total);
  out.a_at.reserve(total);
  for (std::size_t j = ws.size(); j-- > 0;) {
    out.breaks.push_back(-ws[j]);
    out.n_at.push_back(neg_n[j]);
    out.a_at.push_back(neg_a[j]);
    // piece (-ws[j], -ws[j-1]) carries the value of w-piece (ws[j-1], ws[j])
    out.n_piece.push_back(j > 0 ? neg_n[j - 1] : 0);
    out.a_piece.push_back(j > 0 ? neg_a[j - 1] : tab.full());
  }
  out.breaks.push_back(0.0);
  out.n_at.push_back(0);
  out.a_at.push_back(tab.full());
  out.n_piece.push_back(0);
  out.a_piece.push_back(tab.full());
  for (std::size_t j = 0; j < zs.size(); ++j) {
    out.breaks.push_back(zs[j]);
    out.n_at.push_back(pos_n[j]);
    out.a_at.push_back(pos_a[j]);
    if (j + 1 < zs.size()) {
      out.n_piece.push_back(pos_n[j]);
      out.a_piece.push_back(pos_a[j]);
    }
  }
  // The piece right after 0 runs up to zs[0]: counts of [0, 0] on the positive
  // side, which the push before the loop already recorded.
  assert(out.n_piece.size() + 1 == out.breaks.size());
  return out;
}

StepProfile make_profile(const Layout& lay, const std::vector<int>& at,
                         const std::vector<int>& piece) {
  return StepProfile{lay.breaks, piece, at};
}

void check_query(const Realization& r, double x, double t) {
  if (!(x > 0.0) || !(t > 0.0) || x > r.box.width || t > r.box.height)
    throw InvalidParameter("query corner outside the realization box");
}

}  // namespace

void to_json(nlohmann::json& j, const PathResult& p) {
  j = nlohmann::json{{"L", p.length}, {"Z", p.exit_right},
                     {"Z_prime", p.exit_left}, {"x", p.x}, {"t", p.t}};
}

StepProfile source_sink_profile(const Realization& r, double x, double t) {
  check_query(r, x, t);
  const ChainTable empty{{}, {}, {0}, {0}};
  const auto lay = layout(clipped(r.sources, x), clipped(r.sinks, t), empty, x, t);
  return make_profile(lay, lay.n_at, lay.n_piece);
}

StepProfile strict_chain_profile(std::span<const Point> alpha_points, double x,
                                 double t) {
  if (!(x > 0.0) || !(t > 0.0)) throw InvalidParameter("x and t must be > 0");
  const auto tab = build_chain_table(alpha_points, x, t);
  const auto lay = layout({}, {}, tab, x, t);
  return make_profile(lay, lay.a_at, lay.a_piece);
}

PathResult longest_weakly_ne(const Realization& r, double x, double t,
                             ProfileDetail detail) {
  check_query(r, x, t);
  const auto tab = build_chain_table(r.alpha_points, x, t);
  const auto lay = layout(clipped(r.sources, x), clipped(r.sinks, t), tab, x, t);

  const std::size_t nb = lay.breaks.size();
  std::vector<int> tot_at(nb), tot_piece(nb - 1);
  int best = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    tot_at[i] = lay.n_at[i] + lay.a_at[i];
    best = std::max(best, tot_at[i]);
    if (i + 1 < nb) {
      tot_piece[i] = lay.n_piece[i] + lay.a_piece[i];
      best = std::max(best, tot_piece[i]);
    }
  }

  // Closure of the maximizer set: its sup is the right end of the rightmost
  // maximal piece or the rightmost maximal breakpoint, whichever is larger.
  double right = -t, left = x;
  for (std::size_t i = 0; i < nb; ++i) {
    if (tot_at[i] == best) {
      right = std::max(right, lay.breaks[i]);
      left = std::min(left, lay.breaks[i]);
    }
    if (i + 1 < nb && tot_piece[i] == best) {
      right = std::max(right, lay.breaks[i + 1]);
      left = std::min(left, lay.breaks[i]);
    }
  }

  PathResult out;
  out.length = best;
  out.exit_right = right;
  out.exit_left = left;
  out.x = x;
  out.t = t;
  if (detail == ProfileDetail::full) {
    out.boundary = make_profile(lay, lay.n_at, lay.n_piece);
    out.chain = make_profile(lay, lay.a_at, lay.a_piece);
    out.total = StepProfile{lay.breaks, std::move(tot_piece), std::move(tot_at)};
  }
  return out;
}

int longest_strictly_ne(std::span<const Point> alpha_points, double x,
                        double t) {
  std::vector<Point> pts;
  for (const auto& p : alpha_points)
    if (p.x > 0.0 && p.x <= x && p.s > 0.0 && p.s <= t) pts.push_back(p);
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  // classic patience sorting on times, strictly increasing
  std::vector<double> piles;
  for (const auto& p : pts) {
    auto it = std::lower_bound(piles.begin(), piles.end(), p.s);
    if (it == piles.end())
      piles.push_back(p.s);
    else
      *it = p.s;
  }
  return static_cast<int>(piles.size());
}

}  // namespace hlab
