#include "hlab/profile.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

#include "hlab/errors.hpp"

namespace hlab {

int StepProfile::operator()(double z) const {
  if (breaks.empty() || z < lo() || z > hi())
    throw InvalidParameter("profile evaluated outside its domain");
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), z);
  const auto i = static_cast<std::size_t>(it - breaks.begin());
  if (*it == z) return at_break[i];
  return pieces[i - 1];
}

int StepProfile::max_on(double a, double b) const {
  if (a > b) throw InvalidParameter("empty interval");
  int best = std::max((*this)(a), (*this)(b));
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] <= a) continue;
    if (breaks[i] >= b) break;
    best = std::max(best, pieces[i]);
    if (breaks[i] > a) best = std::max(best, at_break[i]);
  }
  return best;
}

void StepProfile::write_csv(std::ostream& out) const {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "z,value\n";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    out << breaks[i] << ',' << pieces[i] << '\n';
    out << breaks[i + 1] << ',' << pieces[i] << '\n';
  }
  out.precision(old);
}

StepProfile operator+(const StepProfile& a, const StepProfile& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi())
    throw InvalidParameter("profiles on different domains");
  StepProfile out;
  std::set_union(a.breaks.begin(), a.breaks.end(), b.breaks.begin(),
                 b.breaks.end(), std::back_inserter(out.breaks));
  for (std::size_t i = 0; i < out.breaks.size(); ++i) {
    const double z = out.breaks[i];
    out.at_break.push_back(a(z) + b(z));
    if (i + 1 < out.breaks.size()) {
      const double mid = 0.5 * (z + out.breaks[i + 1]);
      out.pieces.push_back(a(mid) + b(mid));
    }
  }
  return out;
}

}  // namespace hlab
