#pragma once

#include <ostream>
#include <vector>

namespace hlab {

/// Integer-valued step function on [breaks.front(), breaks.back()].
///
/// The value on the open piece (breaks[i], breaks[i+1]) is pieces[i]; the
/// value at breaks[i] itself is at_break[i]. Keeping both makes the one-sided
/// conventions explicit: the boundary/chain profiles are right-continuous
/// for z > 0 and left-continuous for z < 0.
struct StepProfile {
  std::vector<double> breaks;
  std::vector<int> pieces;
  std::vector<int> at_break;

  int operator()(double z) const;
  double lo() const { return breaks.front(); }
  double hi() const { return breaks.back(); }
  /// Supremum of the profile over the closed interval [a, b].
  int max_on(double a, double b) const;

  /// Two-column (z, value) vertex list for plotting.
  void write_csv(std::ostream& out) const;
};

StepProfile operator+(const StepProfile& a, const StepProfile& b);

}  // namespace hlab
