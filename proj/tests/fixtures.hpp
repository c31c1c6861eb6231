#pragma once

#include "hlab/realization.hpp"

namespace hlab::testing {

// Box (2,2), sources {0.5, 1.5}, sinks {1.0}, one alpha-point at (1.0, 0.5).
inline Realization fixture_a() {
  Realization r;
  r.box = {2.0, 2.0};
  r.sources = {0.5, 1.5};
  r.sinks = {1.0};
  r.alpha_points = {{1.0, 0.5}};
  return r;
}

inline Realization empty_realization(double side = 2.0) {
  Realization r;
  r.box = {side, side};
  return r;
}

}  // namespace hlab::testing
