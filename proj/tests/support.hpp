#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hzn/types.hpp"

namespace testing {

using hzn::cplx;

inline double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline cplx draw_disk(std::mt19937_64& g, double radius) {
  return std::polar(radius * std::sqrt(uniform(g)), 2.0 * std::numbers::pi * uniform(g));
}

/// Three points of the radius-0.8 disk, pairwise at least 0.05 apart and
/// at least 0.05 from the origin.
inline std::array<cplx, 3> draw_triple(std::mt19937_64& g) {
  while (true) {
    const cplx u = draw_disk(g, 0.8), v = draw_disk(g, 0.8), w = draw_disk(g, 0.8);
    if (std::min({std::abs(u), std::abs(v), std::abs(w)}) < 0.05) continue;
    if (std::min({std::abs(u - v), std::abs(v - w), std::abs(u - w)}) < 0.05) continue;
    return {u, v, w};
  }
}

inline hzn::Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const hzn::Error& e) {
    return e.code();
  }
  FAIL("expected hzn::Error");
  return hzn::Errc::invalid_argument;
}

}  // namespace testing
