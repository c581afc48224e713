// SPDX-License-Identifier: MIT
// Exact planar points: plain rational points and the indexed family points
//   ( sign_x*ceil(m*rho), sign_y*ceil(n*rho) ) / (m + n + 1).
#pragma once

#include <cstdint>

#include "rotset/rho.hpp"

namespace rotset {

/// A plain exact point.
struct RatPoint {
  Rat x, y;
  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// A family point tagged with its generating indices and quadrant signs.
struct LatticePoint {
  std::int64_t m = 0, n = 0;
  int sign_x = +1, sign_y = +1;
  Rat x, y;
};

/// Builds the family point for admissible indices (m, n) and quadrant signs.
/// Requires m, n within the certified window; signs in {-1, +1}.
LatticePoint make_lattice_point(const RhoParam& rho, std::int64_t m,
                                std::int64_t n, int sign_x = +1,
                                int sign_y = +1);

}  // namespace rotset
