// SPDX-License-Identifier: MIT
// Roundness of the star-shaped region: exact closed-form lower/upper bounds
// (stored as rational multiples of 1/pi), the numeric estimate from truncated
// hull areas, the isoperimetric ratio line, and parameter scans.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotset/diagonal.hpp"
#include "rotset/geometry.hpp"
#include "rotset/rho.hpp"

namespace rotset {

/// All roundness values are (exact rational factor) / pi; the isoperimetric
/// ratio is (exact rational coefficient) * sqrt(2).
struct RoundnessReport {
  Rat d;                  ///< best diagonal value
  Rat gamma;              ///< limiting slope -rho*floor(1/rho)
  Rat lower_factor;       ///< lower bound  = lower_factor / pi  (= 4d/rho)
  Rat upper_factor;       ///< upper bound  = upper_factor / pi
  Rat iso_coeff;          ///< iso ratio    = iso_coeff * sqrt(2)  (= d/rho)
  std::optional<Rat> estimate_factor;  ///< 4*hull_area/rho^2 at index_bound
  std::int64_t index_bound = 0;        ///< 0 when no estimate was requested
  std::string iso_decimal;             ///< truncated decimal of the iso ratio
  int iso_precision = 0;
  Regime regime = Regime::High;        ///< which d formula was used
  IntervalTag tag;                     ///< interval classification
};

/// (lower_factor, upper_factor): the exact closed-form sandwich
///   lower = 4d/rho,
///   upper = (4/(1+gamma)) * (-1 + 4(d/rho) - 2(1-gamma)(d/rho)^2),
/// with gamma = -rho*floor(1/rho). lower <= upper is checked.
std::pair<Rat, Rat> roundness_bounds(const RhoParam& rho);

/// d/rho: the isoperimetric ratio is iso_coefficient * sqrt(2), which equals
/// lower_factor * pi * sqrt(2) / 4 identically (checked).
Rat iso_coefficient(const RhoParam& rho);

/// Deterministic truncated decimal of iso_coefficient * sqrt(2).
std::string iso_ratio_decimal(const RhoParam& rho, int precision);

/// 4 * area(one-quadrant hull at bound) / rho^2, exact. Lands inside the
/// closed-form sandwich whenever bound covers the realizing index (checked).
Rat numeric_roundness_factor(const RhoParam& rho, std::int64_t bound);

/// One-quadrant bounding pentagon: (0,0), (rho,0), the two intersections of
/// the slope-gamma support lines with x + y = 2d, (0,rho); counter-clockwise.
/// Its area matches (1/(1+gamma)) * (-rho^2 + 4*rho*d - 2(1-gamma)*d^2)
/// (checked).
std::vector<RatPoint> pentagon_vertices(const RhoParam& rho);

/// Full report; the estimate is computed only when a bound is supplied.
RoundnessReport roundness(const RhoParam& rho,
                          std::optional<std::int64_t> bound = std::nullopt,
                          int iso_precision = 15);

/// One grid point of a parameter scan.
struct ScanRow {
  std::string rho_expr;   ///< decimal literal of the grid point
  Rat lower_factor;
  Rat upper_factor;
  Rat estimate_factor;
  Rat d;
  std::string iso_decimal;
  std::string tag;
  std::int64_t effective_bound = 0;  ///< estimate bound after window clamping
  bool clamped = false;              ///< true if the window forced a clamp
};

struct ScanResult {
  std::vector<ScanRow> rows;
  /// Indices i flagging a jump between rows[i] and rows[i+1]
  /// (|delta lower| > multiplier * median delta, exact arithmetic).
  std::vector<std::size_t> jump_flags;
  /// Grid points that could not be processed (value, reason).
  std::vector<std::pair<std::string, std::string>> skipped;
};

/// Scans [from, to] in exact steps. Each grid point gets its own surrogate
/// (uncertainty 0); per-point failures (dispatch boundaries, tiny
/// denominators) are recorded in `skipped` and the scan continues. The
/// estimate bound is clamped to each point's certifiable window.
ScanResult scan_roundness(const Rat& from, const Rat& to, const Rat& step,
                          std::int64_t bound, std::int64_t jump_multiplier = 10,
                          int iso_precision = 15);

}  // namespace rotset
