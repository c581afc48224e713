// SPDX-License-Identifier: MIT
// Exact planar geometry of the truncated family
//   A(m, n) = (ceil(m*rho), ceil(n*rho)) / (m + n + 1),  m, n admissible,
// its sign reflections, the anchor points, convex hulls, extreme points,
// chord slopes, and the difference-set equivalence check.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rotset/points.hpp"
#include "rotset/rho.hpp"

namespace rotset {

/// A materialized truncated family. `points` lists distinct family points
/// (sign variants that duplicate an axis point are skipped); `anchors` holds
/// (0,0), (0,rho), (rho,0) in one-quadrant mode plus the negative axis
/// points in four-quadrant mode.
struct PointFamily {
  RhoParam rho;
  std::int64_t index_bound = 0;
  int quadrants = 1;  ///< 1 or 4
  std::vector<LatticePoint> points;
  std::vector<RatPoint> anchors;
};

/// A strictly convex polygon: vertices in counter-clockwise order starting
/// from the lexicographically smallest (x, then y), no three collinear.
struct HullPolygon {
  std::vector<RatPoint> vertices;
  Rat area;
};

/// Admissible indices in [0, bound] (index 0 included: it generates the
/// axis points).
std::vector<std::int64_t> family_indices(const RhoParam& rho,
                                         std::int64_t bound);

/// Materializes the family up to `bound` (1 or 4 quadrants). Throws
/// DomainError when the family would exceed ~2e6 points; use
/// for_each_family_point or family_hull at large bounds.
PointFamily gen_family(const RhoParam& rho, std::int64_t bound, int quadrants);

/// Streams every family point (same dedupe rule and deterministic order as
/// gen_family: m ascending, n ascending, then quadrant signs) without
/// materializing the family.
void for_each_family_point(const RhoParam& rho, std::int64_t bound,
                           int quadrants,
                           const std::function<void(const LatticePoint&)>& fn);

/// Exact orientation sign of the triple (a, b, c): +1 counter-clockwise,
/// -1 clockwise, 0 collinear.
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

/// Exact strictly-convex hull (monotone chain; collinear boundary points
/// dropped). Throws DomainError if the input spans no area.
HullPolygon convex_hull(std::vector<RatPoint> pts);

/// Exact signed shoelace area (positive for counter-clockwise rings).
Rat polygon_area(const std::vector<RatPoint>& vertices);

/// True if p lies inside or on the boundary of the hull (O(log n)).
bool hull_contains(const HullPolygon& hull, const RatPoint& p);

/// True if p lies within (exact) distance eps of the hull, i.e. inside or at
/// squared distance <= eps^2 from the boundary.
bool hull_contains_within(const HullPolygon& hull, const RatPoint& p,
                          const Rat& eps);

/// Convex hull of the truncated family plus anchors, computed without
/// materializing the O(bound^2) points: every hull vertex lies weakly above
/// one of the two chords through the best diagonal point of this truncation,
/// so candidates are collected by a per-index alpha threshold. Exact.
HullPolygon family_hull(const RhoParam& rho, std::int64_t bound, int quadrants);

/// The family points of a materialized family that are hull vertices.
std::vector<LatticePoint> extreme_points(const PointFamily& family);

/// Exhaustive exact check that every family point with indices <= bound lies
/// strictly inside the circle x^2 + y^2 = rho^2 (quadrant signs do not
/// affect the check).
struct CircleReport {
  bool ok = false;
  std::int64_t checked_pairs = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> violation;
};
CircleReport verify_circle_containment(const RhoParam& rho, std::int64_t bound);

/// Chord slope gamma(m, n) = -1 + (alpha_m + alpha_n - rho)/ceil(m*rho),
/// exact; requires admissible window coverage and m, n >= 1.
Rat slope_gamma(const RhoParam& rho, std::int64_t m, std::int64_t n);

/// The limiting slope -rho*floor(1/rho) (equals -rho in the high regime).
Rat gamma_limit(const RhoParam& rho);

/// Supremum scan of gamma over admissible pairs with indices <= bound.
/// gamma is increasing in alpha_n for fixed m, so the exact maximum over all
/// pairs is attained at n* = argmax alpha_n; the scan is O(bound).
struct SlopeSupremum {
  Rat max_gamma;        ///< exact maximum over the truncated pair set
  Rat limit;            ///< -rho*floor(1/rho)
  bool strictly_below;  ///< max_gamma < limit
  std::int64_t arg_m = 0, arg_n = 0;
};
SlopeSupremum gamma_supremum(const RhoParam& rho, std::int64_t bound);

/// Difference-set equivalence: every point
///   ( (ceil(m*rho)-ceil(m'*rho)), (ceil(n*rho)-ceil(n'*rho)) ) / (m+m'+n+n'+1)
/// over admissible indices <= m_difference must lie inside the four-quadrant
/// family hull at m_quadrant, and conversely each one-index pair is realized
/// by a difference point with zero primed indices. Requires
/// m_quadrant >= 4*m_difference + 1 and m_difference <= 40.
struct ClaimReport {
  bool ok = false;
  std::int64_t checked = 0;
  struct Violation {
    std::int64_t m, mp, n, np;
  };
  std::vector<Violation> violations;  ///< capped at 16 entries
};
ClaimReport claim_equivalence_check(const RhoParam& rho,
                                    std::int64_t m_quadrant,
                                    std::int64_t m_difference);

}  // namespace rotset
