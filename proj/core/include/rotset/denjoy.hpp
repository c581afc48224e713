// SPDX-License-Identifier: MIT
// Double-precision model of a circle homeomorphism with a wandering-interval
// orbit (semiconjugate to the rigid rotation), the window collapse map, the
// wedge hop, and the composed four-circle bouquet dynamics with its lift.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rotset/geometry.hpp"
#include "rotset/rho.hpp"

namespace rotset {

/// One wandering interval: the image of orbit point number n.
struct WanderInterval {
  std::int64_t n = 0;
  double start = 0;   ///< left endpoint in the canonical fundamental domain
  double length = 0;
};

/// The circle is parametrized on the fundamental domain
/// [-l0/2, 1 - l0/2), aligned so the index-0 interval J straddles 0.
/// psi maps interval n affinely onto interval n+1 and follows the
/// underlying rotation on the complement of the intervals.
class DenjoyMap {
 public:
  double rho_double() const { return rho_; }
  std::int64_t wander_count() const { return n_w_; }
  const std::vector<WanderInterval>& intervals() const { return by_index_; }

  /// J = (-l0/2, l0/2): the index-0 interval, symmetric about the origin.
  std::pair<double, double> interval_J() const;
  /// I = (-w, w) with w = (17/18)*(l0/2): the collapse window.
  std::pair<double, double> window_I() const;
  /// tau = psi(0): the center of interval 1.
  double tau() const { return tau_; }

  /// Wraps an angle into the fundamental domain.
  double canon(double x) const;
  /// True when the signed angle representative lies inside I.
  bool in_window(double x) const;
  /// Index n of the interval containing x, or kGap if x lies between
  /// intervals.
  static constexpr int kGap = INT32_MIN;
  int interval_index_at(double x) const;

  double psi(double x) const;
  double psi_inv(double x) const;
  /// The window collapse: degree one, fixes 0 and 1/2, crushes I to 0 and
  /// expands the complement affinely.
  double collapse(double x) const;
  /// Signed hop value +-tau*(1 - (x/w)^2) for |x| < w.
  double bump(double x, int direction) const;

 private:
  friend DenjoyMap build_denjoy(const RhoParam&, std::int64_t);
  double rho_ = 0;
  std::int64_t n_w_ = 0;
  double l0_ = 0, w_ = 0, tau_ = 0;
  std::vector<WanderInterval> by_index_;   // indexed n + n_w
  std::vector<double> s_theta_;            // orbit angles, sorted
  std::vector<double> s_start_, s_len_;    // matching placements
  std::vector<std::int64_t> s_n_;          // matching orbit numbers
  std::vector<std::int64_t> slot_of_;      // n + n_w -> sorted slot
  double g_point(double theta) const;      // original angle -> placement
  double h_point(double x) const;          // gap placement -> original angle
};

/// Builds the model: orbit angles frac(n*rho) for |n| <= wander_count,
/// interval lengths proportional to 1/(|n|+50)^2 and summing to 1/2.
/// Requires wander_count >= 200, which keeps the collapse window narrow
/// enough that the composed circle maps cannot lock onto a full rotation.
DenjoyMap build_denjoy(const RhoParam& rho, std::int64_t wander_count);

enum class Circle : int { H = 0, V = 1, Hp = 2, Vp = 3 };
const char* circle_name(Circle c);

struct BouquetPoint {
  Circle circle = Circle::H;
  double angle = 0;
};

struct LiftState {
  BouquetPoint point;
  double dx = 0, dy = 0;
  std::int64_t steps = 0;
};

/// One directed factor of the composed dynamics, accumulating lift
/// displacement: on its own circle the factor acts by psi^(+-1); on another
/// circle it hops wedge-window points onto [0, +-tau] of sigma and collapses
/// the rest in place.
BouquetPoint factor_step(const DenjoyMap& map, Circle sigma, int direction,
                         const BouquetPoint& pt, double* dx, double* dy);

/// One composed step: the v and h factors forward, then the v' and h'
/// factors backward.
LiftState composed_step(const DenjoyMap& map, const LiftState& state);

/// Average lift displacement per composed step over `steps` iterations.
std::pair<double, double> estimate_rotation(const DenjoyMap& map,
                                            const BouquetPoint& start,
                                            std::int64_t steps);

/// Rotation number estimate of psi alone.
double estimate_psi_rotation(const DenjoyMap& map, double start,
                             std::int64_t steps);

/// The factor composition experienced by points that remain on the
/// horizontal circle: collapse, psi, collapse, collapse. Returns the image
/// and adds the x-displacement.
double resident_h_step(const DenjoyMap& map, double x, double* dx);

struct OrbitResult {
  BouquetPoint start;
  double est_x = 0, est_y = 0;
  bool inside = false;
};

struct EnsembleReport {
  std::vector<OrbitResult> orbits;
  double fraction_inside = 0;
  std::int64_t steps = 0;
  double epsilon = 0;
};

/// Runs `orbit_count` orbits from seeded low-discrepancy starts (circles
/// cycled h, v, h', v'), `steps` composed steps each, then checks each
/// estimated rotation vector against `hull` dilated by eps (exact rational
/// point-polygon distance).
EnsembleReport ensemble_containment(const DenjoyMap& map,
                                    const HullPolygon& hull, int orbit_count,
                                    std::int64_t steps, double eps,
                                    std::uint64_t seed);

}  // namespace rotset
