// SPDX-License-Identifier: MIT
#include "rotset/denjoy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rotset {

namespace {

double frac(double x) { return x - std::floor(x); }

// Signed representative in [-1/2, 1/2].
double signed_rep(double x) { return std::remainder(x, 1.0); }

int axis_of(Circle c) {
  return (c == Circle::H || c == Circle::Hp) ? 0 : 1;
}

}  // namespace

const char* circle_name(Circle c) {
  switch (c) {
    case Circle::H:
      return "h";
    case Circle::V:
      return "v";
    case Circle::Hp:
      return "hp";
    case Circle::Vp:
      return "vp";
  }
  return "?";
}

std::pair<double, double> DenjoyMap::interval_J() const {
  return {-l0_ / 2, l0_ / 2};
}

std::pair<double, double> DenjoyMap::window_I() const { return {-w_, w_}; }

double DenjoyMap::canon(double x) const {
  const double lo = -l0_ / 2;
  double y = x - std::floor(x - lo);
  // rounding can push the seam value out of range on either side
  if (y >= lo + 1.0 || y < lo) y = lo;
  return y;
}

bool DenjoyMap::in_window(double x) const {
  return std::fabs(signed_rep(x)) < w_;
}

int DenjoyMap::interval_index_at(double x) const {
  const double u = canon(x);
  auto it = std::upper_bound(s_start_.begin(), s_start_.end(), u);
  if (it == s_start_.begin()) return kGap;  // cannot happen: J starts the domain
  const size_t i = static_cast<size_t>(it - s_start_.begin()) - 1;
  if (u < s_start_[i] + s_len_[i]) return static_cast<int>(s_n_[i]);
  return kGap;
}

double DenjoyMap::g_point(double theta) const {
  // Maps an original angle in a rotation gap to its placement: each original
  // gap shrinks by the factor 2.
  auto it = std::upper_bound(s_theta_.begin(), s_theta_.end(), theta);
  const size_t i = it == s_theta_.begin() ? s_theta_.size() - 1
                                          : static_cast<size_t>(it - s_theta_.begin()) - 1;
  return s_start_[i] + s_len_[i] + (theta - s_theta_[i]) / 2;
}

double DenjoyMap::h_point(double x) const {
  // Inverse of g on the placement gaps: x lies after interval slot i.
  auto it = std::upper_bound(s_start_.begin(), s_start_.end(), x);
  const size_t i = it == s_start_.begin() ? s_start_.size() - 1
                                          : static_cast<size_t>(it - s_start_.begin()) - 1;
  return s_theta_[i] + 2 * (x - (s_start_[i] + s_len_[i]));
}

double DenjoyMap::psi(double x) const {
  const double u = canon(x);
  auto it = std::upper_bound(s_start_.begin(), s_start_.end(), u);
  const size_t i = static_cast<size_t>(it - s_start_.begin()) - 1;
  if (u < s_start_[i] + s_len_[i]) {
    const std::int64_t n = s_n_[i];
    if (n == n_w_) {  // top interval: image collapses to the orbit point
      return canon(g_point(frac(s_theta_[i] + rho_)));
    }
    const size_t j = static_cast<size_t>(slot_of_[static_cast<size_t>(n + 1 + n_w_)]);
    const double t = (u - s_start_[i]) / s_len_[i];
    return canon(s_start_[j] + t * s_len_[j]);
  }
  return canon(g_point(frac(h_point(u) + rho_)));
}

double DenjoyMap::psi_inv(double x) const {
  const double u = canon(x);
  auto it = std::upper_bound(s_start_.begin(), s_start_.end(), u);
  const size_t i = static_cast<size_t>(it - s_start_.begin()) - 1;
  if (u < s_start_[i] + s_len_[i]) {
    const std::int64_t n = s_n_[i];
    if (n == -n_w_) {
      return canon(g_point(frac(s_theta_[i] - rho_)));
    }
    const size_t j = static_cast<size_t>(slot_of_[static_cast<size_t>(n - 1 + n_w_)]);
    const double t = (u - s_start_[i]) / s_len_[i];
    return canon(s_start_[j] + t * s_len_[j]);
  }
  return canon(g_point(frac(h_point(u) - rho_)));
}

double DenjoyMap::collapse(double x) const {
  const double u = canon(x);
  if (std::fabs(u) <= w_) return 0.0;
  const double y = u < 0 ? u + 1 : u;  // arc coordinate in [w, 1-w]
  return canon((y - w_) / (1 - 2 * w_));
}

double DenjoyMap::bump(double x, int direction) const {
  const double u = signed_rep(x);
  if (std::fabs(u) >= w_)
    throw DomainError("bump requires an angle inside the window");
  const double t = u / w_;
  const double val = tau_ * (1 - t * t);
  return direction > 0 ? val : -val;
}

DenjoyMap build_denjoy(const RhoParam& rho, std::int64_t wander_count) {
  if (wander_count < 200) throw DomainError("wander_count must be >= 200");
  if (wander_count > 2000000) throw DomainError("wander_count too large");
  DenjoyMap m;
  m.rho_ = rat_to_double(rho.value());
  m.n_w_ = wander_count;

  const size_t total = static_cast<size_t>(2 * wander_count + 1);
  // Length profile l_n ~ 1/(|n|+K)^2: summable with l_{n+1}/l_n -> 1 as a
  // Denjoy construction requires. K keeps the index-0 interval (and with it
  // the collapse window w) small: each composed step applies at most three
  // collapses, each displacing by at most w, so rho_hat +- 3w must stay
  // strictly inside (0, 1) or the composed circle maps can lock onto a full
  // rotation. K = 50 bounds 3w below 0.01 for every wander count >= 200.
  constexpr double kProfileOffset = 50.0;
  std::vector<double> theta(total), len(total);
  double norm = 0;
  for (std::int64_t n = -wander_count; n <= wander_count; ++n) {
    const size_t k = static_cast<size_t>(n + wander_count);
    theta[k] = n == 0 ? 0.0 : frac(static_cast<double>(n) * m.rho_);
    const double denom = static_cast<double>(std::llabs(n)) + kProfileOffset;
    len[k] = 1.0 / (denom * denom);
    norm += len[k];
  }
  const double c = 0.5 / norm;
  for (auto& l : len) l *= c;
  m.l0_ = c / (kProfileOffset * kProfileOffset);  // index-0 interval length
  m.w_ = (17.0 / 18.0) * (m.l0_ / 2);

  // Sort by angle; theta_0 = 0 is the minimum, so the index-0 interval
  // opens the fundamental domain.
  std::vector<size_t> order(total);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return theta[a] < theta[b]; });
  for (size_t i = 1; i < total; ++i)
    if (!(theta[order[i - 1]] < theta[order[i]]))
      throw std::logic_error("orbit angles must be pairwise distinct");

  m.s_theta_.resize(total);
  m.s_start_.resize(total);
  m.s_len_.resize(total);
  m.s_n_.resize(total);
  m.slot_of_.assign(total, 0);
  double pos = -len[static_cast<size_t>(wander_count)] / 2;  // -l0/2
  double prev_theta = 0;
  for (size_t i = 0; i < total; ++i) {
    const size_t k = order[i];
    if (i > 0) pos += (theta[k] - prev_theta) / 2;
    m.s_theta_[i] = theta[k];
    m.s_start_[i] = pos;
    m.s_len_[i] = len[k];
    m.s_n_[i] = static_cast<std::int64_t>(k) - wander_count;
    m.slot_of_[k] = static_cast<std::int64_t>(i);
    pos += len[k];
    prev_theta = theta[k];
  }

  m.by_index_.resize(total);
  for (size_t i = 0; i < total; ++i) {
    const size_t k = static_cast<size_t>(m.s_n_[i] + wander_count);
    m.by_index_[k] = {m.s_n_[i], m.s_start_[i], m.s_len_[i]};
  }

  const size_t slot1 = static_cast<size_t>(m.slot_of_[static_cast<size_t>(1 + wander_count)]);
  m.tau_ = m.s_start_[slot1] + m.s_len_[slot1] / 2;
  return m;
}

BouquetPoint factor_step(const DenjoyMap& map, Circle sigma, int direction,
                         const BouquetPoint& pt, double* dx, double* dy) {
  double* axes[2] = {dx, dy};
  if (pt.circle == sigma) {
    const double u = pt.angle;
    const double u2 = direction > 0 ? map.psi(u) : map.psi_inv(u);
    const double delta =
        direction > 0 ? frac(u2 - u) : -frac(u - u2);
    *axes[axis_of(sigma)] += delta;
    return {sigma, u2};
  }
  if (map.in_window(pt.angle)) {
    const double leave = signed_rep(pt.angle);
    const double hop = map.bump(pt.angle, direction);
    *axes[axis_of(pt.circle)] -= leave;
    *axes[axis_of(sigma)] += hop;
    return {sigma, map.canon(hop)};
  }
  const double u2 = map.collapse(pt.angle);
  *axes[axis_of(pt.circle)] += signed_rep(u2 - pt.angle);
  return {pt.circle, u2};
}

LiftState composed_step(const DenjoyMap& map, const LiftState& state) {
  LiftState out = state;
  out.point = factor_step(map, Circle::V, +1, out.point, &out.dx, &out.dy);
  out.point = factor_step(map, Circle::H, +1, out.point, &out.dx, &out.dy);
  out.point = factor_step(map, Circle::Vp, -1, out.point, &out.dx, &out.dy);
  out.point = factor_step(map, Circle::Hp, -1, out.point, &out.dx, &out.dy);
  ++out.steps;
  return out;
}

std::pair<double, double> estimate_rotation(const DenjoyMap& map,
                                            const BouquetPoint& start,
                                            std::int64_t steps) {
  if (steps < 1) throw DomainError("steps must be >= 1");
  LiftState st;
  st.point = {start.circle, map.canon(start.angle)};
  for (std::int64_t i = 0; i < steps; ++i) st = composed_step(map, st);
  return {st.dx / static_cast<double>(steps),
          st.dy / static_cast<double>(steps)};
}

double estimate_psi_rotation(const DenjoyMap& map, double start,
                             std::int64_t steps) {
  if (steps < 1) throw DomainError("steps must be >= 1");
  double x = map.canon(start), acc = 0;
  for (std::int64_t i = 0; i < steps; ++i) {
    const double x2 = map.psi(x);
    acc += frac(x2 - x);
    x = x2;
  }
  return acc / static_cast<double>(steps);
}

double resident_h_step(const DenjoyMap& map, double x, double* dx) {
  double u = map.canon(x);
  const auto apply = [&](double v, bool use_psi) {
    const double v2 = use_psi ? map.psi(v) : map.collapse(v);
    *dx += use_psi ? frac(v2 - v) : signed_rep(v2 - v);
    return v2;
  };
  u = apply(u, false);
  u = apply(u, true);
  u = apply(u, false);
  u = apply(u, false);
  return u;
}

EnsembleReport ensemble_containment(const DenjoyMap& map,
                                    const HullPolygon& hull, int orbit_count,
                                    std::int64_t steps, double eps,
                                    std::uint64_t seed) {
  if (orbit_count < 1) throw DomainError("orbit_count must be >= 1");
  if (eps < 0) throw DomainError("epsilon must be >= 0");
  EnsembleReport rep;
  rep.steps = steps;
  rep.epsilon = eps;
  rep.orbits.reserve(static_cast<size_t>(orbit_count));

  // Seeded additive low-discrepancy sequence with golden-ratio stride,
  // circles cycled h, v, h', v'.
  constexpr double kGolden = 0.6180339887498949;
  const double s0 =
      frac(0.5 + 0.06180339887498949 * static_cast<double>(seed % 4096));
  static constexpr Circle kCycle[4] = {Circle::H, Circle::V, Circle::Hp,
                                       Circle::Vp};
  const Rat eps_rat = rat_from_double(eps);
  int inside_count = 0;
  for (int k = 0; k < orbit_count; ++k) {
    BouquetPoint start{kCycle[k % 4],
                       map.canon(frac(s0 + kGolden * static_cast<double>(k + 1)))};
    auto [ex, ey] = estimate_rotation(map, start, steps);
    OrbitResult orb;
    orb.start = start;
    orb.est_x = ex;
    orb.est_y = ey;
    orb.inside = hull_contains_within(
        hull, {rat_from_double(ex), rat_from_double(ey)}, eps_rat);
    inside_count += orb.inside ? 1 : 0;
    rep.orbits.push_back(orb);
  }
  rep.fraction_inside =
      static_cast<double>(inside_count) / static_cast<double>(orbit_count);
  return rep;
}

}  // namespace rotset
