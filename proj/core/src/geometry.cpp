// SPDX-License-Identifier: MIT
#include "rotset/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rotset/detail/intops.hpp"

namespace rotset {

namespace {

using detail::i128;
using detail::i64;

struct IndexData {
  std::vector<i64> idx;      // admissible indices incl. 0, ascending
  std::vector<i64> ceil_of;  // ceil(m*rho), aligned
  std::vector<i64> anum;     // alpha numerator (alpha = anum / q), aligned
  i64 p = 0, q = 0;
};

IndexData collect_indices_fast(const RhoParam& rho, i64 bound,
                               const char* where) {
  if (bound < 1) throw DomainError(std::string(where) + ": bound must be >= 1");
  if (bound > rho.max_safe_index())
    throw DomainError(std::string(where) + ": bound exceeds the certified window");
  if (bound > 2000000)
    throw DomainError(std::string(where) + ": bound too large (max 2e6)");
  if (!fits_i64(rho.num()) || !fits_i64(rho.den()))
    throw DomainError(std::string(where) +
                      ": denominator exceeds the integer kernel range "
                      "(use precision <= 18)");
  IndexData d;
  d.p = rho.num().get_si();
  d.q = rho.den().get_si();
  d.idx.push_back(0);
  d.ceil_of.push_back(0);
  d.anum.push_back(0);
  const i64 cut = d.q - d.p;
  i64 r = 0;
  for (i64 m = 1; m <= bound; ++m) {
    r += d.p;
    if (r >= d.q) r -= d.q;
    if (r > cut) {
      d.idx.push_back(m);
      d.ceil_of.push_back(
          static_cast<i64>((static_cast<i128>(m) * d.p + d.q - r) / d.q));
      d.anum.push_back(d.q - r);
    }
  }
  return d;
}

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

bool lex_less(const RatPoint& a, const RatPoint& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

void append_anchors(std::vector<RatPoint>& pts, const RhoParam& rho,
                    int quadrants) {
  const Rat& v = rho.value();
  pts.push_back({Rat(0), Rat(0)});
  pts.push_back({Rat(0), v});
  pts.push_back({v, Rat(0)});
  if (quadrants == 4) {
    pts.push_back({Rat(0), -v});
    pts.push_back({-v, Rat(0)});
  }
}

}  // namespace

std::vector<std::int64_t> family_indices(const RhoParam& rho,
                                         std::int64_t bound) {
  return collect_indices_fast(rho, bound, "family_indices").idx;
}

void for_each_family_point(const RhoParam& rho, std::int64_t bound,
                           int quadrants,
                           const std::function<void(const LatticePoint&)>& fn) {
  if (quadrants != 1 && quadrants != 4)
    throw DomainError("quadrants must be 1 or 4");
  IndexData d = collect_indices_fast(rho, bound, "for_each_family_point");
  static constexpr int kSigns[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
  const int nsigns = quadrants == 4 ? 4 : 1;
  for (size_t i = 0; i < d.idx.size(); ++i) {
    for (size_t j = 0; j < d.idx.size(); ++j) {
      const i64 m = d.idx[i], n = d.idx[j];
      const i64 s = m + n + 1;
      for (int si = 0; si < nsigns; ++si) {
        const int sx = kSigns[si][0], sy = kSigns[si][1];
        // Sign variants that duplicate an axis point are skipped.
        if (sx == -1 && d.ceil_of[i] == 0) continue;
        if (sy == -1 && d.ceil_of[j] == 0) continue;
        LatticePoint pt;
        pt.m = m;
        pt.n = n;
        pt.sign_x = sx;
        pt.sign_y = sy;
        pt.x = make_rat(sx * d.ceil_of[i], s);
        pt.y = make_rat(sy * d.ceil_of[j], s);
        fn(pt);
      }
    }
  }
}

PointFamily gen_family(const RhoParam& rho, std::int64_t bound, int quadrants) {
  if (quadrants != 1 && quadrants != 4)
    throw DomainError("quadrants must be 1 or 4");
  IndexData d = collect_indices_fast(rho, bound, "gen_family");
  const std::uint64_t count = static_cast<std::uint64_t>(d.idx.size()) *
                              d.idx.size() * static_cast<unsigned>(quadrants);
  if (count > 2000000)
    throw DomainError(
        "gen_family: family too large to materialize; use family_hull or "
        "for_each_family_point");
  PointFamily fam{rho, 0, 1, {}, {}};
  fam.index_bound = bound;
  fam.quadrants = quadrants;
  fam.points.reserve(count);
  for_each_family_point(rho, bound, quadrants,
                        [&](const LatticePoint& pt) { fam.points.push_back(pt); });
  append_anchors(fam.anchors, rho, quadrants);
  return fam;
}

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

HullPolygon convex_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) throw DomainError("convex hull needs at least 3 distinct points");

  std::vector<RatPoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw DomainError("input spans no area: degenerate hull");

  HullPolygon hull;
  hull.vertices = std::move(h);
  hull.area = polygon_area(hull.vertices);
  if (!(hull.area > 0)) throw std::logic_error("hull area must be positive");
  for (size_t i = 0; i < hull.vertices.size(); ++i) {
    const RatPoint& a = hull.vertices[i];
    const RatPoint& b = hull.vertices[(i + 1) % hull.vertices.size()];
    const RatPoint& c = hull.vertices[(i + 2) % hull.vertices.size()];
    if (orientation(a, b, c) != 1)
      throw std::logic_error("hull is not strictly convex");
  }
  return hull;
}

Rat polygon_area(const std::vector<RatPoint>& v) {
  Rat twice(0);
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const size_t j = (i + 1) % n;
    twice += v[i].x * v[j].y - v[j].x * v[i].y;
  }
  return twice / 2;
}

bool hull_contains(const HullPolygon& hull, const RatPoint& p) {
  const auto& v = hull.vertices;
  const size_t n = v.size();
  if (orientation(v[0], v[1], p) < 0) return false;
  if (orientation(v[0], v[n - 1], p) > 0) return false;
  size_t lo = 1, hi = n - 1;
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    if (orientation(v[0], v[mid], p) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return orientation(v[lo], v[(lo + 1) % n], p) >= 0;
}

bool hull_contains_within(const HullPolygon& hull, const RatPoint& p,
                          const Rat& eps) {
  if (hull_contains(hull, p)) return true;
  const Rat eps2 = eps * eps;
  const auto& v = hull.vertices;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const RatPoint& a = v[i];
    const RatPoint& b = v[(i + 1) % n];
    const Rat abx = b.x - a.x, aby = b.y - a.y;
    const Rat apx = p.x - a.x, apy = p.y - a.y;
    const Rat len2 = abx * abx + aby * aby;
    Rat t = (apx * abx + apy * aby) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    const Rat dx = apx - t * abx, dy = apy - t * aby;
    if (dx * dx + dy * dy <= eps2) return true;
  }
  return false;
}

HullPolygon family_hull(const RhoParam& rho, std::int64_t bound,
                        int quadrants) {
  if (quadrants != 1 && quadrants != 4)
    throw DomainError("quadrants must be 1 or 4");
  IndexData d = collect_indices_fast(rho, bound, "family_hull");
  const size_t cnt = d.idx.size();

  std::vector<RatPoint> pts;
  if (cnt == 1) {  // no admissible index yet: axis points only
    pts.push_back({Rat(0), Rat(0)});
    append_anchors(pts, rho, quadrants);
    return convex_hull(pts);
  }

  // Best diagonal point of this truncation: argmax ceil(m*rho)/(2m+1).
  size_t best = 1;
  for (size_t i = 2; i < cnt; ++i) {
    const i128 lhs = static_cast<i128>(d.ceil_of[i]) * (2 * d.idx[best] + 1);
    const i128 rhs = static_cast<i128>(d.ceil_of[best]) * (2 * d.idx[i] + 1);
    if (lhs > rhs) best = i;
  }
  const i64 dc = d.ceil_of[best], ds = 2 * d.idx[best] + 1;

  // Candidates: pairs weakly above a chord from an axis anchor to the best
  // diagonal point. Above chord ((0,rho),(d,d)) reduces to
  //   dc*a_n >= dc*p*(m+1) - (p*ds - dc*q)*ceil(m*rho),
  // independent of the pair denominator; the mirrored chord gives the
  // swapped pairs.
  std::vector<size_t> order(cnt);
  for (size_t i = 0; i < cnt; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return d.anum[a] < d.anum[b]; });
  std::vector<i128> sorted_scaled(cnt);
  for (size_t i = 0; i < cnt; ++i)
    sorted_scaled[i] = static_cast<i128>(dc) * d.anum[order[i]];

  std::vector<std::pair<size_t, size_t>> cand;
  const i128 mixed = static_cast<i128>(d.p) * ds - static_cast<i128>(dc) * d.q;
  for (size_t i = 0; i < cnt; ++i) {
    const i128 rhs = static_cast<i128>(dc) * d.p * (d.idx[i] + 1) -
                     mixed * d.ceil_of[i];
    if (sorted_scaled.back() < rhs) continue;
    size_t lo = 0, hi = cnt - 1;
    while (lo < hi) {  // first position with dc*a >= rhs
      const size_t mid = lo + (hi - lo) / 2;
      if (sorted_scaled[mid] >= rhs)
        hi = mid;
      else
        lo = mid + 1;
    }
    for (size_t pos = lo; pos < cnt; ++pos) {
      cand.emplace_back(i, order[pos]);
      cand.emplace_back(order[pos], i);
      if (cand.size() > 10000000)
        throw DomainError("family_hull: candidate set unexpectedly large");
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  pts.reserve(cand.size() * static_cast<size_t>(quadrants) + 5);
  for (const auto& [pi, pj] : cand) {
    const i64 s = d.idx[pi] + d.idx[pj] + 1;
    const Rat x = make_rat(d.ceil_of[pi], s);
    const Rat y = make_rat(d.ceil_of[pj], s);
    pts.push_back({x, y});
    if (quadrants == 4) {
      if (d.ceil_of[pi] != 0) pts.push_back({-x, y});
      if (d.ceil_of[pj] != 0) pts.push_back({x, -y});
      if (d.ceil_of[pi] != 0 && d.ceil_of[pj] != 0) pts.push_back({-x, -y});
    }
  }
  append_anchors(pts, rho, quadrants);
  return convex_hull(pts);
}

std::vector<LatticePoint> extreme_points(const PointFamily& family) {
  std::vector<RatPoint> pts;
  pts.reserve(family.points.size() + family.anchors.size());
  for (const auto& lp : family.points) pts.push_back({lp.x, lp.y});
  for (const auto& a : family.anchors) pts.push_back(a);
  HullPolygon hull = convex_hull(std::move(pts));

  std::vector<RatPoint> verts = hull.vertices;
  std::sort(verts.begin(), verts.end(), lex_less);
  std::vector<LatticePoint> out;
  for (const auto& lp : family.points) {
    RatPoint p{lp.x, lp.y};
    auto it = std::lower_bound(verts.begin(), verts.end(), p, lex_less);
    if (it != verts.end() && *it == p) out.push_back(lp);
  }
  return out;
}

CircleReport verify_circle_containment(const RhoParam& rho,
                                       std::int64_t bound) {
  IndexData d = collect_indices_fast(rho, bound, "verify_circle_containment");
  CircleReport rep;
  const size_t cnt = d.idx.size();

  // (c_m*q)^2 + (c_n*q)^2 < (p*s)^2 with s = m+n+1. Guard so squares fit
  // in 128 bits: both factors must stay below ~1.3e19.
  const i128 limit = static_cast<i128>(13) * 1000000000000000000LL;
  const i64 cmax = *std::max_element(d.ceil_of.begin(), d.ceil_of.end());
  const i64 smax = 2 * bound + 1;
  const bool fast = static_cast<i128>(cmax) * d.q < limit &&
                    static_cast<i128>(d.p) * smax < limit;

  if (fast) {
    std::vector<i128> cq(cnt);
    for (size_t i = 0; i < cnt; ++i)
      cq[i] = static_cast<i128>(d.ceil_of[i]) * d.q;
    for (size_t i = 0; i < cnt; ++i) {
      for (size_t j = i; j < cnt; ++j) {
        const i128 t = static_cast<i128>(d.p) * (d.idx[i] + d.idx[j] + 1);
        if (cq[i] * cq[i] + cq[j] * cq[j] >= t * t) {
          rep.violation = std::make_pair(d.idx[i], d.idx[j]);
          return rep;
        }
        ++rep.checked_pairs;
      }
    }
  } else {
    const Int p(rho.num()), q(rho.den());
    for (size_t i = 0; i < cnt; ++i) {
      Int ci = Int(d.ceil_of[i]) * q;
      for (size_t j = i; j < cnt; ++j) {
        Int cj = Int(d.ceil_of[j]) * q;
        Int t = p * Int(d.idx[i] + d.idx[j] + 1);
        if (ci * ci + cj * cj >= t * t) {
          rep.violation = std::make_pair(d.idx[i], d.idx[j]);
          return rep;
        }
        ++rep.checked_pairs;
      }
    }
  }
  rep.ok = true;
  return rep;
}

Rat slope_gamma(const RhoParam& rho, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw DomainError("slope_gamma requires m, n >= 1");
  return (alpha(rho, m) + alpha(rho, n) - rho.value()) /
             Rat(ceil_mul(rho, m)) -
         1;
}

Rat gamma_limit(const RhoParam& rho) {
  return -rho.value() * Rat(rho.floor_inv());
}

SlopeSupremum gamma_supremum(const RhoParam& rho, std::int64_t bound) {
  IndexData d = collect_indices_fast(rho, bound, "gamma_supremum");
  if (d.idx.size() < 2)
    throw DomainError("gamma_supremum: no admissible index within bound");

  // gamma(m, n) increases in alpha_n, so the maximum over all pairs is
  // attained at the n with the largest alpha.
  size_t nstar = 1;
  for (size_t j = 2; j < d.idx.size(); ++j)
    if (d.anum[j] > d.anum[nstar]) nstar = j;

  size_t best = 1;
  auto num = [&](size_t i) -> i128 {
    return static_cast<i128>(d.anum[i]) + d.anum[nstar] - d.p;
  };
  for (size_t i = 2; i < d.idx.size(); ++i) {
    // compare (a_i + a* - p)/c_i with (a_best + a* - p)/c_best
    if (num(i) * d.ceil_of[best] > num(best) * d.ceil_of[i]) best = i;
  }

  SlopeSupremum out;
  out.arg_m = d.idx[best];
  out.arg_n = d.idx[nstar];
  out.max_gamma = slope_gamma(rho, out.arg_m, out.arg_n);
  out.limit = gamma_limit(rho);
  out.strictly_below = out.max_gamma < out.limit;
  return out;
}

ClaimReport claim_equivalence_check(const RhoParam& rho,
                                    std::int64_t m_quadrant,
                                    std::int64_t m_difference) {
  if (m_difference < 1 || m_difference > 40)
    throw DomainError("difference bound must lie in [1, 40]");
  if (m_quadrant < 4 * m_difference + 1)
    throw DomainError("quadrant bound must be >= 4*difference_bound + 1");

  HullPolygon hull = family_hull(rho, m_quadrant, 4);
  IndexData d = collect_indices_fast(rho, m_difference,
                                     "claim_equivalence_check");
  ClaimReport rep;
  rep.ok = true;

  const size_t cnt = d.idx.size();
  for (size_t a = 0; a < cnt; ++a)
    for (size_t b = 0; b < cnt; ++b)
      for (size_t c = 0; c < cnt; ++c)
        for (size_t e = 0; e < cnt; ++e) {
          const i64 s = d.idx[a] + d.idx[b] + d.idx[c] + d.idx[e] + 1;
          RatPoint p{make_rat(d.ceil_of[a] - d.ceil_of[b], s),
                     make_rat(d.ceil_of[c] - d.ceil_of[e], s)};
          if (!hull_contains(hull, p)) {
            rep.ok = false;
            if (rep.violations.size() < 16)
              rep.violations.push_back(
                  {d.idx[a], d.idx[b], d.idx[c], d.idx[e]});
          }
          ++rep.checked;
        }

  // Converse: with zero primed indices the difference point IS the family
  // point; verified constructively.
  for (size_t a = 0; a < cnt; ++a)
    for (size_t c = 0; c < cnt; ++c) {
      const i64 s = d.idx[a] + d.idx[c] + 1;
      RatPoint diff{make_rat(d.ceil_of[a], s), make_rat(d.ceil_of[c], s)};
      LatticePoint fam = make_lattice_point(rho, d.idx[a], d.idx[c]);
      if (!(diff.x == fam.x && diff.y == fam.y))
        throw std::logic_error(
            "difference point with zero primed indices must equal the "
            "family point");
      ++rep.checked;
    }
  return rep;
}

}  // namespace rotset
