// SPDX-License-Identifier: MIT
#include "rotset/diagonal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rotset/detail/intops.hpp"
#include "rotset/index_sets.hpp"

namespace rotset {

namespace {

void check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("diagonal invariant failed: ") + what);
}

Rat frac(std::int64_t num, std::int64_t den) { return make_rat(num, den); }

}  // namespace

std::string IntervalTag::str() const {
  auto fr = [](std::int64_t a, std::int64_t b) {
    return std::to_string(a) + "/" + std::to_string(b);
  };
  switch (kind) {
    case HalfToThreeFifths:
      return "(1/2,3/5)";
    case ThreeFifthsToTwoThirds:
      return "(3/5,2/3)";
    case TwoThirdsToOne:
      return "(2/3,1)";
    case NarrowLow:
      return "(" + fr(1, t + 1) + "," + fr(3, 3 * t + 2) + ")";
    case WideLow:
      return "(" + fr(3, 3 * t + 2) + "," + fr(2, 2 * t + 1) + ")";
    case OutsideLowFamily:
      return "low-outside(t=" + std::to_string(t) + ")";
  }
  return "?";
}

DiagonalReport best_diagonal(const RhoParam& rho) {
  DiagonalReport rep;
  const Rat& v = rho.value();
  if (rho.high_regime()) {
    const std::int64_t b = rho.floor_inv_gap();
    check(b >= 2, "floor(1/(1-rho)) >= 2 in the high regime");
    rep.regime = Regime::High;
    rep.d = frac(b - 1, 2 * b - 1);
    rep.realizing_index = b - 1;
    check(rep.d > v / 2 && rep.d < Rat(2, 3) * v, "high-regime straddle");
  } else {
    const std::int64_t t = rho.floor_inv();
    check(t >= 2, "floor(1/rho) >= 2 in the low regime");
    const std::int64_t m1 = m_floor_low(rho, 1);
    rep.regime = Regime::Low;
    rep.d = frac(m1, 2 * m1 * t + 1);
    rep.realizing_index = m1 * t;
    check(rep.d > v / 2 && rep.d < Rat(3, 5) * v, "low-regime straddle");
  }
  check(rep.d < Rat(1, 2), "best diagonal stays below 1/2");
  return rep;
}

std::int64_t u_seq(const RhoParam& rho, std::int64_t k) {
  if (!(rho.value() > Rat(1, 2) && rho.value() < Rat(2, 3)))
    throw DomainError("u_seq requires rho in (1/2, 2/3)");
  if (k < 0) throw DomainError("u_seq index must be >= 0");
  std::int64_t u = 3 * k + 1 - n_max_high(rho, k);
  check(u >= 0, "u sequence is nonnegative");
  return u;
}

std::int64_t k_threshold(const RhoParam& rho) {
  if (!(rho.value() > Rat(1, 2) && rho.value() < Rat(2, 3)))
    throw DomainError("k_threshold requires rho in (1/2, 2/3)");
  const Int &p = rho.num(), &q = rho.den();
  std::int64_t k = to_i64(floor_div(2 * p - q, 2 * q - 3 * p));
  check(u_seq(rho, k) == 0, "u vanishes at the threshold");
  check(u_seq(rho, k + 1) > 0, "u positive beyond the threshold");
  return k;
}

std::int64_t v_seq(const RhoParam& rho, std::int64_t j) {
  if (rho.high_regime()) throw DomainError("v_seq requires the low regime");
  if (m_floor_low(rho, 1) != 1)
    throw DomainError("v_seq requires floor(rho/s) = 1");
  if (j < 1) throw DomainError("v_seq index must be >= 1");
  std::int64_t v = 2 * j - 1 - m_floor_low(rho, j);
  check(v >= 0, "v sequence is nonnegative");
  return v;
}

std::int64_t j_threshold(const RhoParam& rho) {
  if (rho.high_regime()) throw DomainError("j_threshold requires the low regime");
  if (m_floor_low(rho, 1) != 1)
    throw DomainError("j_threshold requires floor(rho/s) = 1");
  const Int &p = rho.num(), &q = rho.den();
  const Int t = floor_div(q, p);
  const Int den = 2 * q - (2 * t + 1) * p;
  check(den > 0, "rho below 2/(2t+1)");
  std::int64_t j = to_i64(floor_div(q - t * p, den));
  check(v_seq(rho, j) == 0, "v vanishes at the threshold");
  check(v_seq(rho, j + 1) > 0, "v positive beyond the threshold");
  return j;
}

IntervalTag classify_intervals(const RhoParam& rho) {
  IntervalTag tag;
  const Rat& v = rho.value();
  if (rho.high_regime()) {
    tag.t = 1;
    if (v < Rat(3, 5))
      tag.kind = IntervalTag::HalfToThreeFifths;
    else if (v < Rat(2, 3))
      tag.kind = IntervalTag::ThreeFifthsToTwoThirds;
    else
      tag.kind = IntervalTag::TwoThirdsToOne;
    return tag;
  }
  const std::int64_t t = rho.floor_inv();
  tag.t = t;
  const std::int64_t m1 = m_floor_low(rho, 1);
  const bool in_pencil = v > frac(1, t + 1) && v < frac(2, 2 * t + 1);
  check(in_pencil == (m1 == 1),
        "floor(rho/s) = 1 iff rho in (1/(t+1), 2/(2t+1))");
  if (!in_pencil) {
    tag.kind = IntervalTag::OutsideLowFamily;
  } else if (v < frac(3, 3 * t + 2)) {
    tag.kind = IntervalTag::NarrowLow;
  } else {
    tag.kind = IntervalTag::WideLow;
  }
  return tag;
}

DiagonalReport extremality(const RhoParam& rho) {
  DiagonalReport rep = best_diagonal(rho);
  IntervalTag tag = classify_intervals(rho);
  rep.interval_tag = tag;

  auto attach_edge = [&](std::int64_t m_small, std::int64_t m_large) {
    LatticePoint a = make_lattice_point(rho, m_small, m_large);
    LatticePoint b = make_lattice_point(rho, m_large, m_small);
    check(a.x + a.y == 2 * rep.d && b.x + b.y == 2 * rep.d,
          "edge endpoints lie on x + y = 2d");
    check((a.x + b.x) == 2 * rep.d && (a.y + b.y) == 2 * rep.d,
          "edge midpoint is the best diagonal point");
    check(a.x < b.x, "endpoint order: smaller x first");
    rep.edge_endpoints = std::make_pair(a, b);
  };

  switch (tag.kind) {
    case IntervalTag::HalfToThreeFifths: {
      rep.classification = Classification::Extreme;
      std::int64_t k = k_threshold(rho);
      check(k == 0, "threshold vanishes on (1/2, 3/5)");
      rep.threshold = k;
      break;
    }
    case IntervalTag::ThreeFifthsToTwoThirds: {
      rep.classification = Classification::NotExtreme;
      std::int64_t k = k_threshold(rho);
      check(k >= 1, "threshold >= 1 on (3/5, 2/3)");
      rep.threshold = k;
      attach_edge(rep.realizing_index, n_max_high(rho, k));
      break;
    }
    case IntervalTag::TwoThirdsToOne:
      rep.classification = Classification::Extreme;
      break;
    case IntervalTag::NarrowLow: {
      rep.classification = Classification::Extreme;
      std::int64_t j = j_threshold(rho);
      check(j == 1, "threshold is 1 on the narrow low interval");
      rep.threshold = j;
      break;
    }
    case IntervalTag::WideLow: {
      rep.classification = Classification::NotExtreme;
      std::int64_t j = j_threshold(rho);
      check(j >= 2, "threshold >= 2 on the wide low interval");
      rep.threshold = j;
      std::int64_t n_large = n_prime_low(rho, m_floor_low(rho, j));
      attach_edge(rep.realizing_index, n_large);
      break;
    }
    case IntervalTag::OutsideLowFamily:
      rep.classification = Classification::Extreme;
      break;
  }
  return rep;
}

DominationReport verify_strict_domination(const RhoParam& rho,
                                          std::int64_t bound) {
  DiagonalReport rep = extremality(rho);
  if (bound == 0)
    bound = std::min(std::max<std::int64_t>(5000, 3 * rep.realizing_index),
                     rho.max_safe_index());
  if (bound < rep.realizing_index)
    throw DomainError("domination bound below the realizing index");
  if (bound > rho.max_safe_index())
    throw DomainError("domination bound exceeds the certified window");

  DominationReport out;
  out.bound = bound;

  // Admissible indices (plus 0) and their exact numerators.
  std::vector<std::int64_t> idx{0}, ceil_of{0};
  {
    const Int &p = rho.num(), &q = rho.den();
    if (fits_i64(p) && fits_i64(q)) {
      const std::int64_t pi = p.get_si(), qi = q.get_si(), cut = qi - pi;
      std::int64_t r = 0;
      for (std::int64_t m = 1; m <= bound; ++m) {
        r = r + pi >= qi ? r + pi - qi : r + pi;
        if (r > cut) {
          idx.push_back(m);
          ceil_of.push_back(
              static_cast<std::int64_t>((static_cast<detail::i128>(m) * pi + qi - r) / qi));
        }
      }
    } else {
      for (std::int64_t m = 1; m <= bound; ++m)
        if (member_index_set(rho, m)) {
          idx.push_back(m);
          ceil_of.push_back(to_i64(ceil_mul(rho, m)));
        }
    }
  }

  const std::int64_t dn = to_i64(rep.d.get_num()), dd = to_i64(rep.d.get_den());
  bool violated = false;
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i; j < idx.size(); ++j) {
      // x + y <= 2d  <=>  (c_i + c_j) * dd <= 2 * dn * (m_i + m_j + 1)
      const detail::i128 lhs =
          static_cast<detail::i128>(ceil_of[i] + ceil_of[j]) * dd;
      const detail::i128 rhs =
          static_cast<detail::i128>(2) * dn * (idx[i] + idx[j] + 1);
      if (lhs > rhs) {
        violated = true;
        out.violation = std::make_pair(idx[i], idx[j]);
        out.ok = false;
        return out;
      }
      if (lhs == rhs) out.equality_pairs.emplace_back(idx[i], idx[j]);
    }
  }

  // Expected equality set from the closed forms.
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  if (rep.classification == Classification::Extreme) {
    expected.insert({rep.realizing_index, rep.realizing_index});
  } else if (rep.regime == Regime::High) {
    const std::int64_t kt = *rep.threshold;
    for (std::int64_t k = 0; k <= kt; ++k)
      for (std::int64_t l = k; l <= kt; ++l)
        expected.insert({n_max_high(rho, k), n_max_high(rho, l)});
  } else {
    const std::int64_t jt = *rep.threshold;
    for (std::int64_t i2 = 1; i2 <= jt; ++i2)
      for (std::int64_t j2 = i2; j2 <= jt; ++j2)
        expected.insert({n_prime_low(rho, m_floor_low(rho, i2)),
                         n_prime_low(rho, m_floor_low(rho, j2))});
  }
  std::set<std::pair<std::int64_t, std::int64_t>> got(out.equality_pairs.begin(),
                                                      out.equality_pairs.end());
  out.ok = !violated && got == expected;
  return out;
}

}  // namespace rotset
