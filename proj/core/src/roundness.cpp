// SPDX-License-Identifier: MIT
#include "rotset/roundness.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotset {

namespace {

void check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("roundness invariant failed: ") + what);
}

}  // namespace

std::pair<Rat, Rat> roundness_bounds(const RhoParam& rho) {
  const DiagonalReport diag = best_diagonal(rho);
  const Rat& v = rho.value();
  const Rat r = diag.d / v;  // d/rho
  const Rat gamma = -v * Rat(rho.floor_inv());
  const Rat lower = 4 * r;
  const Rat upper = (Rat(4) / (1 + gamma)) *
                    (Rat(-1) + 4 * r - 2 * (1 - gamma) * r * r);
  check(lower <= upper, "closed-form sandwich is ordered");
  check(lower > 0, "lower bound positive");
  return {lower, upper};
}

Rat iso_coefficient(const RhoParam& rho) {
  const Rat coeff = best_diagonal(rho).d / rho.value();
  check(4 * coeff == roundness_bounds(rho).first,
        "iso coefficient ties to the lower bound");
  return coeff;
}

std::string iso_ratio_decimal(const RhoParam& rho, int precision) {
  if (precision < 1 || precision > 60)
    throw DomainError("iso precision must lie in [1, 60]");
  const Rat coeff = iso_coefficient(rho);
  // floor(sqrt(2) * a/b * 10^P) = floor(isqrt(2 * a^2 * 10^(2P)) / b).
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  Int scaled = 2 * coeff.get_num() * coeff.get_num() * pow10 * pow10;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int val = root / coeff.get_den();
  return rat_to_decimal(make_rat(val, pow10), precision);
}

Rat numeric_roundness_factor(const RhoParam& rho, std::int64_t bound) {
  HullPolygon hull = family_hull(rho, bound, 1);
  const Rat& v = rho.value();
  return 4 * hull.area / (v * v);
}

std::vector<RatPoint> pentagon_vertices(const RhoParam& rho) {
  const Rat& v = rho.value();
  const Rat d = best_diagonal(rho).d;
  const Rat gamma = -v * Rat(rho.floor_inv());
  const Rat one_plus = 1 + gamma;
  check(one_plus > 0, "1 + gamma positive");
  const Rat px = (2 * d - v) / one_plus;
  const Rat py = (2 * d * gamma + v) / one_plus;
  check(px > 0 && py > px, "cap vertex ordering");
  std::vector<RatPoint> pent{{Rat(0), Rat(0)},
                             {v, Rat(0)},
                             {py, px},  // mirror of the cap vertex
                             {px, py},
                             {Rat(0), v}};
  const Rat closed = (Rat(1) / one_plus) *
                     (-v * v + 4 * v * d - 2 * (1 - gamma) * d * d);
  check(polygon_area(pent) == closed, "pentagon area matches the closed form");
  return pent;
}

RoundnessReport roundness(const RhoParam& rho,
                          std::optional<std::int64_t> bound,
                          int iso_precision) {
  RoundnessReport rep;
  const DiagonalReport diag = best_diagonal(rho);
  rep.d = diag.d;
  rep.regime = diag.regime;
  rep.tag = classify_intervals(rho);
  rep.gamma = -rho.value() * Rat(rho.floor_inv());
  auto [lo, hi] = roundness_bounds(rho);
  rep.lower_factor = lo;
  rep.upper_factor = hi;
  rep.iso_coeff = iso_coefficient(rho);
  rep.iso_precision = iso_precision;
  rep.iso_decimal = iso_ratio_decimal(rho, iso_precision);
  if (bound) {
    rep.index_bound = *bound;
    rep.estimate_factor = numeric_roundness_factor(rho, *bound);
    if (*bound >= diag.realizing_index) {
      check(*rep.estimate_factor >= lo, "estimate above the lower bound");
      check(*rep.estimate_factor <= hi, "estimate below the upper bound");
    }
  }
  return rep;
}

ScanResult scan_roundness(const Rat& from, const Rat& to, const Rat& step,
                          std::int64_t bound, std::int64_t jump_multiplier,
                          int iso_precision) {
  if (step <= 0) throw DomainError("scan step must be positive");
  if (from <= 0 || to >= 1 || from > to)
    throw DomainError("scan range must satisfy 0 < from <= to < 1");
  if (jump_multiplier < 1) throw DomainError("jump multiplier must be >= 1");

  // Render grid literals with as many places as the inputs use.
  const auto places = [](const Rat& r) {
    Int den = r.get_den();
    int n = 0;
    while (den % 10 == 0) {
      den /= 10;
      ++n;
    }
    while (den % 2 == 0) den /= 2, ++n;
    while (den % 5 == 0) den /= 5, ++n;
    return den == 1 ? n : 18;  // non-decimal rationals: fixed wide rendering
  };
  const int digits =
      std::max({places(from), places(to), places(step), 1});

  ScanResult out;
  for (Rat v = from; v <= to; v += step) {
    const std::string expr = rat_to_decimal(v, digits);
    try {
      Rat val = v;
      val.canonicalize();
      Int cap = val.get_den() - 2;
      std::int64_t window = kDefaultWindow;
      if (cap < window) window = to_i64(cap);
      if (window < 1) throw DomainError("denominator too small");
      RhoParam rho = RhoParam::make(val, Rat(0), window);

      ScanRow row;
      row.rho_expr = expr;
      row.effective_bound = std::min(bound, rho.max_safe_index());
      row.clamped = row.effective_bound != bound;
      RoundnessReport rep =
          roundness(rho, row.effective_bound, iso_precision);
      row.lower_factor = rep.lower_factor;
      row.upper_factor = rep.upper_factor;
      row.estimate_factor = *rep.estimate_factor;
      row.d = rep.d;
      row.iso_decimal = rep.iso_decimal;
      row.tag = rep.tag.str();
      out.rows.push_back(std::move(row));
    } catch (const DomainError& e) {
      out.skipped.emplace_back(expr, e.what());
    } catch (const CertificationError& e) {
      out.skipped.emplace_back(expr, e.what());
    }
  }

  // Jump detection on the exact lower-bound deltas.
  if (out.rows.size() >= 3) {
    std::vector<Rat> deltas;
    deltas.reserve(out.rows.size() - 1);
    for (size_t i = 0; i + 1 < out.rows.size(); ++i)
      deltas.push_back(
          abs_rat(out.rows[i + 1].lower_factor - out.rows[i].lower_factor));
    std::vector<Rat> sorted = deltas;
    std::sort(sorted.begin(), sorted.end());
    const Rat median = sorted[sorted.size() / 2];
    for (size_t i = 0; i < deltas.size(); ++i) {
      const bool flag = median > 0 ? deltas[i] > Rat(jump_multiplier) * median
                                   : deltas[i] > 0;
      if (flag) out.jump_flags.push_back(i);
    }
  }
  return out;
}

}  // namespace rotset
