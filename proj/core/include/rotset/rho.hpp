// SPDX-License-Identifier: MIT
// Certified rational surrogates for the rotation-number parameter.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rotset/rational.hpp"

namespace rotset {

/// Default number of fractional decimal digits kept when truncating an
/// irrational parameter expression.
inline constexpr int kDefaultPrecision = 15;

/// Default index window certified by parse_rho (capped at denominator - 2).
inline constexpr std::int64_t kDefaultWindow = 100000;

/// A parameter value or index violates a documented precondition.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A stability certification failed (CLI maps this to exit code 2).
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact rational surrogate p/q in (0,1) for the map parameter, carrying
/// the truncation uncertainty of the expression it came from and the largest
/// index window whose integer-part data is certified stable across that
/// uncertainty.
///
/// Invariants: 0 < p/q < 1 reduced; q > max_safe_index; p/q is rejected at
/// construction if it collides with a formula-dispatch boundary (1/k,
/// (k-1)/k, 2/(2t+1), 3/(3t+2)).
class RhoParam {
 public:
  /// Builds a surrogate from an exact value, explicit uncertainty radius and
  /// certified window. Throws DomainError on range/boundary violations and
  /// CertificationError if the window does not certify. Most callers should
  /// use parse_rho instead.
  static RhoParam make(const Rat& value, const Rat& uncertainty,
                       std::int64_t window);

  const Rat& value() const { return value_; }
  const Int& num() const { return value_.get_num(); }
  const Int& den() const { return value_.get_den(); }
  const Rat& uncertainty() const { return uncertainty_; }
  std::int64_t max_safe_index() const { return window_; }

  /// True when the parameter exceeds 1/2.
  bool high_regime() const;

  /// 1 - value, as an exact rational.
  Rat one_minus() const;

  /// The surrogate for 1 - value with the same uncertainty and window.
  RhoParam mirrored() const;

  /// floor(1/(1-value)), exact. (Only meaningful in the high regime.)
  std::int64_t floor_inv_gap() const;

  /// floor(1/value), exact. (>= 2 exactly in the low regime.)
  std::int64_t floor_inv() const;

 private:
  RhoParam() = default;
  Rat value_;
  Rat uncertainty_;
  std::int64_t window_ = 0;
};

/// Result of an exact stability scan over an index window.
struct CertificationReport {
  bool passed = false;
  std::int64_t window = 0;         ///< requested window M
  std::int64_t first_failure = 0;  ///< smallest violating index when !passed
  std::string detail;              ///< human-readable diagnostic
};

/// Exact scan of the two stability predicates over 1 <= m <= M:
///   dist(m*value, Z) > m*uncertainty   and
///   |alpha_m - value| > (m+1)*uncertainty.
/// Requires M >= 1. Scanning stops at the denominator (the alpha-gap
/// predicate always fails at q - 1). Passing both predicates for all m
/// guarantees ceil(m*x) and the fractional-part comparisons agree for every
/// real x within the uncertainty radius of the surrogate.
CertificationReport certify_stability(const RhoParam& rho, std::int64_t M);

/// Same scan for a bare value/uncertainty pair that need not pass as a
/// whole (useful for reporting where the first failure lies).
CertificationReport certify_stability(const Rat& value, const Rat& uncertainty,
                                      std::int64_t M);

/// Evaluates a parameter expression to its truncated surrogate without
/// building a certified window: returns (value, uncertainty).
std::pair<Rat, Rat> parse_rho_value(const std::string& expr,
                                    int precision = kDefaultPrecision);

/// Returns rho re-certified at window M; throws CertificationError if the
/// scan fails, DomainError if M is out of range.
RhoParam certified(const RhoParam& rho, std::int64_t M);

/// Parses a parameter expression into a certified surrogate.
///
/// Grammar: sum/difference of terms; a term is a decimal literal ("0.93",
/// "1e-6"), a fraction of decimal integers ("7/10"), or a multiple of "pi"
/// or "sqrt(k)" ("pi*1e-5", "2*sqrt(2)*0.1").
///
/// The expression is evaluated exactly (rational part) plus certified
/// enclosures of the irrational terms; the result is truncated to
/// `precision` fractional decimal digits. A purely rational expression that
/// is already representable in `precision` digits (or is a single fraction)
/// keeps its exact value with uncertainty 0; otherwise the uncertainty is
/// 10^-precision.
///
/// `window` = 0 requests the default min(kDefaultWindow, den-2) and shrinks
/// to the largest prefix that certifies (at least 1). An explicit window is
/// strict: DomainError if den <= window, CertificationError if the scan
/// fails.
///
/// Throws DomainError on malformed input, values outside (0,1), boundary
/// collisions, or precision < 12.
RhoParam parse_rho(const std::string& expr, int precision = kDefaultPrecision,
                   std::int64_t window = 0);

/// ceil(m * value), exact. Requires 0 <= m <= max_safe_index.
Int ceil_mul(const RhoParam& rho, std::int64_t m);

/// alpha_m = ceil(m*value) - m*value (alpha_0 = 0). Requires 0 <= m <= window.
Rat alpha(const RhoParam& rho, std::int64_t m);

/// alpha_m < value, decided exactly. m = 0 is admissible (alpha_0 = 0).
bool member_index_set(const RhoParam& rho, std::int64_t m);

}  // namespace rotset
