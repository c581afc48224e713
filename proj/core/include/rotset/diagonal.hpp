// SPDX-License-Identifier: MIT
// The best diagonal family point, its closed form in both regimes, and the
// exact classification of whether it is extreme for the truncated families.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotset/points.hpp"
#include "rotset/rho.hpp"

namespace rotset {

enum class Regime { High, Low };

enum class Classification { Extreme, NotExtreme };

/// Which parameter interval the classification dispatched on.
struct IntervalTag {
  enum Kind {
    HalfToThreeFifths,    ///< (1/2, 3/5)
    ThreeFifthsToTwoThirds,  ///< (3/5, 2/3)
    TwoThirdsToOne,       ///< (2/3, 1)
    NarrowLow,            ///< (1/(t+1), 3/(3t+2)), the extreme sub-interval
    WideLow,              ///< (3/(3t+2), 2/(2t+1)), the non-extreme sub-interval
    OutsideLowFamily      ///< low regime with floor(rho/s) >= 2
  } kind = HalfToThreeFifths;
  std::int64_t t = 0;  ///< subscript for the low-regime interval families

  std::string str() const;
};

/// Everything the diagonal analysis produces. best_diagonal fills the value,
/// realizing index and regime; extremality additionally fills the
/// classification, the dispatch tag, the threshold sequence cut-off and (in
/// the non-extreme case) the two family points spanning the hull edge
/// through (d, d), smaller x first.
struct DiagonalReport {
  Rat d;
  std::int64_t realizing_index = 0;
  Regime regime = Regime::High;
  std::optional<Classification> classification;
  std::optional<std::pair<LatticePoint, LatticePoint>> edge_endpoints;
  std::optional<std::int64_t> threshold;
  std::optional<IntervalTag> interval_tag;
};

/// Closed-form maximum of x over the diagonal family points (d, d):
/// high regime d = (b-1)/(2b-1) with b = floor(1/(1-rho)), realized at
/// index b-1; low regime d = M1/(2*M1*t+1) with t = floor(1/rho) and
/// M1 = floor(rho/s), realized at index M1*t.
DiagonalReport best_diagonal(const RhoParam& rho);

/// u_k = 3k + 1 - n_max(k) for rho in (1/2, 2/3) (where the first block has
/// a single element). Nonnegative, nondecreasing, u_0 = 0.
std::int64_t u_seq(const RhoParam& rho, std::int64_t k);

/// Largest k with u_k = 0: floor((2*rho-1)/(2-3*rho)), for rho in (1/2, 2/3).
std::int64_t k_threshold(const RhoParam& rho);

/// v_j = 2j - 1 - m_floor(j) for rho in some (1/(t+1), 2/(2t+1)) (where
/// M1 = 1). Nonnegative, nondecreasing, v_1 = 0.
std::int64_t v_seq(const RhoParam& rho, std::int64_t j);

/// Largest j with v_j = 0: floor((1-t*rho)/(2-(2t+1)*rho)), for rho in
/// (1/(t+1), 2/(2t+1)).
std::int64_t j_threshold(const RhoParam& rho);

/// Exact interval classification of rho (cross-checks the M1 = 1
/// characterization of the low-regime interval family membership).
IntervalTag classify_intervals(const RhoParam& rho);

/// Full classification. Non-extreme cases need the certified window to
/// cover the larger edge-endpoint index.
DiagonalReport extremality(const RhoParam& rho);

/// Result of the exhaustive strict-domination sweep: x + y < 2d for every
/// family point with indices <= bound, except the listed equality pairs.
struct DominationReport {
  bool ok = false;
  std::int64_t bound = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> equality_pairs;
  /// First pair with x + y > 2d, if any (ok is then false).
  std::optional<std::pair<std::int64_t, std::int64_t>> violation;
};

/// Verifies x + y <= 2d over all admissible pairs (m, n) with m, n <= bound
/// (default max(5000, 3*realizing_index)), collecting the equality pairs.
/// ok is true iff no pair exceeds 2d and the equality pairs are exactly the
/// closed-form predicted set (the realizing pair alone in the extreme case;
/// the full threshold grid in the non-extreme case).
DominationReport verify_strict_domination(const RhoParam& rho,
                                          std::int64_t bound = 0);

}  // namespace rotset
