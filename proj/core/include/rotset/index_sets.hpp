// SPDX-License-Identifier: MIT
// Closed-form block structure of the admissible index set
// { m >= 1 : ceil(m*rho) - m*rho < rho } in both parameter regimes.
#pragma once

#include <cstdint>
#include <vector>

#include "rotset/rho.hpp"

namespace rotset {

/// A maximal run [lo, hi] of consecutive admissible indices (high regime),
/// or the complement run (the closed-form machinery guarantees which).
struct Block {
  std::int64_t k = 0;   ///< block number
  std::int64_t lo = 0;  ///< first index in the run
  std::int64_t hi = 0;  ///< last index in the run
};

/// High-regime (rho > 1/2) decomposition: admissible indices form the
/// consecutive runs blocks[k] = [floor(k/(1-rho))+1, n_max[k]], with
/// n_max[k] = floor((k+1)/(1-rho)) - 1 and the complement the single
/// skipped index floor(k/(1-rho)) per block boundary.
struct BlockDecompositionHigh {
  RhoParam rho;
  std::vector<Block> blocks;          ///< k = 0 .. k_max
  std::vector<std::int64_t> n_max;    ///< N_k aligned with blocks
  std::int64_t coverage = 0;          ///< every index <= coverage is described
};

/// One low-regime grouping [m_seq[j-1]+1, m_seq[j]] of the singleton
/// positions.
struct YBlock {
  std::int64_t j = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Low-regime (rho < 1/2) decomposition: admissible indices are the isolated
/// singletons n_prime[k] = floor(k/rho); the k-axis splits into groups
/// y_blocks[j] = [m_seq[j-1]+1, m_seq[j]] with m_seq[j] = floor(j*rho/s),
/// s = 1 - floor(1/rho)*rho, on which n_prime has the affine form
/// n_prime[k] = k*floor(1/rho) + j - 1.
struct BlockDecompositionLow {
  RhoParam rho;
  Rat s;                                ///< 1 - floor(1/rho)*rho, in (0, rho)
  std::vector<std::int64_t> n_prime;    ///< n_prime[k-1] = floor(k/rho), k >= 1
  std::vector<std::int64_t> m_seq;      ///< m_seq[j-1] = floor(j*rho/s), j >= 1
  std::vector<YBlock> y_blocks;         ///< j = 1 .. j_max
  std::int64_t coverage = 0;            ///< every index <= coverage is described
};

/// floor((k+1)/(1-rho)) - 1, the last admissible index of high-regime block k.
std::int64_t n_max_high(const RhoParam& rho, std::int64_t k);

/// floor(k/rho), the k-th admissible index in the low regime (k >= 1).
std::int64_t n_prime_low(const RhoParam& rho, std::int64_t k);

/// floor(j*rho/s) with s = 1 - floor(1/rho)*rho (low regime, j >= 1; j = 0
/// gives 0).
std::int64_t m_floor_low(const RhoParam& rho, std::int64_t j);

/// Builds high-regime blocks k = 0..k_max. Requires the high regime and a
/// certified window covering n_max(k_max). Each block is cross-checked
/// exactly: membership flips at both ends and the alpha values walk the
/// block in steps of (1-rho).
BlockDecompositionHigh blocks_high(const RhoParam& rho, std::int64_t k_max);

/// Builds low-regime groups j = 1..j_max, together with the singleton list
/// covering every admissible index <= n_prime(m_seq[j_max]). Requires the
/// low regime and a certified window covering that coverage bound.
BlockDecompositionLow blocks_low(const RhoParam& rho, std::int64_t j_max);

/// Smallest k_max whose high-regime coverage reaches at least M.
std::int64_t k_max_for_coverage(const RhoParam& rho, std::int64_t M);

/// Smallest j_max whose low-regime coverage reaches at least M (low regime).
std::int64_t j_max_for_coverage(const RhoParam& rho, std::int64_t M);

/// Brute-force admissible indices in [1, M] by direct exact comparison of
/// alpha_m with rho — the oracle the block structure is tested against.
std::vector<std::int64_t> scan_index_set(const RhoParam& rho, std::int64_t M);

/// Admissible indices in [1, M] read off the closed-form blocks.
std::vector<std::int64_t> blocks_index_set(const RhoParam& rho, std::int64_t M);

}  // namespace rotset
