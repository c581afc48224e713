// SPDX-License-Identifier: MIT
// Small guarded 64/128-bit integer kernels shared by the hot scan loops.
#pragma once

#include <cstdint>

namespace rotset::detail {

using i64 = std::int64_t;
using i128 = __int128;

/// m*p mod q for 0 <= m, 0 < q, with m*p guaranteed to fit in 128 bits.
inline i64 mulmod(i64 m, i64 p, i64 q) {
  return static_cast<i64>((static_cast<i128>(m) * p) % q);
}

/// True when |v| is small enough that products of three such factors fit
/// comfortably in 128 bits (|a*b*c| < 2^126 for |a|,|b|,|c| <= 2^42).
inline bool fits_factor42(i64 v) {
  return v > -(i64(1) << 42) && v < (i64(1) << 42);
}

}  // namespace rotset::detail
