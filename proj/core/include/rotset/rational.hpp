// SPDX-License-Identifier: MIT
// Exact integer/rational helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rotset {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact floor of a rational.
Int floor_rat(const Rat& r);

/// Exact ceiling of a rational.
Int ceil_rat(const Rat& r);

/// Floor of a/b for integers with b > 0 (rounds toward -inf).
Int floor_div(const Int& a, const Int& b);

/// |r| as a rational.
Rat abs_rat(const Rat& r);

/// Builds num/den in canonical (reduced) form.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

/// Parses a plain decimal literal ("0.93", ".5", "12e-3", "1.25e+2")
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rat decimal_to_rat(const std::string& text);

/// Fixed-point rendering of r truncated toward zero to `digits` fractional
/// digits. Pure integer arithmetic, deterministic across platforms.
std::string rat_to_decimal(const Rat& r, int digits);

/// Nearest-double conversion (for plotting / diagnostics only).
double rat_to_double(const Rat& r);

/// Exact conversion of a finite double into a rational (doubles are dyadic).
Rat rat_from_double(double v);

/// Checked extraction into int64; throws std::overflow_error if out of range.
std::int64_t to_i64(const Int& v);

/// True if v fits in a signed 64-bit integer.
bool fits_i64(const Int& v);

}  // namespace rotset
