// SPDX-License-Identifier: MIT
#include "rotset/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rotset {

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat decimal_to_rat(const std::string& text) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  const char* s = text.c_str();
  size_t i = 0, n = text.size();
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("malformed decimal literal: '" + text + "'");
  };
  if (n == 0) fail();
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string int_part, frac_part;
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (int_part.empty() && frac_part.empty()) fail();
  long exp10 = 0;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    std::string ed;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
    if (ed.size() > 6) fail();  // absurd exponent
    exp10 = std::stol(ed) * (eneg ? -1 : 1);
  }
  if (i != n) fail();

  Int mant((int_part.empty() ? std::string("0") : int_part) + frac_part, 10);
  long scale = static_cast<long>(frac_part.size()) - exp10;
  Int num = mant, den = 1;
  if (scale > 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  } else if (scale < 0) {
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
    num *= pow10;
  }
  if (neg) num = -num;
  return make_rat(num, den);
}

std::string rat_to_decimal(const Rat& r, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  bool neg = r < 0;
  Rat a = abs_rat(r);
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // truncation toward zero of a * 10^digits
  Int scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), Int(a.get_num() * pow10).get_mpz_t(),
             a.get_den().get_mpz_t());
  Int ip = scaled / pow10;
  Int fp = scaled % pow10;
  std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string f = fp.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_from_double(double v) {
  Rat r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds int64 range");
  return static_cast<std::int64_t>(v.get_si());
}

bool fits_i64(const Int& v) { return v.fits_slong_p(); }

}  // namespace rotset
