// SPDX-License-Identifier: MIT
#include "rotset/rho.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "rotset/detail/intops.hpp"

namespace rotset {

namespace {

// 160 fractional digits of pi, enough for any supported precision plus guard.
constexpr const char* kPiFrac =
    "1415926535897932384626433832795028841971693993751058209749445923078164"
    "0628620899862803482534211706798214808651328230664709384460955058223172"
    "53594081284811";

Int pow10_int(unsigned long digits) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

// Enclosure [lo, hi] with hi - lo = 10^-digits.
struct Enclosure {
  Rat lo, hi;
};

Enclosure pi_enclosure(int digits) {
  if (digits > 150) throw DomainError("pi precision limit exceeded");
  Int den = pow10_int(static_cast<unsigned long>(digits));
  Int num("3" + std::string(kPiFrac).substr(0, static_cast<size_t>(digits)), 10);
  return {make_rat(num, den), make_rat(num + 1, den)};
}

// floor(sqrt(k) * 10^digits) via integer square root.
Enclosure sqrt_enclosure(const Int& k, int digits) {
  Int den = pow10_int(static_cast<unsigned long>(digits));
  Int scaled = k * den * den;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return {make_rat(root, den), make_rat(root + 1, den)};
}

struct IrrationalTerm {
  enum Kind { Pi, Sqrt } kind;
  Int arg;   // radicand for Sqrt
  Rat coef;  // rational multiplier (signed)
};

struct ParsedExpr {
  Rat exact;                          // sum of rational terms
  std::vector<IrrationalTerm> irr;    // irrational terms
  bool single_fraction = false;       // expression is exactly "p/q"
};

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Splits on top-level +/- (a sign directly after e/E belongs to an exponent).
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> terms;
  int sign = +1;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') &&
        !(i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E') && !cur.empty())) {
      if (!cur.empty()) {
        terms.emplace_back(sign, cur);
        cur.clear();
        sign = +1;
      }
      if (c == '-') sign = -sign;
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) terms.emplace_back(sign, cur);
  return terms;
}

ParsedExpr parse_expression(const std::string& raw) {
  std::string s = strip_ws(raw);
  if (s.empty()) throw DomainError("empty parameter expression");
  ParsedExpr out;
  out.exact = 0;

  auto terms = split_terms(s);
  if (terms.empty()) throw DomainError("malformed parameter expression: '" + raw + "'");

  for (auto& [sign, term] : terms) {
    // factor list separated by '*'; at most one '/' inside a numeric factor
    std::vector<std::string> factors;
    std::string cur;
    int depth = 0;
    for (char c : term) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '*' && depth == 0) {
        factors.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    factors.push_back(cur);

    Rat coef(sign);
    std::optional<IrrationalTerm> irr;
    for (const std::string& f : factors) {
      if (f.empty()) throw DomainError("malformed term in '" + raw + "'");
      if (f == "pi") {
        if (irr) throw DomainError("unsupported product of irrational factors");
        irr = IrrationalTerm{IrrationalTerm::Pi, Int(0), Rat(1)};
      } else if (f.rfind("sqrt(", 0) == 0 && f.back() == ')') {
        std::string inner = f.substr(5, f.size() - 6);
        if (!is_integer_literal(inner))
          throw DomainError("sqrt expects a positive integer: '" + f + "'");
        Int k(inner, 10);
        if (k <= 0) throw DomainError("sqrt expects a positive integer");
        Int root;
        mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
        if (root * root == k) {
          coef *= Rat(root);  // perfect square: rational after all
        } else {
          if (irr) throw DomainError("unsupported product of irrational factors");
          irr = IrrationalTerm{IrrationalTerm::Sqrt, k, Rat(1)};
        }
      } else if (f.find('/') != std::string::npos) {
        size_t pos = f.find('/');
        std::string num = f.substr(0, pos), den = f.substr(pos + 1);
        if (f.find('/', pos + 1) != std::string::npos)
          throw DomainError("chained division in '" + f + "'");
        Rat n = decimal_to_rat(num), d = decimal_to_rat(den);
        if (d == 0) throw DomainError("division by zero in '" + f + "'");
        coef *= n / d;
        if (terms.size() == 1 && factors.size() == 1 &&
            is_integer_literal(num) && is_integer_literal(den))
          out.single_fraction = true;
      } else {
        try {
          coef *= decimal_to_rat(f);
        } catch (const std::invalid_argument& e) {
          throw DomainError(std::string(e.what()) + " in expression '" + raw + "'");
        }
      }
    }
    if (irr) {
      irr->coef = coef;
      out.irr.push_back(*irr);
    } else {
      out.exact += coef;
    }
  }
  return out;
}

// Interval sum of the expression at `digits` fractional digits of enclosure.
Enclosure evaluate_enclosure(const ParsedExpr& e, int digits) {
  Rat lo = e.exact, hi = e.exact;
  for (const auto& t : e.irr) {
    Enclosure enc = t.kind == IrrationalTerm::Pi ? pi_enclosure(digits)
                                                 : sqrt_enclosure(t.arg, digits);
    if (t.coef >= 0) {
      lo += t.coef * enc.lo;
      hi += t.coef * enc.hi;
    } else {
      lo += t.coef * enc.hi;
      hi += t.coef * enc.lo;
    }
  }
  return {lo, hi};
}

// Rejects reduced p/q landing on a formula-dispatch boundary:
// 1/k, (k-1)/k, 2/(2t+1) (every reduced 2/q), 3/(3t+2).
void check_boundary(const Int& p, const Int& q) {
  auto reject = [&](const char* what) {
    throw DomainError(std::string("parameter ") + p.get_str() + "/" + q.get_str() +
                      " collides with a formula-dispatch boundary (" + what + ")");
  };
  if (p == 1) reject("1/k");
  if (q - p == 1) reject("(k-1)/k");
  if (p == 2) reject("2/(2t+1)");
  if (p == 3 && q % 3 == 2) reject("3/(3t+2)");
}

std::int64_t residue(const RhoParam& rho, std::int64_t m) {
  // m * p mod q, exact.
  const Int &p = rho.num(), &q = rho.den();
  if (fits_i64(p) && fits_i64(q) && q.get_si() < (std::int64_t(1) << 62))
    return detail::mulmod(m, p.get_si(), q.get_si());
  Int r = (Int(m) * p) % q;
  return to_i64(r);
}

}  // namespace

RhoParam RhoParam::make(const Rat& value, const Rat& uncertainty,
                        std::int64_t window) {
  RhoParam r;
  r.value_ = value;
  r.value_.canonicalize();
  r.uncertainty_ = uncertainty;
  r.uncertainty_.canonicalize();
  r.window_ = window;
  if (r.value_ <= 0 || r.value_ >= 1)
    throw DomainError("parameter value must lie strictly inside (0,1)");
  if (r.uncertainty_ < 0) throw DomainError("uncertainty must be >= 0");
  if (r.value_ - r.uncertainty_ <= 0 || r.value_ + r.uncertainty_ >= 1)
    throw DomainError("uncertainty interval escapes (0,1)");
  check_boundary(r.value_.get_num(), r.value_.get_den());
  if (window < 1) throw DomainError("certification window must be >= 1");
  if (Int(window) >= r.value_.get_den())
    throw DomainError("denominator <= requested window; increase precision");
  CertificationReport rep = certify_stability(r, window);
  if (!rep.passed)
    throw CertificationError("window " + std::to_string(window) +
                             " fails stability certification: " + rep.detail);
  return r;
}

bool RhoParam::high_regime() const { return value_ > Rat(1, 2); }

Rat RhoParam::one_minus() const { return Rat(1) - value_; }

RhoParam RhoParam::mirrored() const {
  // Internal construction: the mirror may land on a dispatch boundary, but it
  // is only used for index arithmetic (alpha / membership), never dispatch.
  RhoParam r;
  r.value_ = one_minus();
  r.value_.canonicalize();
  r.uncertainty_ = uncertainty_;
  r.window_ = window_;
  return r;
}

std::int64_t RhoParam::floor_inv_gap() const {
  return to_i64(floor_rat(Rat(1) / one_minus()));
}

std::int64_t RhoParam::floor_inv() const {
  return to_i64(floor_div(den(), num()));
}

CertificationReport certify_stability(const RhoParam& rho, std::int64_t M) {
  return certify_stability(rho.value(), rho.uncertainty(), M);
}

CertificationReport certify_stability(const Rat& value, const Rat& uncertainty,
                                      std::int64_t M) {
  if (M < 1) throw DomainError("certification window must be >= 1");
  if (value <= 0 || value >= 1)
    throw DomainError("parameter value must lie in (0, 1)");
  if (uncertainty < 0) throw DomainError("uncertainty must be >= 0");
  CertificationReport rep;
  rep.window = M;
  // The alpha-gap predicate fails unconditionally at m = q - 1 (alpha equals
  // rho there), so scanning never needs to pass the denominator.
  if (Int(M) >= value.get_den()) M = to_i64(Int(value.get_den() - 1));

  const Int &p = value.get_num(), &q = value.get_den();
  const Rat& eps = uncertainty;
  const Int &en = eps.get_num(), &ed = eps.get_den();

  bool fast = fits_i64(p) && fits_i64(q) && fits_i64(en) && fits_i64(ed) &&
              q.get_si() < (std::int64_t(1) << 50) &&
              ed.get_si() < (std::int64_t(1) << 50);
  auto fail = [&](std::int64_t m, const char* which) {
    rep.passed = false;
    rep.first_failure = m;
    rep.detail = std::string(which) + " stability predicate fails at index " +
                 std::to_string(m);
  };

  if (fast) {
    const std::int64_t pi = p.get_si(), qi = q.get_si(), eni = en.get_si(),
                       edi = ed.get_si();
    std::int64_t r = 0;
    for (std::int64_t m = 1; m <= M; ++m) {
      r += pi % qi;
      if (r >= qi) r -= qi;
      const std::int64_t dist_num = std::min(r, qi - r);
      // dist(m*rho, Z) > m*eps  <=>  dist_num * ed > m * en * q
      if (static_cast<detail::i128>(dist_num) * edi <=
          static_cast<detail::i128>(m) * eni * qi) {
        fail(m, "integer-distance");
        return rep;
      }
      // |alpha_m - rho| = |q - r - p| / q > (m+1)*eps
      const std::int64_t gap = std::abs(qi - r - pi);
      if (static_cast<detail::i128>(gap) * edi <=
          static_cast<detail::i128>(m + 1) * eni * qi) {
        fail(m, "alpha-gap");
        return rep;
      }
    }
  } else {
    Int r = 0, pm = p % q;
    for (std::int64_t m = 1; m <= M; ++m) {
      r += pm;
      if (r >= q) r -= q;
      Int dist_num = std::min(r, Int(q - r));
      if (dist_num * ed <= Int(m) * en * q) {
        fail(m, "integer-distance");
        return rep;
      }
      Int gap = abs(q - r - p);
      if (gap * ed <= Int(m + 1) * en * q) {
        fail(m, "alpha-gap");
        return rep;
      }
    }
  }
  rep.passed = true;
  rep.detail = "all indices stable";
  return rep;
}

RhoParam certified(const RhoParam& rho, std::int64_t M) {
  return RhoParam::make(rho.value(), rho.uncertainty(), M);
}

std::pair<Rat, Rat> parse_rho_value(const std::string& expr, int precision) {
  if (precision < 12)
    throw DomainError("precision must be >= 12 decimal places");
  if (precision > 40) throw DomainError("precision must be <= 40 decimal places");

  ParsedExpr pe = parse_expression(expr);
  Int scale = pow10_int(static_cast<unsigned long>(precision));

  Rat value;
  Rat uncertainty;
  if (pe.irr.empty()) {
    Rat v = pe.exact;
    Int scaled_num = v.get_num() * scale;
    bool exact_in_precision = (scaled_num % v.get_den() == 0);
    if (pe.single_fraction || exact_in_precision) {
      value = v;
      uncertainty = 0;
    } else {
      Int floor_scaled = floor_div(scaled_num, v.get_den());
      value = make_rat(floor_scaled, scale);
      uncertainty = make_rat(Int(1), scale);
    }
  } else {
    // Certified truncation: widen guard digits until floor(lo*10^P) is
    // unambiguous across the enclosure.
    Int floor_scaled;
    bool settled = false;
    for (int guard = 20; guard <= 140 && !settled; guard += 40) {
      Enclosure enc = evaluate_enclosure(pe, precision + guard);
      Int flo = floor_rat(enc.lo * scale), fhi = floor_rat(enc.hi * scale);
      if (flo == fhi) {
        floor_scaled = flo;
        settled = true;
      }
    }
    if (!settled)
      throw DomainError("expression lies too close to the truncation grid");
    value = make_rat(floor_scaled, scale);
    uncertainty = make_rat(Int(1), scale);
  }

  if (value <= 0 || value >= 1)
    throw DomainError("parameter expression evaluates outside (0,1)");
  return {value, uncertainty};
}

RhoParam parse_rho(const std::string& expr, int precision, std::int64_t window) {
  auto [value, uncertainty] = parse_rho_value(expr, precision);

  const Int& q = value.get_den();
  if (window == 0) {
    Int cap = q - 2;
    std::int64_t w = kDefaultWindow;
    if (cap < w) w = to_i64(cap);
    if (w < 1)
      throw DomainError("denominator too small to certify any window");
    if (uncertainty == 0) return RhoParam::make(value, uncertainty, w);
    // Best effort: keep the largest passing prefix. make() at window 1
    // throws if even the first index is unstable.
    RhoParam probe = RhoParam::make(value, uncertainty, 1);
    CertificationReport rep = certify_stability(probe, w);
    return RhoParam::make(value, uncertainty,
                          rep.passed ? w : rep.first_failure - 1);
  }

  if (Int(window) >= q)
    throw DomainError("denominator <= requested max_safe_index; increase precision");
  return RhoParam::make(value, uncertainty, window);
}

Int ceil_mul(const RhoParam& rho, std::int64_t m) {
  if (m < 0 || m > rho.max_safe_index())
    throw DomainError("index outside certified window in ceil_mul");
  if (m == 0) return 0;
  std::int64_t r = residue(rho, m);
  // r != 0 for 0 < m < q with p/q reduced.
  return (Int(m) * rho.num() + (rho.den() - r)) / rho.den();
}

Rat alpha(const RhoParam& rho, std::int64_t m) {
  if (m < 0 || m > rho.max_safe_index())
    throw DomainError("index outside certified window in alpha");
  if (m == 0) return Rat(0);
  std::int64_t r = residue(rho, m);
  return make_rat(rho.den() - r, rho.den());
}

bool member_index_set(const RhoParam& rho, std::int64_t m) {
  if (m == 0) return true;
  if (m < 0 || m > rho.max_safe_index())
    throw DomainError("index outside certified window in member_index_set");
  std::int64_t r = residue(rho, m);
  return Int(r) > rho.den() - rho.num();
}

}  // namespace rotset
