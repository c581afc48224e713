#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotset/rho.hpp"

using namespace rotset;

TEST_CASE("exact fraction parses with zero uncertainty") {
  RhoParam r = parse_rho("7/10");
  CHECK(r.value() == make_rat(7, 10));
  CHECK(r.uncertainty() == 0);
  CHECK(r.max_safe_index() == 8);  // q - 2
  CHECK(r.high_regime());
}

TEST_CASE("exact decimal parses with zero uncertainty") {
  RhoParam r = parse_rho("0.93");
  CHECK(r.value() == make_rat(93, 100));
  CHECK(r.uncertainty() == 0);
  CHECK(r.max_safe_index() == 98);
}

TEST_CASE("irrational expression truncates to the precision grid") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  CHECK(r.value() == make_rat(Int("930031415926"), Int("1000000000000")));
  CHECK(r.uncertainty() == make_rat(Int(1), Int("1000000000000")));
  CHECK(r.max_safe_index() == 100000);

  RhoParam s = parse_rho("0.31 + pi*1e-5", 12);
  CHECK(s.value() == make_rat(Int("310031415926"), Int("1000000000000")));
  CHECK(!s.high_regime());
  CHECK(s.floor_inv() == 3);
}

TEST_CASE("precision controls the truncation grid") {
  RhoParam r = parse_rho("pi*1e-1", 15);
  // pi/10 = 0.314159265358979(3...)
  CHECK(r.value() == make_rat(Int("314159265358979"), Int("1000000000000000")));
  RhoParam r12 = parse_rho("pi*1e-1", 12);
  CHECK(r12.value() == make_rat(Int("314159265358"), Int("1000000000000")));
}

TEST_CASE("sqrt terms evaluate and perfect squares fold to rationals") {
  RhoParam r = parse_rho("sqrt(2)*1e-1", 12);
  // sqrt(2)/10 = 0.1414213562373095...
  CHECK(r.value() == make_rat(Int("141421356237"), Int("1000000000000")));
  CHECK(r.uncertainty() == make_rat(Int(1), Int("1000000000000")));

  RhoParam sq = parse_rho("sqrt(4)*0.15", 12);
  CHECK(sq.value() == make_rat(3, 10));
  CHECK(sq.uncertainty() == 0);
}

TEST_CASE("sum and difference of terms") {
  RhoParam r = parse_rho("1/2 - 3/20");
  CHECK(r.value() == make_rat(7, 20));
  RhoParam s = parse_rho("0.6 - pi*1e-5", 12);
  CHECK(s.value() == make_rat(Int("599968584073"), Int("1000000000000")));
}

TEST_CASE("precision out of range is rejected") {
  CHECK_THROWS_AS(parse_rho("0.7", 11), DomainError);
  CHECK_THROWS_AS(parse_rho("0.7", 41), DomainError);
}

TEST_CASE("values outside (0,1) are rejected") {
  CHECK_THROWS_AS(parse_rho("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rho("-0.25"), DomainError);
  CHECK_THROWS_AS(parse_rho("0"), DomainError);
  CHECK_THROWS_AS(parse_rho("1"), DomainError);
}

TEST_CASE("formula-dispatch boundaries are rejected") {
  // p = 1 and q - p = 1 families, p = 2 and the p = 3, q % 3 == 2 family
  CHECK_THROWS_AS(parse_rho("1/2"), DomainError);
  CHECK_THROWS_AS(parse_rho("1/3"), DomainError);
  CHECK_THROWS_AS(parse_rho("2/3"), DomainError);
  CHECK_THROWS_AS(parse_rho("3/5"), DomainError);
  CHECK_THROWS_AS(parse_rho("2/5"), DomainError);
  CHECK_THROWS_AS(parse_rho("3/8"), DomainError);
  CHECK_THROWS_AS(parse_rho("4/5"), DomainError);
  CHECK_THROWS_AS(parse_rho("0.6", 12), DomainError);  // reduces to 3/5
  // nearby interior points are fine
  CHECK_NOTHROW(parse_rho("3/7"));
  CHECK_NOTHROW(parse_rho("0.61", 12));
}

TEST_CASE("explicit window is honored and validated") {
  RhoParam r = parse_rho("0.93", 15, 50);
  CHECK(r.max_safe_index() == 50);
  CHECK_THROWS_AS(parse_rho("7/10", 15, 100), DomainError);  // q = 10
}

TEST_CASE("certification scan reports the first unstable index") {
  CertificationReport rep =
      certify_stability(make_rat(93, 100), make_rat(1, 100), 100);
  CHECK(!rep.passed);
  CHECK(rep.first_failure == 12);
  CHECK(rep.detail.find("alpha-gap") != std::string::npos);

  // with zero uncertainty the scan only fails at q - 1
  CertificationReport exact = certify_stability(make_rat(93, 100), Rat(0), 200);
  CHECK(!exact.passed);
  CHECK(exact.first_failure == 99);

  CertificationReport ok = certify_stability(make_rat(93, 100), Rat(0), 98);
  CHECK(ok.passed);
}

TEST_CASE("auto window keeps the largest passing prefix") {
  // with uncertainty 1e-12 the full default window certifies
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  CHECK(r.max_safe_index() == kDefaultWindow);
  CertificationReport rep = certify_stability(r, r.max_safe_index());
  CHECK(rep.passed);
}

TEST_CASE("kernel values at an exact rational") {
  RhoParam r = parse_rho("7/10");
  CHECK(alpha(r, 0) == Rat(0));
  CHECK(member_index_set(r, 0));
  CHECK(ceil_mul(r, 0) == 0);
  CHECK(alpha(r, 1) == make_rat(3, 10));
  CHECK(alpha(r, 3) == make_rat(9, 10));
  CHECK(!member_index_set(r, 3));
  CHECK(member_index_set(r, 4));
  CHECK(ceil_mul(r, 4) == 3);
  // alpha_m = ceil(m rho) - m rho identically
  for (std::int64_t m = 0; m <= 8; ++m)
    CHECK(alpha(r, m) == Rat(ceil_mul(r, m)) - Rat(m) * r.value());
  CHECK_THROWS_AS(alpha(r, 9), DomainError);
  CHECK_THROWS_AS(ceil_mul(r, -1), DomainError);
}

TEST_CASE("mirror identity links the two regimes") {
  RhoParam hi = parse_rho("0.700000000001");
  RhoParam lo = parse_rho("0.299999999999");
  CHECK(hi.value() + lo.value() == Rat(1));
  for (std::int64_t m = 1; m <= 2000; ++m)
    CHECK(member_index_set(hi, m) == !member_index_set(lo, m));
}

TEST_CASE("certified rebuilds the window") {
  RhoParam r = parse_rho("0.93", 15, 20);
  RhoParam wide = certified(r, 98);
  CHECK(wide.max_safe_index() == 98);
  CHECK_THROWS(certified(r, 99));  // alpha_{99} = rho exactly
}

TEST_CASE("parse_rho_value exposes the surrogate without a window") {
  auto [v, u] = parse_rho_value("0.93 + pi*1e-5", 12);
  CHECK(v == make_rat(Int("930031415926"), Int("1000000000000")));
  CHECK(u == make_rat(Int(1), Int("1000000000000")));
  auto [v2, u2] = parse_rho_value("1/2");  // boundary, but value extraction works
  CHECK(v2 == make_rat(1, 2));
  CHECK(u2 == 0);
}

TEST_CASE("malformed expressions are rejected") {
  CHECK_THROWS(parse_rho("0.5 +"));
  CHECK_THROWS(parse_rho("foo"));
  CHECK_THROWS(parse_rho("sqrt(-1)"));
  CHECK_THROWS(parse_rho("1/0"));
  CHECK_THROWS(parse_rho(""));
}
