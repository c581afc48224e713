#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotset/diagonal.hpp"
#include "rotset/index_sets.hpp"
#include "rotset/rho.hpp"

using namespace rotset;

TEST_CASE("pinned high-regime diagonal") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  DiagonalReport rep = best_diagonal(r);
  CHECK(rep.d == make_rat(13, 27));
  CHECK(rep.realizing_index == 13);
  CHECK(rep.regime == Regime::High);
}

TEST_CASE("pinned low-regime diagonal") {
  RhoParam r = parse_rho("0.31 + pi*1e-5", 12);
  DiagonalReport rep = best_diagonal(r);
  CHECK(rep.d == make_rat(4, 25));
  CHECK(rep.realizing_index == 12);
  CHECK(rep.regime == Regime::Low);
}

TEST_CASE("diagonal maximizes x over the diagonal family points") {
  for (const char* expr :
       {"0.719304857162", "0.563901284756", "0.391028475610", "0.137465012894"}) {
    RhoParam r = parse_rho(expr);
    DiagonalReport rep = best_diagonal(r);
    Rat best(0);  // n = 0 contributes the origin, value 0
    std::int64_t arg = 0;
    for (std::int64_t n = 1; n <= 3000; ++n) {
      if (!member_index_set(r, n)) continue;  // A_{n,n} needs n admissible
      Rat x = Rat(ceil_mul(r, n)) / Rat(2 * n + 1);
      if (x > best) {
        best = x;
        arg = n;
      }
    }
    CHECK(rep.d == best);
    CHECK(Rat(ceil_mul(r, rep.realizing_index)) /
              Rat(2 * rep.realizing_index + 1) ==
          best);
    CHECK(rep.realizing_index == arg);
  }
}

TEST_CASE("straddle inequalities are strict") {
  for (const char* expr : {"0.501234567891", "0.847219530114", "0.998123456789",
                           "0.052134567891", "0.283177441092", "0.419306582113"}) {
    RhoParam r = parse_rho(expr);
    DiagonalReport rep = best_diagonal(r);
    CHECK(rep.d > r.value() / 2);
    if (r.high_regime())
      CHECK(rep.d < make_rat(2, 3) * r.value());
    else
      CHECK(rep.d < make_rat(3, 5) * r.value());
    CHECK(rep.d < make_rat(1, 2));
  }
}

TEST_CASE("u sequence vanishes up to the threshold") {
  RhoParam r = parse_rho("0.645 + pi*1e-5", 12);
  std::int64_t kt = k_threshold(r);
  CHECK(kt == 4);
  for (std::int64_t k = 0; k <= kt; ++k) CHECK(u_seq(r, k) == 0);
  CHECK(u_seq(r, kt + 1) > 0);

  RhoParam s = parse_rho("0.61", 12);
  CHECK(k_threshold(s) == 1);
}

TEST_CASE("v sequence vanishes up to the threshold") {
  RhoParam r = parse_rho("0.395 + pi*1e-5", 12);
  std::int64_t jt = j_threshold(r);
  CHECK(jt == 8);
  for (std::int64_t j = 1; j <= jt; ++j) CHECK(v_seq(r, j) == 0);
  CHECK(v_seq(r, jt + 1) > 0);
}

TEST_CASE("interval tags cover the eight parameter classes") {
  auto tag_of = [](const char* expr) {
    RhoParam r = parse_rho(expr, 12);
    DiagonalReport rep = extremality(r);
    REQUIRE(rep.interval_tag.has_value());
    return std::pair(rep.interval_tag->kind, rep.classification.value());
  };
  using K = IntervalTag::Kind;
  CHECK(tag_of("0.55") ==
        std::pair(K::HalfToThreeFifths, Classification::Extreme));
  CHECK(tag_of("0.645 + pi*1e-5") ==
        std::pair(K::ThreeFifthsToTwoThirds, Classification::NotExtreme));
  CHECK(tag_of("0.93 + pi*1e-5") ==
        std::pair(K::TwoThirdsToOne, Classification::Extreme));
  CHECK(tag_of("0.36") == std::pair(K::NarrowLow, Classification::Extreme));
  CHECK(tag_of("0.26") == std::pair(K::NarrowLow, Classification::Extreme));
  CHECK(tag_of("0.395 + pi*1e-5") ==
        std::pair(K::WideLow, Classification::NotExtreme));
  CHECK(tag_of("0.281") == std::pair(K::WideLow, Classification::NotExtreme));
  CHECK(tag_of("0.31 + pi*1e-5") ==
        std::pair(K::OutsideLowFamily, Classification::Extreme));
  CHECK(tag_of("0.43") ==
        std::pair(K::OutsideLowFamily, Classification::Extreme));
}

TEST_CASE("non-extreme edge endpoints sit symmetric about the diagonal") {
  for (const char* expr : {"0.645 + pi*1e-5", "0.395 + pi*1e-5", "0.281"}) {
    RhoParam r = parse_rho(expr, 12);
    DiagonalReport rep = extremality(r);
    REQUIRE(rep.classification == Classification::NotExtreme);
    REQUIRE(rep.edge_endpoints.has_value());
    const auto& [e1, e2] = *rep.edge_endpoints;
    CHECK(e1.x + e1.y == 2 * rep.d);
    CHECK(e2.x + e2.y == 2 * rep.d);
    CHECK(e1.x == e2.y);
    CHECK(e1.y == e2.x);
    CHECK(e1.x < e2.x);          // smaller x first
    CHECK(e1.x < rep.d);         // (d, d) lies strictly between them
  }
}

TEST_CASE("pinned wide-low endpoints") {
  RhoParam r = parse_rho("0.395 + pi*1e-5", 12);
  DiagonalReport rep = extremality(r);
  CHECK(rep.d == make_rat(1, 5));
  const auto& [e1, e2] = *rep.edge_endpoints;
  CHECK(e1.x == make_rat(1, 40));
  CHECK(e1.y == make_rat(15, 40));
  CHECK(e2.x == make_rat(3, 8));
}

TEST_CASE("strict domination holds with the closed-form equality set") {
  RhoParam r = parse_rho("0.645 + pi*1e-5", 12);
  DominationReport dom = verify_strict_domination(r, 2000);
  CHECK(dom.ok);
  CHECK(!dom.violation.has_value());
  // equality pairs are exactly the products of N_k, k <= k_threshold
  std::vector<std::pair<std::int64_t, std::int64_t>> expect;
  std::vector<std::int64_t> nk{1, 4, 7, 10, 13};  // N_0 .. N_4
  for (std::size_t i = 0; i < nk.size(); ++i)
    for (std::size_t j = i; j < nk.size(); ++j) expect.push_back({nk[i], nk[j]});
  std::sort(expect.begin(), expect.end());
  auto got = dom.equality_pairs;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("extreme parameters touch the diagonal only at the realizing pair") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  DominationReport dom = verify_strict_domination(r, 2000);
  CHECK(dom.ok);
  REQUIRE(dom.equality_pairs.size() == 1);
  CHECK(dom.equality_pairs[0] == std::pair<std::int64_t, std::int64_t>(13, 13));
}
