#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rotset/diagonal.hpp"
#include "rotset/rho.hpp"
#include "rotset/roundness.hpp"

using namespace rotset;

TEST_CASE("closed-form sandwich at the pinned high parameter") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  RoundnessReport rep = roundness(r, 2000);
  CHECK(rep.d == make_rat(13, 27));
  // lower = 4 d / rho exactly
  CHECK(rep.lower_factor == 4 * rep.d / r.value());
  double lf = rat_to_double(rep.lower_factor) / 3.14159265358979323846;
  double uf = rat_to_double(rep.upper_factor) / 3.14159265358979323846;
  CHECK(lf == doctest::Approx(0.659162).epsilon(1e-5));
  CHECK(uf == doctest::Approx(0.659686).epsilon(1e-5));
  REQUIRE(rep.estimate_factor.has_value());
  CHECK(*rep.estimate_factor >= rep.lower_factor);
  CHECK(*rep.estimate_factor <= rep.upper_factor);
}

TEST_CASE("sandwich is exact across both regimes") {
  for (const char* expr : {"0.519304857162", "0.719304857162", "0.931048275610",
                           "0.283177441092", "0.419306582113", "0.137465012894"}) {
    RhoParam r = parse_rho(expr);
    RoundnessReport rep = roundness(r, 4000);
    REQUIRE(rep.estimate_factor.has_value());
    CHECK(rep.lower_factor <= *rep.estimate_factor);
    CHECK(*rep.estimate_factor <= rep.upper_factor);
    CHECK(rep.lower_factor > 0);
    CHECK(rep.gamma == -r.value() * Rat(r.floor_inv()));
    CHECK(Rat(1) + rep.gamma > 0);
  }
}

TEST_CASE("estimate equals the lower bound exactly at the realizing index") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  DiagonalReport diag = best_diagonal(r);
  RoundnessReport rep = roundness(r, diag.realizing_index);
  REQUIRE(rep.estimate_factor.has_value());
  CHECK(*rep.estimate_factor == rep.lower_factor);
}

TEST_CASE("isoperimetric ratio is tied to the lower bound") {
  for (const char* expr : {"0.719304857162", "0.283177441092", "0.55", "0.26"}) {
    RhoParam r = parse_rho(expr, 12);
    RoundnessReport rep = roundness(r);
    // iso = lower * pi * sqrt(2) / 4  <=>  iso_coeff == lower_factor / 4
    CHECK(rep.iso_coeff == rep.lower_factor / 4);
    CHECK(rep.iso_coeff == rep.d / r.value());
    // decimal rendering is a truncation of iso_coeff * sqrt(2)
    double target = rat_to_double(rep.iso_coeff) * std::sqrt(2.0);
    double rendered = std::stod(rep.iso_decimal);
    CHECK(std::abs(rendered - target) < 1e-12);
  }
}

TEST_CASE("iso decimal is deterministic and truncated") {
  RhoParam r = parse_rho("0.719304857162");
  CHECK(iso_ratio_decimal(r, 15) == iso_ratio_decimal(r, 15));
  std::string d15 = iso_ratio_decimal(r, 15);
  std::string d10 = iso_ratio_decimal(r, 10);
  CHECK(d15.substr(0, d10.size()) == d10);  // truncation, not rounding
  CHECK(d10.size() == 2 + 10);              // "0." + digits
}

TEST_CASE("roundness factor approaches 4k/(2k-1) at the block boundaries") {
  // rho -> (k-1)/k from above makes the factor tend to 4k/(2k-1)
  RhoParam r2 = parse_rho("0.500001");
  RoundnessReport rep2 = roundness(r2);
  CHECK(abs_rat(rep2.lower_factor - make_rat(8, 3)) < make_rat(1, 10000));

  RhoParam r3 = parse_rho("2/3 + 1e-6", 15);
  RoundnessReport rep3 = roundness(r3);
  CHECK(abs_rat(rep3.lower_factor - make_rat(12, 5)) < make_rat(1, 10000));
}

TEST_CASE("iso coefficient decreases within a fixed-d window") {
  // on ((k+1)/(k+2), (k+2)/(k+3)) the diagonal d is constant and the
  // coefficient d/rho strictly decreases
  auto coeff = [](const char* expr) {
    RhoParam r = parse_rho(expr);
    RoundnessReport rep = roundness(r);
    return std::pair(rep.d, rep.iso_coeff);
  };
  auto [d1, c1] = coeff("0.68");  // k = 1: (2/3, 3/4)
  auto [d2, c2] = coeff("0.72");
  CHECK(d1 == d2);
  CHECK(c1 > c2);
  auto [d3, c3] = coeff("0.76");  // k = 2: (3/4, 4/5)
  auto [d4, c4] = coeff("0.79");
  CHECK(d3 == d4);
  CHECK(c3 > c4);
  CHECK(d3 > d1);
}

TEST_CASE("pentagon bounds the one-quadrant hull") {
  RhoParam r = parse_rho("0.719304857162");
  std::vector<RatPoint> pent = pentagon_vertices(r);
  REQUIRE(pent.size() == 5);
  CHECK(pent[0] == RatPoint{Rat(0), Rat(0)});
  CHECK(pent[1] == RatPoint{r.value(), Rat(0)});
  CHECK(pent[4] == RatPoint{Rat(0), r.value()});
  // the two support vertices straddle the diagonal symmetrically
  CHECK(pent[2].x == pent[3].y);
  CHECK(pent[2].y == pent[3].x);
  // every hull vertex lies inside the pentagon
  HullPolygon ph = convex_hull(pent);
  HullPolygon hull = family_hull(r, 2000, 1);
  for (const auto& v : hull.vertices) CHECK(hull_contains(ph, v));
}

TEST_CASE("scan walks the grid, clamps windows and skips boundaries") {
  ScanResult res = scan_roundness(make_rat(55, 100), make_rat(65, 100),
                                  make_rat(1, 100), 500);
  // 0.60 reduces to 3/5: a dispatch boundary, skipped
  CHECK(res.rows.size() == 10);
  REQUIRE(res.skipped.size() == 1);
  CHECK(res.skipped[0].first == "0.60");
  for (const auto& row : res.rows) {
    CHECK(row.lower_factor <= row.estimate_factor);
    CHECK(row.estimate_factor <= row.upper_factor);
    CHECK(row.effective_bound <= 500);
    if (row.clamped) CHECK(row.effective_bound < 500);
  }
  // grid labels render with the step's decimal places
  CHECK(res.rows[0].rho_expr == "0.55");
  CHECK(res.rows[1].rho_expr == "0.56");
}

TEST_CASE("scan jump detection flags the regime change") {
  // crossing 1/2 flips the diagonal formula: the factor jumps
  ScanResult res = scan_roundness(make_rat(4985, 10000), make_rat(5015, 10000),
                                  make_rat(1, 10000), 200, 10);
  CHECK(!res.rows.empty());
  // rows on both sides of the half point
  bool has_jump = !res.jump_flags.empty();
  CHECK(has_jump);
}

TEST_CASE("estimate needs the bound to reach the realizing index") {
  RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  DiagonalReport diag = best_diagonal(r);
  RoundnessReport rep = roundness(r, diag.realizing_index - 1);
  // estimate exists but no sandwich guarantee below the realizing index:
  // it must still be positive and below the upper factor
  REQUIRE(rep.estimate_factor.has_value());
  CHECK(*rep.estimate_factor > 0);
  CHECK(*rep.estimate_factor <= rep.upper_factor);
}
