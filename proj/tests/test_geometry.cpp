#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rotset/diagonal.hpp"
#include "rotset/geometry.hpp"
#include "rotset/rho.hpp"

using namespace rotset;

namespace {
HullPolygon brute_hull(const RhoParam& r, std::int64_t bound, int quadrants) {
  PointFamily fam = gen_family(r, bound, quadrants);
  std::vector<RatPoint> pts = fam.anchors;
  for (const auto& p : fam.points) pts.push_back({p.x, p.y});
  return convex_hull(pts);
}
}  // namespace

TEST_CASE("convex hull of simple point sets") {
  std::vector<RatPoint> square{{Rat(0), Rat(0)}, {Rat(1), Rat(0)},
                               {Rat(1), Rat(1)}, {Rat(0), Rat(1)},
                               {make_rat(1, 2), make_rat(1, 2)},   // interior
                               {make_rat(1, 2), Rat(0)}};          // edge
  HullPolygon h = convex_hull(square);
  CHECK(h.vertices.size() == 4);
  CHECK(h.area == Rat(1));
  // CCW from the lexicographic minimum
  CHECK(h.vertices[0] == RatPoint{Rat(0), Rat(0)});
  CHECK(h.vertices[1] == RatPoint{Rat(1), Rat(0)});
  CHECK(h.vertices[2] == RatPoint{Rat(1), Rat(1)});
  CHECK(h.vertices[3] == RatPoint{Rat(0), Rat(1)});
}

TEST_CASE("hull containment: interior, boundary, exterior") {
  std::vector<RatPoint> tri{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
  HullPolygon h = convex_hull(tri);
  CHECK(hull_contains(h, {make_rat(1, 2), make_rat(1, 2)}));
  CHECK(hull_contains(h, {Rat(1), Rat(1)}));      // on the hypotenuse
  CHECK(hull_contains(h, {Rat(0), Rat(0)}));      // vertex
  CHECK(hull_contains(h, {Rat(1), Rat(0)}));      // edge
  CHECK(!hull_contains(h, {Rat(2), Rat(2)}));
  CHECK(!hull_contains(h, {Rat(-1), Rat(0)}));
  CHECK(!hull_contains(h, {make_rat(201, 100), Rat(0)}));
}

TEST_CASE("hull_contains_within dilates by exact distance") {
  std::vector<RatPoint> tri{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
  HullPolygon h = convex_hull(tri);
  CHECK(hull_contains_within(h, {make_rat(21, 10), Rat(0)}, make_rat(1, 10)));
  CHECK(!hull_contains_within(h, {make_rat(22, 10), Rat(0)}, make_rat(1, 10)));
  // diagonal dilation: point at distance sqrt(2)/20 from the hypotenuse
  CHECK(hull_contains_within(h, {make_rat(21, 20), make_rat(21, 20)},
                             make_rat(1, 10)));
  CHECK(!hull_contains_within(h, {make_rat(11, 10), make_rat(11, 10)},
                              make_rat(1, 10)));
  CHECK(hull_contains_within(h, {Rat(1), Rat(1)}, Rat(0)));
}

TEST_CASE("pruned hull equals the brute-force hull") {
  for (const char* expr : {"0.719304857162", "0.283177441092"}) {
    RhoParam r = parse_rho(expr);
    for (int quadrants : {1, 4}) {
      HullPolygon fast = family_hull(r, 400, quadrants);
      HullPolygon brute = brute_hull(r, 400, quadrants);
      CHECK(fast.vertices == brute.vertices);
      CHECK(fast.area == brute.area);
    }
  }
}

TEST_CASE("hull is symmetric about the diagonal") {
  RhoParam r = parse_rho("0.719304857162");
  HullPolygon h = family_hull(r, 500, 1);
  std::vector<RatPoint> swapped;
  for (const auto& v : h.vertices) swapped.push_back({v.y, v.x});
  std::sort(swapped.begin(), swapped.end(), [](const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<RatPoint> orig = h.vertices;
  std::sort(orig.begin(), orig.end(), [](const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  CHECK(orig == swapped);
}

TEST_CASE("four-quadrant hull area is four times the one-quadrant area") {
  RhoParam r = parse_rho("0.719304857162");
  CHECK(family_hull(r, 300, 4).area == 4 * family_hull(r, 300, 1).area);
}

TEST_CASE("anchors are hull vertices") {
  RhoParam r = parse_rho("0.847219530114");
  HullPolygon h = family_hull(r, 300, 1);
  auto has = [&](const RatPoint& p) {
    return std::find(h.vertices.begin(), h.vertices.end(), p) != h.vertices.end();
  };
  CHECK(has({Rat(0), Rat(0)}));
  CHECK(has({r.value(), Rat(0)}));
  CHECK(has({Rat(0), r.value()}));
}

TEST_CASE("extreme points returns exactly the family points on the hull") {
  RhoParam r = parse_rho("0.719304857162");
  PointFamily fam = gen_family(r, 120, 1);
  HullPolygon h = family_hull(r, 120, 1);
  std::vector<LatticePoint> ext = extreme_points(fam);
  for (const auto& pt : ext) {
    RatPoint p{pt.x, pt.y};
    CHECK(std::find(h.vertices.begin(), h.vertices.end(), p) != h.vertices.end());
  }
  // distinct extreme points match the hull vertices minus the two closure
  // anchors (rho, 0) and (0, rho), which are limits rather than family
  // points; (0, 0) is the index-(0, 0) family point and stays on both sides
  std::vector<RatPoint> uniq;
  for (const auto& pt : ext) {
    RatPoint p{pt.x, pt.y};
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  std::size_t anchor_vertices = 0;
  for (const auto& v : h.vertices) {
    if ((v.x == r.value() && v.y == 0) || (v.x == 0 && v.y == r.value()))
      ++anchor_vertices;
  }
  CHECK(anchor_vertices == 2);
  CHECK(uniq.size() == h.vertices.size() - anchor_vertices);
}

TEST_CASE("slope formula and its supremum") {
  RhoParam r = parse_rho("0.719304857162");
  // direct formula check
  for (std::int64_t m : {1, 2, 5, 11})
    for (std::int64_t n : {1, 3, 7}) {
      Rat expect = Rat(-1) + (alpha(r, m) + alpha(r, n) - r.value()) /
                                 Rat(ceil_mul(r, m));
      CHECK(slope_gamma(r, m, n) == expect);
    }
  CHECK(gamma_limit(r) == -r.value() * Rat(r.floor_inv()));

  SlopeSupremum sup = gamma_supremum(r, 3000);
  CHECK(sup.strictly_below);
  CHECK(sup.max_gamma < sup.limit);
  // brute force over all admissible pairs up to 150
  Rat best = slope_gamma(r, 1, 1);
  for (std::int64_t m = 1; m <= 150; ++m) {
    if (!member_index_set(r, m)) continue;
    for (std::int64_t n = 1; n <= 150; ++n) {
      if (!member_index_set(r, n)) continue;
      best = std::max(best, slope_gamma(r, m, n));
    }
  }
  SlopeSupremum sup150 = gamma_supremum(r, 150);
  CHECK(sup150.max_gamma == best);
  CHECK(slope_gamma(r, sup150.arg_m, sup150.arg_n) == best);
}

TEST_CASE("gamma supremum approaches the limit from below") {
  for (const char* expr : {"0.719304857162", "0.283177441092"}) {
    RhoParam r = parse_rho(expr);
    SlopeSupremum sup = gamma_supremum(r, 100000);
    CHECK(sup.strictly_below);
    CHECK(abs_rat(sup.limit - sup.max_gamma) < make_rat(1, 1000));
  }
}

TEST_CASE("inscribed circle stays inside the scaled hull") {
  RhoParam r = parse_rho("0.719304857162");
  CircleReport rep = verify_circle_containment(r, 3000);
  CHECK(rep.ok);
  CHECK(rep.checked_pairs > 0);
  CHECK(!rep.violation.has_value());
}

TEST_CASE("difference points land in the four-quadrant hull") {
  RhoParam r = parse_rho("0.719304857162");
  ClaimReport rep = claim_equivalence_check(r, 41, 10);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK_THROWS_AS(claim_equivalence_check(r, 10, 10), DomainError);
  CHECK_THROWS_AS(claim_equivalence_check(r, 200, 50), DomainError);
}

TEST_CASE("family generation respects quadrant signs and dedupe") {
  RhoParam r = parse_rho("0.719304857162");
  PointFamily f1 = gen_family(r, 40, 1);
  PointFamily f4 = gen_family(r, 40, 4);
  CHECK(f4.points.size() > f1.points.size());
  for (const auto& p : f1.points) {
    CHECK(p.x >= 0);
    CHECK(p.y >= 0);
  }
  // sign expansion must not duplicate points with zero coordinates:
  // every (m, n, x, y) tuple appears once
  std::vector<std::tuple<std::int64_t, std::int64_t, Rat, Rat>> keys;
  for (const auto& p : f4.points) keys.push_back({p.m, p.n, p.x, p.y});
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  // zero-coordinate points never carry a negative sign on that coordinate
  for (const auto& p : f4.points) {
    if (p.x == 0) CHECK(p.sign_x == 1);
    if (p.y == 0) CHECK(p.sign_y == 1);
  }
}
