#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nca/errors.hpp"
#include "nca/offline.hpp"

using namespace nca;
using namespace nca::test;

TEST_SUITE("offline") {
  TEST_CASE("opt value") {
    CHECK(opt_value(unit_points({P(0, 0), P(1, 0), P(0, 1), P(1, 1)})) == 4);
    std::vector<WeightedPoint> w{{1, P(0, 0), 1}, {2, P(1, 0), 1}, {3, P(0, 1), 5}, {4, P(1, 1), 5}};
    CHECK(opt_value(w) == 12);
    CHECK(opt_value({}) == 0);
  }

  TEST_CASE("brute force on the unit square picks two sides") {
    auto sq = unit_points({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
    auto m = brute_force_perfect_nm(sq);
    CHECK(m.total_length == doctest::Approx(2.0));
    CHECK(m.edges.size() == 2);
    CHECK_FALSE(m.edges.contains(Edge(1, 3)));
    CHECK(validate_non_crossing(sq, m.edges).empty());
    // a slightly wider rectangle must use the short sides
    auto rect = unit_points({P(0, 0), P(3, 0), P(3, 2), P(0, 2)});
    CHECK(brute_force_perfect_nm(rect).edges == std::set<Edge>{Edge(1, 4), Edge(2, 3)});
  }

  TEST_CASE("two points give the single edge") {
    auto two = unit_points({P(0, 0), P(5, 7)});
    CHECK(brute_force_perfect_nm(two).edges == std::set<Edge>{Edge(1, 2)});
    CHECK(split_perfect_nm(two).edges == std::set<Edge>{Edge(1, 2)});
  }

  TEST_CASE("brute force rejects large and odd inputs") {
    CHECK_THROWS_AS(brute_force_perfect_nm(random_plane_instance(16, 1)), Error);
    CHECK_THROWS_AS(brute_force_perfect_nm(random_plane_instance(5, 1)), Error);
  }

  TEST_CASE("brute force minimum is non-crossing and no longer than any other matching") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      auto pts = random_plane_instance(2 * (1 + seed % 4), seed);
      auto m = brute_force_perfect_nm(pts);
      REQUIRE(is_perfect(pts.size(), m.edges));
      REQUIRE(validate_non_crossing(pts, m.edges).empty());
      // the split construction is one particular perfect matching
      auto s = split_perfect_nm(pts);
      double len = 0;
      for (const Edge& e : s.edges) {
        const auto& a = pts[e.a - 1].pos.as_plane();
        const auto& b = pts[e.b - 1].pos.as_plane();
        len += std::hypot(to_double(a.x) - to_double(b.x), to_double(a.y) - to_double(b.y));
      }
      REQUIRE(m.total_length <= len + 1e-6);
    }
  }

  TEST_CASE("split construction: convex position and agreement with brute force") {
    auto convex = unit_points({P(0, 0), P(4, 1), P(5, 5), P(1, 4)});
    auto m = split_perfect_nm(convex);
    CHECK(is_perfect(4, m.edges));
    CHECK(validate_non_crossing(convex, m.edges).empty());
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      auto pts = random_plane_instance(8, seed + 7);
      auto s = split_perfect_nm(pts);
      auto b = brute_force_perfect_nm(pts);
      REQUIRE(is_perfect(8, s.edges));
      REQUIRE(validate_non_crossing(pts, s.edges).empty());
      REQUIRE(is_perfect(8, b.edges));
    }
  }

  TEST_CASE("split construction scales to 200 points") {
    for (std::size_t n : {20u, 60u, 120u, 200u}) {
      auto pts = random_plane_instance(n, n);
      auto s = split_perfect_nm(pts);
      CHECK(is_perfect(n, s.edges));
      CHECK(validate_non_crossing(pts, s.edges).empty());
    }
  }

  TEST_CASE("validator examples") {
    auto sq = unit_points({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
    CHECK(validate_non_crossing(sq, {Edge(1, 2), Edge(3, 4)}).empty());
    CHECK(validate_non_crossing(sq, {Edge(1, 3), Edge(2, 4)}).size() == 1);
    auto line = unit_points({L(0), L(3), L(1), L(2)});
    CHECK(validate_non_crossing(line, {Edge(1, 2), Edge(3, 4)}).size() == 1);
    CHECK(validate_non_crossing(sq, {Edge(1, 2), Edge(2, 3)}).size() == 1);  // shared endpoint
  }

  TEST_CASE("perfection") {
    CHECK(is_perfect(4, {Edge(1, 2), Edge(3, 4)}));
    CHECK_FALSE(is_perfect(4, {Edge(1, 2)}));
    CHECK_FALSE(is_perfect(4, {Edge(1, 2), Edge(2, 3)}));
  }

  TEST_CASE("empirical ratio examples") {
    RunOutcome a;
    a.total_weight = 12;
    a.matched_weight = 4;
    std::vector<RunOutcome> one{a};
    auto s = empirical_ratio(one);
    CHECK(s.ratios.at(0) == Rational(1, 3));
    CHECK(s.min == Rational(1, 3));

    RunOutcome full;
    full.total_weight = full.matched_weight = 4;
    std::vector<RunOutcome> all{full, full, full};
    s = empirical_ratio(all);
    CHECK(s.mean == 1.0);
    CHECK(s.half_width == 0.0);

    RunOutcome b;
    b.total_weight = 3;
    b.matched_weight = 2;
    std::vector<RunOutcome> two{a, b};
    CHECK(empirical_ratio(two).mean == doctest::Approx(0.5));
    CHECK_THROWS_AS(empirical_ratio(std::vector<RunOutcome>{}), Error);
  }
}
