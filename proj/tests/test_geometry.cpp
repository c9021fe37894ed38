#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nca/errors.hpp"
#include "nca/geometry.hpp"

using namespace nca;
using namespace nca::test;

TEST_SUITE("rational") {
  TEST_CASE("parse fractions, integers and decimals exactly") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-2.5e-3") == Rational(-1, 400));
    CHECK(parse_rational("1.5E2") == Rational(150));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
  }
  TEST_CASE("text round trip") {
    for (const char* s : {"0", "1", "-5/3", "123456789012345678901234567891/2"})
      CHECK(to_string(parse_rational(s)) == s);
  }
  TEST_CASE("powers and bit lengths") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(BigInt(10), 0) == 1);
    CHECK(bit_length(BigInt(1)) == 1);
    CHECK(bit_length(BigInt(16)) == 5);
  }
}

TEST_SUITE("geometry") {
  TEST_CASE("orientation examples") {
    CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
    CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
    CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
  }

  TEST_CASE("orientation of huge coordinates leaves the fast path correctly") {
    const Rational big("123456789012345678901234567890");
    const Position a = Position::plane(0, 0), b = Position::plane(big, big + 1), c = Position::plane(2 * big, 2 * big + 2);
    CHECK(orientation(a, b, c) == Orientation::Collinear);
    CHECK(orientation(a, b, Position::plane(2 * big, 2 * big + 3)) == Orientation::CCW);
  }

  TEST_CASE("crossing examples per space") {
    CHECK(segments_properly_cross({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}));
    CHECK(segments_properly_cross({C(1, 10), C(1, 2)}, {C(3, 10), C(7, 10)}));
    CHECK_FALSE(segments_properly_cross({L(0), L(1)}, {L(2), L(3)}));
    CHECK(segments_properly_cross({L(0), L(3)}, {L(1), L(2)}));
    // shared endpoints never count as a proper crossing
    CHECK_FALSE(segments_properly_cross({P(0, 0), P(1, 0)}, {P(0, 0), P(0, 1)}));
    CHECK_FALSE(segments_properly_cross({C(0), C(1, 2)}, {C(1, 2), C(3, 4)}));
  }

  TEST_CASE("circular side examples") {
    CHECK(circular_side(C(0), C(1, 2), C(1, 4)) == ArcSide::AB);
    CHECK(circular_side(C(0), C(1, 2), C(3, 4)) == ArcSide::BA);
    CHECK(circular_side(C(1, 8), C(5, 8), C(1, 2)) == ArcSide::AB);
  }

  TEST_CASE("arc midpoint examples") {
    CHECK(arc_midpoint(C(0), C(1, 2), Turn::CCW) == C(1, 4));
    CHECK(arc_midpoint(C(1, 2), C(0), Turn::CCW) == C(3, 4));
    CHECK(arc_midpoint(C(7, 8), C(1, 8), Turn::CCW) == C(0));
    CHECK(arc_midpoint(C(1, 8), C(7, 8), Turn::CW) == C(0));
  }

  TEST_CASE("general position examples") {
    std::vector<Position> collinear{P(0, 0), P(1, 0), P(2, 0)};
    auto r = general_position_check(collinear);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == GeneralPositionViolation::Kind::Collinear);
    std::vector<Position> square{P(0, 0), P(1, 0), P(0, 1), P(1, 1)};
    CHECK(general_position_check(square).ok());
    std::vector<Position> dup{P(0, 0), P(0, 0)};
    r = general_position_check(dup);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].kind == GeneralPositionViolation::Kind::Duplicate);
    std::vector<Position> circ{C(1, 3), C(4, 3)};
    CHECK_FALSE(general_position_check(circ).ok());
  }

  TEST_CASE("crossing is symmetric and endpoint-order free") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int it = 0; it < 2000; ++it) {
      Position a = P(d(rng), d(rng)), b = P(d(rng), d(rng)), c = P(d(rng), d(rng)), e = P(d(rng), d(rng));
      if (a == b || c == e) continue;
      const bool x = segments_properly_cross({a, b}, {c, e});
      CHECK(x == segments_properly_cross({c, e}, {a, b}));
      CHECK(x == segments_properly_cross({b, a}, {c, e}));
      CHECK(x == segments_properly_cross({a, b}, {e, c}));
      CHECK(orientation(a, b, c) == static_cast<Orientation>(-static_cast<int>(orientation(a, c, b))));
    }
  }

  TEST_CASE("plane and circle crossing agree for points on a common circle") {
    // Rational points on the unit circle from s: ((1-s^2)/(1+s^2), 2s/(1+s^2)).
    // The angle grows with s, so circular order is the order of s.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-999, 999);
    int checked = 0;
    while (checked < 1000) {
      long s[4];
      for (auto& v : s) v = d(rng);
      if (s[0] == s[1] || s[0] == s[2] || s[0] == s[3] || s[1] == s[2] || s[1] == s[3] || s[2] == s[3]) continue;
      std::vector<Position> plane, circ;
      for (int i = 0; i < 4; ++i) {
        const Rational q = make_rational(s[i], 100);
        const Rational den = 1 + q * q;
        plane.push_back(Position::plane(Rational((1 - q * q) / den), Rational(2 * q / den)));
        circ.push_back(Position::circle(make_rational(s[i] + 1000, 2000)));
      }
      CHECK(segments_properly_cross({plane[0], plane[1]}, {plane[2], plane[3]}) ==
            segments_properly_cross({circ[0], circ[1]}, {circ[2], circ[3]}));
      ++checked;
    }
  }

  TEST_CASE("arc lengths") {
    CHECK(ccw_arc_length(Rational(3, 4), Rational(1, 4)) == Rational(1, 2));
    CHECK(ccw_arc_length(Rational(1, 4), Rational(1, 4)) == 1);
  }
}
