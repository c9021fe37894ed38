#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nca/rational.hpp"

namespace nca {

enum class Space { Plane, Circle, Line };

std::string_view to_string(Space space);
Space parse_space(std::string_view name);

struct PlanePos {
  Rational x, y;
  friend bool operator==(const PlanePos&, const PlanePos&) = default;
};

/// Arc position as a fraction of a full counter-clockwise turn, in [0, 1).
struct CirclePos {
  Rational t;
  friend bool operator==(const CirclePos&, const CirclePos&) = default;
};

struct LinePos {
  Rational x;
  friend bool operator==(const LinePos&, const LinePos&) = default;
};

class Position {
 public:
  static Position plane(Rational x, Rational y);
  /// Reduces `t` modulo 1.
  static Position circle(Rational t);
  static Position line(Rational x);

  Space space() const { return static_cast<Space>(value_.index()); }
  const PlanePos& as_plane() const;
  const CirclePos& as_circle() const;
  const LinePos& as_line() const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  explicit Position(std::variant<PlanePos, CirclePos, LinePos> v) : value_(std::move(v)) {}
  std::variant<PlanePos, CirclePos, LinePos> value_;
};

std::string to_string(const Position& p);

struct Segment {
  Position a, b;
  Segment(Position a, Position b);
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of the determinant of (b - a, c - a). Plane positions only.
Orientation orientation(const Position& a, const Position& b, const Position& c);
int orientation_sign(const PlanePos& a, const PlanePos& b, const PlanePos& c);

/// Plane: open segments share a point. Circle: chord endpoints interleave.
/// Line: open intervals intersect (nesting is a crossing).
bool segments_properly_cross(const Segment& s, const Segment& t);
/// Same test on segments (a, b) and (c, d) without building Segment copies.
bool segments_properly_cross(const Position& a, const Position& b, const Position& c, const Position& d);

enum class ArcSide { AB, BA };

/// Which open arc bounded by the chord contains `p`; AB is the
/// counter-clockwise arc from `a` to `b`.
ArcSide circular_side(const Position& a, const Position& b, const Position& p);

enum class Turn { CCW, CW };

/// Point halving the arc from `a` to `b` travelled in direction `dir`.
Position arc_midpoint(const Position& a, const Position& b, Turn dir);

/// Counter-clockwise arc length from `a` to `b`, in (0, 1] (a full turn when equal).
Rational ccw_arc_length(const Rational& a, const Rational& b);

struct GeneralPositionViolation {
  enum class Kind { Duplicate, Collinear } kind;
  std::vector<std::size_t> indices;  // zero-based into the input span
};

struct GeneralPositionReport {
  std::vector<GeneralPositionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Plane: duplicates and collinear triples. Circle/Line: duplicates only.
GeneralPositionReport general_position_check(std::span<const Position> points);

}  // namespace nca
