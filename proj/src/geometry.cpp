#include "nca/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nca/errors.hpp"

namespace nca {

std::string_view to_string(Space space) {
  switch (space) {
    case Space::Plane: return "plane";
    case Space::Circle: return "circle";
    case Space::Line: return "line";
  }
  return "?";
}

Space parse_space(std::string_view name) {
  if (name == "plane") return Space::Plane;
  if (name == "circle") return Space::Circle;
  if (name == "line") return Space::Line;
  throw Error("unknown position space '" + std::string(name) + "'");
}

namespace {

Rational reduce_mod_one(Rational t) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= q;
  return t;
}

[[noreturn]] void mixed() { throw Error("mixed position spaces"); }

}  // namespace

Position Position::plane(Rational x, Rational y) { return Position(PlanePos{std::move(x), std::move(y)}); }
Position Position::circle(Rational t) { return Position(CirclePos{reduce_mod_one(std::move(t))}); }
Position Position::line(Rational x) { return Position(LinePos{std::move(x)}); }

const PlanePos& Position::as_plane() const {
  if (auto* p = std::get_if<PlanePos>(&value_)) return *p;
  mixed();
}
const CirclePos& Position::as_circle() const {
  if (auto* p = std::get_if<CirclePos>(&value_)) return *p;
  mixed();
}
const LinePos& Position::as_line() const {
  if (auto* p = std::get_if<LinePos>(&value_)) return *p;
  mixed();
}

std::string to_string(const Position& p) {
  switch (p.space()) {
    case Space::Plane: return "(" + to_string(p.as_plane().x) + ", " + to_string(p.as_plane().y) + ")";
    case Space::Circle: return "t=" + to_string(p.as_circle().t);
    case Space::Line: return "x=" + to_string(p.as_line().x);
  }
  return "?";
}

Segment::Segment(Position a_, Position b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.space() != b.space()) mixed();
  if (a == b) throw Error("segment endpoints must be distinct");
}

int orientation_sign(const PlanePos& a, const PlanePos& b, const PlanePos& c) {
  std::int64_t ax, ay, bx, by, cx, cy;
  if (small_integer(a.x, ax) && small_integer(a.y, ay) && small_integer(b.x, bx) && small_integer(b.y, by) &&
      small_integer(c.x, cx) && small_integer(c.y, cy)) {
    __int128 det = static_cast<__int128>(bx - ax) * (cy - ay) - static_cast<__int128>(by - ay) * (cx - ax);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
  }
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

Orientation orientation(const Position& a, const Position& b, const Position& c) {
  if (a.space() != Space::Plane || b.space() != Space::Plane || c.space() != Space::Plane) mixed();
  return static_cast<Orientation>(orientation_sign(a.as_plane(), b.as_plane(), c.as_plane()));
}

Rational ccw_arc_length(const Rational& a, const Rational& b) {
  Rational d = b - a;
  if (sgn(d) <= 0) d += 1;
  return d;
}

namespace {

// True when `p` lies strictly inside the counter-clockwise arc from a to b.
bool in_open_ccw_arc(const Rational& a, const Rational& b, const Rational& p) {
  if (a < b) return a < p && p < b;
  return p > a || p < b;
}

}  // namespace

ArcSide circular_side(const Position& a, const Position& b, const Position& p) {
  const Rational& ta = a.as_circle().t;
  const Rational& tb = b.as_circle().t;
  const Rational& tp = p.as_circle().t;
  if (ta == tb) throw Error("degenerate chord");
  if (tp == ta || tp == tb) throw Error("point coincides with a chord endpoint");
  return in_open_ccw_arc(ta, tb, tp) ? ArcSide::AB : ArcSide::BA;
}

Position arc_midpoint(const Position& a, const Position& b, Turn dir) {
  const Rational& ta = a.as_circle().t;
  const Rational& tb = b.as_circle().t;
  if (ta == tb) throw Error("arc endpoints must be distinct");
  if (dir == Turn::CCW) return Position::circle(ta + ccw_arc_length(ta, tb) / 2);
  return Position::circle(ta - ccw_arc_length(tb, ta) / 2);
}

bool segments_properly_cross(const Segment& s, const Segment& t) { return segments_properly_cross(s.a, s.b, t.a, t.b); }

bool segments_properly_cross(const Position& p, const Position& q, const Position& u, const Position& v) {
  const Space space = p.space();
  if (q.space() != space || u.space() != space || v.space() != space) mixed();
  // Touching at an endpoint is not a proper crossing.
  if (p == u || p == v || q == u || q == v) return false;
  switch (space) {
    case Space::Plane: {
      const auto &a = p.as_plane(), &b = q.as_plane(), &c = u.as_plane(), &d = v.as_plane();
      int o1 = orientation_sign(a, b, c), o2 = orientation_sign(a, b, d);
      int o3 = orientation_sign(c, d, a), o4 = orientation_sign(c, d, b);
      return o1 * o2 < 0 && o3 * o4 < 0;
    }
    case Space::Circle: {
      const auto &a = p.as_circle().t, &b = q.as_circle().t;
      bool c_in = in_open_ccw_arc(a, b, u.as_circle().t);
      bool d_in = in_open_ccw_arc(a, b, v.as_circle().t);
      return c_in != d_in;
    }
    case Space::Line: {
      const auto &a = p.as_line().x, &b = q.as_line().x, &c = u.as_line().x, &d = v.as_line().x;
      const Rational& lo = std::max(std::min(a, b), std::min(c, d));
      const Rational& hi = std::min(std::max(a, b), std::max(c, d));
      return lo < hi;
    }
  }
  return false;
}

namespace {

struct Direction {
  bool vertical;
  Rational slope;
  std::size_t index;
};

}  // namespace

GeneralPositionReport general_position_check(std::span<const Position> points) {
  GeneralPositionReport report;
  if (points.empty()) return report;
  const Space space = points.front().space();
  for (const auto& p : points)
    if (p.space() != space) mixed();

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](std::size_t i, std::size_t j) {
    switch (space) {
      case Space::Plane: {
        const auto &a = points[i].as_plane(), &b = points[j].as_plane();
        return a.x != b.x ? a.x < b.x : a.y < b.y;
      }
      case Space::Circle: return points[i].as_circle().t < points[j].as_circle().t;
      case Space::Line: return points[i].as_line().x < points[j].as_line().x;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), key_less);
  std::vector<bool> duplicate(points.size(), false);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      report.violations.push_back({GeneralPositionViolation::Kind::Duplicate,
                                   {std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k])}});
      duplicate[order[k]] = true;
    }
  }
  if (space != Space::Plane) return report;

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (duplicate[i]) continue;
    const auto& p = points[i].as_plane();
    std::vector<Direction> dirs;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (duplicate[j] || points[j] == points[i]) continue;
      const auto& q = points[j].as_plane();
      if (q.x == p.x)
        dirs.push_back({true, Rational(0), j});
      else
        dirs.push_back({false, (q.y - p.y) / (q.x - p.x), j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Direction& a, const Direction& b) {
      if (a.vertical != b.vertical) return a.vertical < b.vertical;
      if (a.slope != b.slope) return a.slope < b.slope;
      return a.index < b.index;
    });
    for (std::size_t k = 0; k < dirs.size();) {
      std::size_t e = k + 1;
      while (e < dirs.size() && dirs[e].vertical == dirs[k].vertical && dirs[e].slope == dirs[k].slope) ++e;
      for (std::size_t u = k; u < e; ++u)
        for (std::size_t v = u + 1; v < e; ++v)
          report.violations.push_back({GeneralPositionViolation::Kind::Collinear, {i, dirs[u].index, dirs[v].index}});
      k = e;
    }
  }
  return report;
}

}  // namespace nca
