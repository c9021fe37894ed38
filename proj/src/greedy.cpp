#include <algorithm>

#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {
namespace {

Rational squared_distance(const PlanePos& a, const PlanePos& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rational arc_distance(const Rational& a, const Rational& b) {
  Rational d = ccw_arc_length(a, b);
  Rational e = 1 - d;
  return d < e ? d : e;
}

}  // namespace

GreedyMatcher::GreedyMatcher(Space space) : OnlineMatcher(space, MatchMode::Irrevocable) {
  if (space == Space::Circle) regions_.emplace(space);
}

OnlineDecision GreedyMatcher::decide_circle(const WeightedPoint& p) {
  RegionId r = regions_->insert(p.id, p.pos);
  const Rational& t = p.pos.as_circle().t;
  PointId best = kNoPoint;
  Rational best_d;
  for (PointId q : regions_->region(r).members) {
    if (q == p.id) continue;
    Rational d = arc_distance(t, state().point(q).pos.as_circle().t);
    if (best == kNoPoint || d < best_d) {
      best = q;
      best_d = std::move(d);
    }
  }
  if (best == kNoPoint) return Leave{};
  regions_->split(r, p.id, best);
  return Match{best};
}

OnlineDecision GreedyMatcher::decide(const WeightedPoint& p) {
  if (regions_) return decide_circle(p);
  const MatchingState& s = state();

  if (s.space() == Space::Line) {
    // Only the immediate neighbours can be reachable: anything farther has a
    // point in between, and that point is either matched (its interval is in
    // the way) or unmatched and nearer.
    const Rational& x = p.pos.as_line().x;
    auto [it, fresh] = line_order_.emplace(x, p.id);
    if (!fresh) throw Error("duplicate line position " + to_string(x));
    PointId left = it == line_order_.begin() ? kNoPoint : std::prev(it)->second;
    PointId right = std::next(it) == line_order_.end() ? kNoPoint : std::next(it)->second;
    PointId best = kNoPoint;
    Rational best_d;
    for (PointId q : {left, right}) {
      if (q == kNoPoint || s.is_matched(q) || s.crosses_current(p.id, q)) continue;
      Rational d = abs(s.point(q).pos.as_line().x - x);
      if (best == kNoPoint || d < best_d || (d == best_d && q < best)) {
        best = q;
        best_d = d;
      }
    }
    if (best == kNoPoint) return Leave{};
    return Match{best};
  }

  std::vector<std::pair<Rational, PointId>> candidates;
  for (const WeightedPoint& q : s.points())
    if (q.id != p.id && !s.is_matched(q.id))
      candidates.emplace_back(squared_distance(p.pos.as_plane(), q.pos.as_plane()), q.id);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& [d, q] : candidates)
    if (!s.crosses_current(p.id, q)) return Match{q};
  return Leave{};
}

}  // namespace nca
