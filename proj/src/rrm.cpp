#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

LineInterval::Kind LineInterval::kind() const {
  if (lo_closed && hi_closed) return Kind::Closed;
  if (lo_closed) return Kind::LeftClosed;
  if (hi_closed) return Kind::RightClosed;
  return Kind::Open;
}

IntervalPartition::IntervalPartition() { intervals_.push_back(LineInterval{}); }

std::size_t IntervalPartition::locate(const MatchingState& s, const Rational& x) const {
  auto x_of = [&](PointId id) -> const Rational& { return s.point(id).pos.as_line().x; };
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const LineInterval& iv = intervals_[i];
    if (iv.lo != kNoPoint) {
      int c = cmp(x, x_of(iv.lo));
      if (c < 0 || (c == 0 && !iv.lo_closed)) continue;
      if (c == 0) throw Error("duplicate line position " + to_string(x));
    }
    if (iv.hi != kNoPoint) {
      int c = cmp(x, x_of(iv.hi));
      if (c > 0 || (c == 0 && !iv.hi_closed)) continue;
      if (c == 0) throw Error("duplicate line position " + to_string(x));
    }
    return i;
  }
  throw Error("line position " + to_string(x) + " falls between intervals");
}

std::vector<std::string> IntervalPartition::check(const MatchingState& s) const {
  std::vector<std::string> out;
  std::vector<int> seen(s.size() + 1, 0);
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const LineInterval& iv = intervals_[i];
    const std::string where = "interval " + std::to_string(i);
    if (i == 0 && iv.lo != kNoPoint) out.push_back(where + ": leftmost interval is bounded");
    if (i + 1 == intervals_.size() && iv.hi != kNoPoint) out.push_back(where + ": rightmost interval is bounded");
    if (i > 0) {
      const LineInterval& prev = intervals_[i - 1];
      if (prev.hi != iv.lo || (prev.hi_closed && iv.lo_closed) || (!prev.hi_closed && !iv.lo_closed))
        out.push_back(where + ": does not abut its left neighbour");
    }
    for (PointId q : iv.interior) ++seen[q];
    if (iv.lo_closed) ++seen[iv.lo];
    if (iv.hi_closed) ++seen[iv.hi];
    switch (iv.kind()) {
      case LineInterval::Kind::Open:
        for (PointId q : iv.interior)
          if (s.is_matched(q)) out.push_back(where + ": open interval holds matched point " + std::to_string(q));
        if (iv.interior.size() > 1) out.push_back(where + ": open interval holds two unmatched points");
        break;
      case LineInterval::Kind::LeftClosed:
      case LineInterval::Kind::RightClosed: {
        PointId b = iv.lo_closed ? iv.lo : iv.hi;
        if (!iv.interior.empty()) out.push_back(where + ": half-open interval has interior points");
        if (s.is_matched(b)) out.push_back(where + ": half-open boundary point " + std::to_string(b) + " is matched");
        break;
      }
      case LineInterval::Kind::Closed:
        if (!iv.interior.empty()) out.push_back(where + ": closed interval has interior points");
        if (s.partner(iv.lo) != iv.hi) out.push_back(where + ": closed interval endpoints are not matched together");
        break;
    }
  }
  for (PointId q = 1; q <= s.size(); ++q)
    if (seen[q] != 1) out.push_back("point " + std::to_string(q) + " lies in " + std::to_string(seen[q]) + " intervals");
  return out;
}

RandomRevokingMatcher::RandomRevokingMatcher(Space space, std::uint64_t seed)
    : OnlineMatcher(space, MatchMode::Revocable), rng_(seed) {
  if (space != Space::Line) throw Error("rrm needs line input");
}

OnlineDecision RandomRevokingMatcher::decide(const WeightedPoint& p) {
  const MatchingState& s = state();
  const Rational& x = p.pos.as_line().x;
  auto& ivs = intervals_.intervals();
  const std::size_t at = intervals_.locate(s, x);
  const LineInterval I = ivs[at];
  auto closed = [](PointId a, PointId b) { return LineInterval{a, b, true, true, {}}; };
  auto replace = [&](std::vector<LineInterval> parts) {
    ivs.erase(ivs.begin() + static_cast<std::ptrdiff_t>(at));
    ivs.insert(ivs.begin() + static_cast<std::ptrdiff_t>(at), parts.begin(), parts.end());
  };

  switch (I.kind()) {
    case LineInterval::Kind::Open: {
      if (I.interior.empty()) {
        ivs[at].interior.push_back(p.id);
        return Leave{};
      }
      const PointId q = I.interior.front();
      PointId left = p.id, right = q;
      if (s.point(q).pos.as_line().x < x) std::swap(left, right);
      replace({LineInterval{I.lo, left, I.lo_closed, false, {}}, closed(left, right),
               LineInterval{right, I.hi, false, I.hi_closed, {}}});
      return Match{q};
    }
    case LineInterval::Kind::Closed: {
      const PointId j = I.lo, k = I.hi;
      if (rng_() >> 63 == 0) {
        replace({closed(j, p.id), LineInterval{p.id, k, false, true, {}}});
        return RevokeAndMatch{Edge(j, k), j};
      }
      replace({LineInterval{j, p.id, true, false, {}}, closed(p.id, k)});
      return RevokeAndMatch{Edge(j, k), k};
    }
    case LineInterval::Kind::LeftClosed: {
      const PointId j = I.lo;
      replace({closed(j, p.id), LineInterval{p.id, I.hi, false, false, {}}});
      return Match{j};
    }
    case LineInterval::Kind::RightClosed: {
      const PointId j = I.hi;
      replace({LineInterval{I.lo, p.id, false, false, {}}, closed(p.id, j)});
      return Match{j};
    }
  }
  throw InvariantViolation("rrm: unreachable interval kind");
}

void RandomRevokingMatcher::after_apply(const WeightedPoint&, const OnlineDecision&) {
  auto v = intervals_.check(state());
  if (!v.empty()) {
    violations_.insert(violations_.end(), v.begin(), v.end());
    throw InvariantViolation("rrm: " + v.front());
  }
}

std::vector<std::string> RandomRevokingMatcher::audit() const { return intervals_.check(state()); }

}  // namespace nca
