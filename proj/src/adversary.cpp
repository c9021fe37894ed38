#include "nca/adversary.hpp"

#include "nca/errors.hpp"
#include "nca/offline.hpp"

namespace nca {

Arena::Arena(OnlineMatcher& alg) : alg_(alg) {
  if (alg.state().size() != 0) throw Error("arena needs a fresh algorithm instance");
}

OnlineDecision Arena::emit(const Position& pos, const Rational& weight) {
  const MatchingState& s = alg_.state();
  if (pos.space() != s.space()) throw Error("mixed position spaces");
  if (pos.space() == Space::Plane) {
    const PlanePos& c = pos.as_plane();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const PlanePos& a = s.points()[i].pos.as_plane();
      if (a == c) throw InvariantViolation("adversary emitted a duplicate point");
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (orientation_sign(a, s.points()[j].pos.as_plane(), c) == 0)
          throw InvariantViolation("adversary emitted a collinear triple");
    }
  } else {
    const Rational& key = pos.space() == Space::Circle ? pos.as_circle().t : pos.as_line().x;
    if (!seen_.insert(key).second) throw InvariantViolation("adversary emitted a duplicate point");
  }
  OnlineDecision d = alg_.on_arrival(pos, weight);
  transcript_.push_back({transcript_.size() + 1, pos, weight, d, s.hash()});
  return d;
}

SequenceAdversary::SequenceAdversary(std::string label, std::vector<WeightedPoint> points)
    : label_(std::move(label)), points_(std::move(points)) {}

Space SequenceAdversary::space() const { return points_.empty() ? Space::Plane : points_.front().pos.space(); }

void SequenceAdversary::play(Arena& arena) {
  for (const auto& p : points_) arena.emit(p.pos, p.weight);
}

DuelResult run_duel(Adversary& adversary, OnlineMatcher& alg) {
  if (adversary.space() != alg.state().space()) throw Error("adversary and algorithm disagree on the space");
  Arena arena(alg);
  DuelResult out;
  try {
    adversary.play(arena);
  } catch (const InvariantViolation& e) {
    out.aborted = e.what();
  }
  out.transcript = arena.transcript();
  out.outcome = alg.state().outcome();
  if (!out.aborted) out.adversary = adversary.report(alg.state());
  out.audit = alg.audit();
  for (const auto& [e, f] : validate_non_crossing(alg.state().points(), alg.state().edges()))
    out.crossings.push_back(to_string(e) + " crosses " + to_string(f));
  return out;
}

}  // namespace nca
