#include <algorithm>

#include "nca/adversary.hpp"
#include "nca/chord_regions.hpp"
#include "nca/errors.hpp"

namespace nca {

RevokingAdversary::RevokingAdversary(std::size_t n) : n_(n) {
  if (n_ == 0) throw Error("revoking adversary needs n >= 1");
}

std::vector<std::string> RevokingAdversary::check_associations(const MatchingState& s, const Edge& active) const {
  std::vector<std::string> out;
  ChordRegions cr(s);
  std::map<FaceLabel, int> per_face;
  for (const Edge& e : s.edges()) {
    auto it = assoc_.find(e);
    if (it == assoc_.end()) {
      out.push_back("edge " + to_string(e) + " has no associated point");
      continue;
    }
    const PointId a = it->second;
    if (s.is_matched(a)) out.push_back("associated point " + std::to_string(a) + " is matched");
    const FaceLabel f = cr.face_of_point(a);
    if (f == active) out.push_back("associated point " + std::to_string(a) + " lies in the active region");
    if (f != e && cr.parent_face(e) != f)
      out.push_back("edge " + to_string(e) + " does not border the region of its point " + std::to_string(a));
    if (++per_face[f] > 1) out.push_back("two associated points share a region");
  }
  for (const auto& [e, a] : assoc_)
    if (!s.edges().contains(e)) out.push_back("association kept for removed edge " + to_string(e));
  return out;
}

void RevokingAdversary::play(Arena& arena) {
  const std::size_t total = 2 * n_;
  FaceLabel active = kOuterFace;
  while (arena.emitted() < total) {
    ChordRegions before(arena.state());
    if (!before.face_exists(active)) throw InvariantViolation("revoking: active region vanished");
    OnlineDecision d = arena.emit(Position::circle(before.fresh_position(active)), 1);
    if (std::holds_alternative<Leave>(d)) continue;
    ++phases_;
    const PointId p = arena.emitted();

    if (const auto* m = std::get_if<Match>(&d)) {
      const Edge e(p, m->partner);
      ChordRegions cr(arena.state());
      FaceLabel r1 = cr.face_clockwise_of(p), r2 = cr.face_counter_clockwise_of(p);
      if (cr.unmatched_in(r2).size() > cr.unmatched_in(r1).size()) std::swap(r1, r2);
      if (cr.unmatched_in(r1).empty()) {
        if (arena.emitted() >= total) break;
        OnlineDecision extra = arena.emit(Position::circle(cr.fresh_position(r1)), 1);
        if (!std::holds_alternative<Leave>(extra))
          throw InvariantViolation("revoking: extra point in an empty region was not left unmatched");
      }
      assoc_[e] = ChordRegions(arena.state()).unmatched_in(r1).front();
      active = r2;
    } else {
      const auto& rm = std::get<RevokeAndMatch>(d);
      if (rm.revoked != active && before.parent_face(rm.revoked) != active)
        throw InvariantViolation("revoking: revoked chord " + to_string(rm.revoked) + " does not border the active region");
      assoc_.erase(rm.revoked);
      const Edge e(p, rm.partner);
      const MatchingState& s = arena.state();
      PointId freed = kNoPoint;
      for (PointId q : {rm.revoked.a, rm.revoked.b})
        if (!s.is_matched(q)) {
          freed = q;
          break;
        }
      if (freed == kNoPoint) throw InvariantViolation("revoking: both endpoints of the revoked chord are matched");
      assoc_[e] = freed;
      ChordRegions cr(s);
      const FaceLabel a = cr.face_clockwise_of(p), b = cr.face_counter_clockwise_of(p);
      const FaceLabel home = cr.face_of_point(freed);
      if (home != a && home != b) throw InvariantViolation("revoking: freed point is not beside the new chord");
      active = home == a ? b : a;
    }
    auto v = check_associations(arena.state(), active);
    violations_.insert(violations_.end(), v.begin(), v.end());
  }
}

AdversaryReport RevokingAdversary::report(const MatchingState& s) const {
  AdversaryReport out;
  out.violations = violations_;
  const RunOutcome o = s.outcome();
  const Rational matched = static_cast<long>(2 * o.matched_pairs);
  const Rational bound = Rational(2, 3) * static_cast<long>(s.size()) + 2;
  out.certificates.push_back({"matched points", matched, bound});
  if (matched > bound) out.violations.push_back("matched points exceed 2/3 of the emitted points plus 2");
  out.facts["phases"] = std::to_string(phases_);
  out.facts["emitted"] = std::to_string(s.size());
  return out;
}

CollinearRevokingAdversary::CollinearRevokingAdversary(std::size_t n) : n_(n) {
  if (n_ == 0) throw Error("collinear revoking adversary needs n >= 1");
}

void CollinearRevokingAdversary::play(Arena& arena) {
  const MatchingState& s = arena.state();
  auto x_of = [&](PointId id) -> const Rational& { return s.point(id).pos.as_line().x; };
  while (arena.emitted() < 2 * n_) {
    Rational x;
    if (s.edges().empty()) {
      x = 0;
      for (const auto& p : s.points())
        if (p.pos.as_line().x + 1 > x) x = p.pos.as_line().x + 1;
    } else {
      const Edge e = *s.edges().begin();
      Rational lo = x_of(e.a), hi = x_of(e.b);
      if (hi < lo) std::swap(lo, hi);
      std::vector<Rational> xs{lo, hi};
      for (const auto& p : s.points())
        if (p.pos.as_line().x > lo && p.pos.as_line().x < hi) xs.push_back(p.pos.as_line().x);
      std::sort(xs.begin(), xs.end());
      std::size_t best = 0;
      for (std::size_t i = 1; i + 1 < xs.size(); ++i)
        if (xs[i + 1] - xs[i] > xs[best + 1] - xs[best]) best = i;
      x = (xs[best] + xs[best + 1]) / 2;
    }
    arena.emit(Position::line(x), 1);
    max_concurrent_ = std::max(max_concurrent_, s.edges().size());
  }
}

AdversaryReport CollinearRevokingAdversary::report(const MatchingState& s) const {
  AdversaryReport out;
  out.certificates.push_back({"max concurrent pairs", static_cast<long>(max_concurrent_), 1});
  out.certificates.push_back({"final pairs", static_cast<long>(s.edges().size()), 1});
  if (max_concurrent_ > 1) out.violations.push_back("algorithm held more than one pair at once");
  if (s.edges().size() > 1) out.violations.push_back("algorithm ended with more than one pair");
  out.facts["max_concurrent_pairs"] = std::to_string(max_concurrent_);
  return out;
}

}  // namespace nca
