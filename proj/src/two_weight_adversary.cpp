#include "nca/adversary.hpp"
#include "nca/chord_regions.hpp"
#include "nca/errors.hpp"

namespace nca {
namespace {

// Chord created by the latest decision, if it matched.
std::optional<Edge> new_chord(const Arena& arena, const OnlineDecision& d) {
  const PointId p = arena.emitted();
  if (auto m = std::get_if<Match>(&d)) return Edge(p, m->partner);
  if (auto r = std::get_if<RevokeAndMatch>(&d)) return Edge(p, r->partner);
  return std::nullopt;
}

}  // namespace

TwoWeightAdversary::TwoWeightAdversary(Rational upper, unsigned k) : upper_(std::move(upper)), k_(k) {
  if (upper_ < 3) throw Error("two-weight adversary needs U >= 3");
  if (k_ == 0) throw Error("two-weight adversary needs k >= 1");
}

void TwoWeightAdversary::attack_single(Arena& arena, const Edge& face) {
  auto emit_in = [&](const FaceLabel& f, const Rational& w) {
    return arena.emit(Position::circle(ChordRegions(arena.state()).fresh_position(f)), w);
  };
  OnlineDecision d = emit_in(face, upper_);
  auto chord = new_chord(arena, d);
  if (!chord) {
    cases_.push_back({"S1 left"});
    return;
  }
  ChordRegions after(arena.state());
  const FaceLabel outside = after.parent_face(*chord);
  emit_in(*chord, upper_);
  emit_in(outside, upper_);
  cases_.push_back({"S1 matched"});
}

void TwoWeightAdversary::play(Arena& arena) {
  auto emit_in = [&](const FaceLabel& f, const Rational& w) {
    return arena.emit(Position::circle(ChordRegions(arena.state()).fresh_position(f)), w);
  };

  std::optional<Edge> last;
  for (unsigned i = 0; i < 2 * k_; ++i) {
    OnlineDecision d = arena.emit(Position::circle(ChordRegions(arena.state()).largest_gap_midpoint()), 1);
    if (auto c = new_chord(arena, d)) last = c;
  }
  first_phase_chords_ = arena.state().edges().size();
  if (3 * first_phase_chords_ < k_) {
    ended_early_ = true;
    return;
  }

  // one face per chord: skip the face inside the newest chord, the outer
  // face stands in for it
  std::vector<FaceLabel> faces{kOuterFace};
  for (const TranscriptStep& step : arena.transcript())
    if (auto m = std::get_if<Match>(&step.decision))
      if (Edge(step.step, m->partner) != *last) faces.push_back(Edge(step.step, m->partner));

  for (const FaceLabel& face : faces) {
    const std::size_t u = ChordRegions(arena.state()).unmatched_in(face).size();
    if (u >= 4) {
      cases_.push_back({"S4"});
      continue;
    }
    if (u == 0) {
      if (new_chord(arena, emit_in(face, upper_))) throw InvariantViolation("two-weight: S0 probe was matched");
      cases_.push_back({"S0"});
      continue;
    }
    if (u == 1) {
      attack_single(arena, face);
      continue;
    }
    bool three = u == 3;
    if (u == 2) {
      auto chord = new_chord(arena, emit_in(face, 1));
      if (chord) {
        ChordRegions after(arena.state());
        const FaceLabel sides[2] = {*chord, after.parent_face(*chord)};
        bool done = false;
        for (const auto& side : sides)
          if (!done && after.unmatched_in(side).empty()) {
            emit_in(side, upper_);
            done = true;
          }
        if (!done) throw InvariantViolation("two-weight: S2 match left no empty side");
        cases_.push_back({"S2 matched"});
        continue;
      }
      three = true;  // now three unmatched points
    }
    if (three) {
      auto chord = new_chord(arena, emit_in(face, 1));
      if (!chord) {
        cases_.push_back({u == 2 ? "S2 to S4" : "S3 to S4"});
        continue;
      }
      ChordRegions after(arena.state());
      const FaceLabel sides[2] = {*chord, after.parent_face(*chord)};
      bool empty_side = false;
      for (const auto& side : sides)
        if (!empty_side && after.unmatched_in(side).empty()) {
          emit_in(side, upper_);
          empty_side = true;
        }
      if (empty_side) {
        cases_.push_back({"S3 matched, empty side"});
        continue;
      }
      cases_.push_back({"S3 matched, split"});
      for (const auto& side : sides) attack_single(arena, side);
    }
  }
}

AdversaryReport TwoWeightAdversary::report(const MatchingState& s) const {
  AdversaryReport out;
  const RunOutcome o = s.outcome();
  const Rational bound = Rational(1, 3) + 2 / (3 * upper_ + 3) + 3 / o.total_weight;
  out.certificates.push_back({"ratio", o.ratio(), bound});
  if (o.ratio() > bound) out.violations.push_back("ratio " + to_string(o.ratio()) + " exceeds " + to_string(bound));
  out.facts["first_phase_chords"] = std::to_string(first_phase_chords_);
  out.facts["ended_after_first_phase"] = ended_early_ ? "true" : "false";
  std::map<std::string, int> tally;
  for (const auto& c : cases_) ++tally[c.kind];
  for (const auto& [kind, n] : tally) out.facts["case " + kind] = std::to_string(n);
  return out;
}

}  // namespace nca
