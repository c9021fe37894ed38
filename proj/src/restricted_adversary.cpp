#include "nca/adversary.hpp"
#include "nca/chord_regions.hpp"
#include "nca/errors.hpp"

namespace nca {

RestrictedAdversary::RestrictedAdversary(Rational upper, std::size_t m) : classes_(std::move(upper)), m_(m) {
  if (classes_.k() == 0) throw Error("restricted adversary needs U > 1");
  if (m_ == 0) throw Error("restricted adversary needs m >= 1");
}

void RestrictedAdversary::play(Arena& arena) {
  const unsigned k = classes_.k();
  const std::size_t budget = m_ << k;
  std::map<FaceLabel, Edge> responsible;

  while (arena.state().edges().size() < m_ && arena.emitted() < budget) {
    OnlineDecision d = arena.emit(Position::circle(ChordRegions(arena.state()).largest_gap_midpoint()), 1);
    const auto* m = std::get_if<Match>(&d);
    if (!m) {
      if (!std::holds_alternative<Leave>(d)) throw InvariantViolation("restricted: algorithm revoked an edge");
      continue;
    }
    const Edge e(arena.emitted(), m->partner);
    ChordRegions cr(arena.state());
    const FaceLabel split = cr.parent_face(e);
    if (responsible.empty()) {
      responsible[split] = e;
      responsible[e] = e;
      continue;
    }
    const Edge owner = responsible.at(split);
    if (owner != split && cr.encloses(e, owner)) {
      // the old pair borders the inner side
      responsible[e] = owner;
      responsible[split] = e;
    } else {
      responsible[e] = e;
    }
  }
  if (arena.state().edges().size() < m_) {
    ended_early_ = true;
    return;
  }

  const std::size_t case1 = (std::size_t{1} << k) - 1;
  // r for the bookkeeping bound: exact, or an upper approximation
  const Rational r = classes_.exact_ratio() ? *classes_.exact_ratio() : classes_.threshold_value(1);
  std::vector<Rational> weights(k + 1);
  for (unsigned i = 0; i <= k; ++i) weights[i] = classes_.threshold_value(i);

  for (const auto& [face, pair] : responsible) {
    const std::string label = "face " + (face == kOuterFace ? std::string("outer") : to_string(face));
    const std::size_t u = ChordRegions(arena.state()).unmatched_in(face).size();
    if (u >= case1) {
      findings_.certificates.push_back({label + " case 1", Rational(2, static_cast<long>(u)), Rational(2, static_cast<long>(case1))});
      continue;
    }
    FaceLabel active = face;
    Rational probe_sum = 0;
    unsigned j = 0;
    for (unsigned i = 1; i <= k; ++i) {
      OnlineDecision d = arena.emit(Position::circle(ChordRegions(arena.state()).fresh_position(active)), weights[i]);
      if (std::holds_alternative<Leave>(d)) {
        j = i;
        break;
      }
      const auto* m = std::get_if<Match>(&d);
      if (!m) throw InvariantViolation("restricted: algorithm revoked an edge");
      if (arena.state().point(m->partner).weight != 1)
        findings_.violations.push_back(label + ": probe matched to a point of weight " +
                                       to_string(arena.state().point(m->partner).weight));
      probe_sum += weights[i];
      const PointId p = arena.emitted();
      ChordRegions cr(arena.state());
      const FaceLabel cw = cr.face_clockwise_of(p), ccw = cr.face_counter_clockwise_of(p);
      active = cr.unmatched_in(cw).size() <= cr.unmatched_in(ccw).size() ? cw : ccw;
    }
    if (j == 0) {
      findings_.violations.push_back(label + ": every probe was matched");
      continue;
    }
    const Rational big_m = 2 + Rational(static_cast<long>(j) - 1) + probe_sum;
    const Rational bound = (pow(r, j) - 1) / (r - 1) + static_cast<long>(j) + 2;
    findings_.certificates.push_back({label + " case 2 M", big_m, bound});
    findings_.certificates.push_back({label + " case 2 ratio", big_m / weights[j], bound / weights[j]});
  }
}

AdversaryReport RestrictedAdversary::report(const MatchingState& s) const {
  AdversaryReport out = findings_;
  const RunOutcome o = s.outcome();
  const Rational bound = Rational(8) / Rational(pow(BigInt(2), classes_.k()));
  out.certificates.push_back({"ratio", o.ratio(), bound});
  for (const auto& c : out.certificates)
    if (c.value > c.bound)
      out.violations.push_back(c.label + ": " + to_string(c.value) + " exceeds " + to_string(c.bound));
  out.facts["k"] = std::to_string(classes_.k());
  out.facts["ended_after_first_phase"] = ended_early_ ? "true" : "false";
  out.facts["r_exact"] = classes_.exact_ratio() ? "true" : "false";
  return out;
}

}  // namespace nca
