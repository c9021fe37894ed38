#include "nca/chord_regions.hpp"

#include <algorithm>

#include "nca/errors.hpp"

namespace nca {

ChordRegions::ChordRegions(const MatchingState& state) : state_(state) {
  if (state.space() != Space::Circle) throw Error("chord faces need circle input");
  auto t_of = [&](PointId id) -> const Rational& { return state.point(id).pos.as_circle().t; };
  for (const auto& p : state.points()) order_.push_back(p.id);
  std::sort(order_.begin(), order_.end(), [&](PointId a, PointId b) { return t_of(a) < t_of(b); });
  for (std::size_t i = 0; i < order_.size(); ++i) slot_[order_[i]] = i;

  std::vector<Edge> open;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const PointId id = order_[i];
    const PointId mate = state.partner(id);
    FaceLabel current = open.empty() ? kOuterFace : open.back();
    if (mate == kNoPoint) {
      point_face_[id] = current;
    } else if (slot_.contains(mate) && slot_[mate] < i) {
      if (open.empty() || open.back() != Edge(id, mate)) throw InvariantViolation("chords cross");
      open.pop_back();
      point_face_[id] = Edge(id, mate);
    } else {
      open.push_back(Edge(id, mate));
      point_face_[id] = Edge(id, mate);
    }
    Gap g;
    g.before = id;
    g.after = order_[(i + 1) % order_.size()];
    g.start = t_of(id);
    g.length = ccw_arc_length(t_of(id), t_of(g.after));
    g.face = open.empty() ? kOuterFace : open.back();
    gaps_.push_back(std::move(g));
  }
}

std::vector<PointId> ChordRegions::unmatched_in(const FaceLabel& face) const {
  std::vector<PointId> out;
  for (const auto& [id, f] : point_face_)
    if (f == face && !state_.is_matched(id)) out.push_back(id);
  return out;
}

bool ChordRegions::face_exists(const FaceLabel& face) const {
  if (gaps_.empty()) return face == kOuterFace;
  return std::any_of(gaps_.begin(), gaps_.end(), [&](const Gap& g) { return g.face == face; });
}

Rational ChordRegions::fresh_position(const FaceLabel& face) const {
  if (gaps_.empty()) return 0;
  const Gap* best = nullptr;
  for (const Gap& g : gaps_)
    if (g.face == face && (!best || g.length > best->length)) best = &g;
  if (!best) throw InvariantViolation("face " + to_string(face) + " has no arc");
  Rational t = best->start + best->length / 2;
  if (t >= 1) t -= 1;
  return t;
}

Rational ChordRegions::largest_gap_midpoint() const {
  if (gaps_.empty()) return 0;
  const Gap* best = &gaps_.front();
  for (const Gap& g : gaps_)
    if (g.length > best->length) best = &g;
  Rational t = best->start + best->length / 2;
  if (t >= 1) t -= 1;
  return t;
}

FaceLabel ChordRegions::face_clockwise_of(PointId id) const {
  const std::size_t i = slot_.at(id);
  return gaps_[(i + gaps_.size() - 1) % gaps_.size()].face;
}

FaceLabel ChordRegions::face_counter_clockwise_of(PointId id) const { return gaps_[slot_.at(id)].face; }

FaceLabel ChordRegions::parent_face(const Edge& chord) const {
  const PointId lo = slot_.at(chord.a) < slot_.at(chord.b) ? chord.a : chord.b;
  return face_clockwise_of(lo);
}

bool ChordRegions::encloses(const Edge& outer, const Edge& inner) const {
  auto span = [&](const Edge& e) {
    std::size_t x = slot_.at(e.a), y = slot_.at(e.b);
    return std::make_pair(std::min(x, y), std::max(x, y));
  };
  auto [olo, ohi] = span(outer);
  auto [ilo, ihi] = span(inner);
  return olo < ilo && ihi < ohi;
}

}  // namespace nca
