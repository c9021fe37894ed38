#include "nca/matching.hpp"

#include "nca/errors.hpp"

namespace nca {

std::string to_string(const Edge& e) { return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}"; }

Rational RunOutcome::ratio() const {
  if (sgn(total_weight) == 0) return Rational(1);
  return matched_weight / total_weight;
}

MatchingState::MatchingState(Space space, MatchMode mode) : space_(space), mode_(mode) {}

const WeightedPoint& MatchingState::add_point(Position pos, Rational weight) {
  if (pos.space() != space_) throw Error("mixed position spaces");
  if (sgn(weight) <= 0) throw Error("point weight must be strictly positive");
  points_.push_back({points_.size() + 1, std::move(pos), std::move(weight)});
  partner_.push_back(kNoPoint);
  return points_.back();
}

void MatchingState::check_id(PointId id) const {
  if (id == kNoPoint || id > points_.size()) throw Error("unknown point id " + std::to_string(id));
}

const WeightedPoint& MatchingState::point(PointId id) const {
  check_id(id);
  return points_[id - 1];
}

PointId MatchingState::partner(PointId id) const {
  check_id(id);
  return partner_[id - 1];
}

bool MatchingState::crosses_current(PointId i, PointId j) const {
  const Position &p = point(i).pos, &q = point(j).pos;
  if (p == q) throw Error("segment endpoints must be distinct");
  for (const Edge& e : edges_) {
    if (e.has(i) || e.has(j)) continue;
    if (segments_properly_cross(p, q, point(e.a).pos, point(e.b).pos)) return true;
  }
  return false;
}

void MatchingState::apply_match(PointId i, PointId j) {
  if (i == j) throw Error("identical endpoints");
  check_id(i);
  check_id(j);
  if (is_matched(i) || is_matched(j)) throw Error("endpoint already matched");
  if (crosses_current(i, j)) throw Error("non-crossing constraint violated");
  edges_.insert(Edge(i, j));
  partner_[i - 1] = j;
  partner_[j - 1] = i;
}

void MatchingState::apply_revoke(PointId i, PointId j) {
  if (mode_ != MatchMode::Revocable) throw Error("revoking is not allowed in irrevocable mode");
  Edge e(i, j);
  if (!edges_.contains(e)) throw Error("cannot revoke absent edge " + to_string(e));
  edges_.erase(e);
  partner_[e.a - 1] = kNoPoint;
  partner_[e.b - 1] = kNoPoint;
  revoked_.push_back({e, points_.size()});
}

std::vector<std::pair<Edge, Edge>> MatchingState::crossing_pairs() const {
  std::vector<std::pair<Edge, Edge>> out;
  std::vector<Edge> list(edges_.begin(), edges_.end());
  for (std::size_t u = 0; u < list.size(); ++u) {
    const Position &p = point(list[u].a).pos, &q = point(list[u].b).pos;
    for (std::size_t v = u + 1; v < list.size(); ++v)
      if (segments_properly_cross(p, q, point(list[v].a).pos, point(list[v].b).pos))
        out.emplace_back(list[u], list[v]);
  }
  return out;
}

RunOutcome MatchingState::outcome() const {
  RunOutcome out;
  out.matched.assign(points_.size(), false);
  for (const auto& p : points_) out.total_weight += p.weight;
  for (const Edge& e : edges_) {
    out.matched_weight += points_[e.a - 1].weight + points_[e.b - 1].weight;
    out.matched[e.a - 1] = out.matched[e.b - 1] = true;
  }
  out.matched_pairs = edges_.size();
  return out;
}

std::uint64_t MatchingState::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(points_.size());
  for (const Edge& e : edges_) {
    mix(e.a);
    mix(e.b);
  }
  return h;
}

}  // namespace nca
