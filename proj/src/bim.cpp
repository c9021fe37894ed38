#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

Rational balanced_revoke_parameter() {
  // root of r^3 + r^2 - 2r - 1 in [1, 3/2]
  Rational lo = 1, hi = Rational(3, 2);
  auto f = [](const Rational& r) -> Rational { return r * r * r + r * r - 2 * r - 1; };
  for (int i = 0; i < 60; ++i) {
    Rational mid = (lo + hi) / 2;
    if (sgn(f(mid)) < 0) lo = mid;
    else hi = mid;
  }
  return lo;
}

Rational revoke_ratio_bound(const Rational& r) {
  Rational a = (r * r - 1) / (r * r * r);
  Rational b = 1 / (1 + 2 * r);
  return a < b ? a : b;
}

BigImprovementMatcher::BigImprovementMatcher(Space space, Rational r)
    : OnlineMatcher(space, MatchMode::Revocable), r_(std::move(r)), partition_(space) {
  if (r_ <= 1 || r_ * r_ > 2) throw Error("bim parameter r must lie in (1, sqrt 2], got " + to_string(r_));
}

std::vector<RegionId> BigImprovementMatcher::regions_of(const Edge& e) const {
  std::vector<RegionId> out;
  for (RegionId r : partition_.active_regions()) {
    const auto* owner = std::get_if<Edge>(&partition_.region(r).responsible);
    if (owner && *owner == e) out.push_back(r);
  }
  return out;
}

PointId BigImprovementMatcher::heavier(const Edge& e) const {
  // equal weights: keep the earlier arrival
  return state().point(e.b).weight > state().point(e.a).weight ? e.b : e.a;
}

OnlineDecision BigImprovementMatcher::decide(const WeightedPoint& p) {
  const MatchingState& s = state();
  const RegionId r = partition_.insert(p.id, p.pos);

  PointId best = kNoPoint;
  for (PointId q : partition_.region(r).members)
    if (q != p.id && (best == kNoPoint || s.point(q).weight > s.point(best).weight)) best = q;
  if (best != kNoPoint) {
    auto [c1, c2] = partition_.split(r, p.id, best);
    partition_.set_responsible(c1, Edge(p.id, best));
    partition_.set_responsible(c2, Edge(p.id, best));
    return Match{best};
  }

  const auto* owner = std::get_if<Edge>(&partition_.region(r).responsible);
  if (!owner) {
    if (p.id == 1) return Leave{};
    throw InvariantViolation("bim: region " + std::to_string(r) + " has no responsible edge");
  }
  const Edge e = *owner;
  const PointId keep = heavier(e);
  const PointId freed = e.other(keep);
  if (p.weight < r_ * s.point(keep).weight) return Leave{};

  if (!partition_.contains_closed(r, keep))
    violations_.push_back("replacement edge " + to_string(Edge(p.id, keep)) + " leaves region " + std::to_string(r));

  RegionId target = r;
  const auto owned = regions_of(e);
  if (owned.size() == 2) target = partition_.merge_siblings(owned[0], owned[1]);
  partition_.add_member(target, freed);
  auto [c1, c2] = partition_.split(target, p.id, keep);
  partition_.set_responsible(c1, Edge(p.id, keep));
  partition_.set_responsible(c2, Edge(p.id, keep));
  return RevokeAndMatch{e, keep};
}

void BigImprovementMatcher::after_apply(const WeightedPoint&, const OnlineDecision&) {
  std::map<Edge, int> load;
  for (RegionId r : partition_.active_regions()) {
    const auto* owner = std::get_if<Edge>(&partition_.region(r).responsible);
    if (!owner) continue;
    if (!state().edges().contains(*owner))
      violations_.push_back("responsible edge " + to_string(*owner) + " is not matched");
    if (++load[*owner] > 2) violations_.push_back("edge " + to_string(*owner) + " responsible for more than two regions");
  }
  if (!violations_.empty()) throw InvariantViolation("bim: " + violations_.front());
}

std::vector<std::string> BigImprovementMatcher::audit() const { return violations_; }

}  // namespace nca
