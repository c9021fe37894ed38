#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

TwoWeightMatcher::TwoWeightMatcher(Space space, Rational upper)
    : OnlineMatcher(space, MatchMode::Irrevocable), upper_(std::move(upper)), partition_(space) {
  if (upper_ <= 1) throw Error("twm needs U > 1");
}

OnlineDecision TwoWeightMatcher::decide(const WeightedPoint& p) {
  if (p.weight != 1 && p.weight != upper_)
    throw Error("twm accepts weights 1 and U only, got " + to_string(p.weight));
  const MatchingState& s = state();
  const RegionId r = partition_.insert(p.id, p.pos);
  touched_ = {r};

  // Members of an unsplit region are exactly its unmatched points.
  std::vector<PointId> unmatched;
  for (PointId q : partition_.region(r).members)
    if (q != p.id) unmatched.push_back(q);
  if (unmatched.empty()) return Leave{};

  PointId heavy = kNoPoint;
  for (PointId q : unmatched)
    if (s.point(q).weight == upper_) {
      heavy = q;
      break;
    }

  PointId partner = kNoPoint;
  if (heavy != kNoPoint) {
    // cases 1 and 2: a weight-U point in R is always taken
    partner = heavy;
  } else if (p.weight == upper_) {
    partner = unmatched.front();
  } else {
    // case 3: keep at least one unmatched point on each side
    std::size_t best_min = 0;
    for (PointId q : unmatched) {
      auto [a, b] = partition_.side_counts(r, p.id, q, [](PointId) { return true; });
      std::size_t m = std::min(a, b);
      if (m >= 1 && m > best_min) {
        best_min = m;
        partner = q;
      }
    }
  }
  if (partner == kNoPoint) return Leave{};
  auto [c1, c2] = partition_.split(r, p.id, partner);
  touched_ = {c1, c2};
  return Match{partner};
}

std::vector<std::string> TwoWeightMatcher::check_region(RegionId r) const {
  std::vector<std::string> out;
  const auto& members = partition_.region(r).members;
  if (members.size() > 3)
    out.push_back("region " + std::to_string(r) + " holds " + std::to_string(members.size()) + " unmatched points");
  if (members.size() > 1)
    for (PointId q : members)
      if (state().point(q).weight != 1)
        out.push_back("region " + std::to_string(r) + " mixes a weight-U point with others");
  return out;
}

void TwoWeightMatcher::after_apply(const WeightedPoint&, const OnlineDecision&) {
  for (RegionId r : touched_) {
    auto v = check_region(r);
    if (!v.empty()) throw InvariantViolation("twm observation: " + v.front());
  }
}

std::vector<std::string> TwoWeightMatcher::audit() const {
  std::vector<std::string> out;
  for (RegionId r : partition_.active_regions()) {
    auto v = check_region(r);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (RegionId r : partition_.active_regions())
    for (PointId q : partition_.region(r).members)
      if (state().is_matched(q)) out.push_back("matched point " + std::to_string(q) + " still listed as a region member");
  return out;
}

}  // namespace nca
