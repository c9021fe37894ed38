#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

TreeGuidedMatcher::TreeGuidedMatcher(Space space, std::uint64_t seed)
    : OnlineMatcher(space, MatchMode::Irrevocable), partition_(space), rng_(seed) {}

double TreeGuidedMatcher::draw() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

OnlineDecision TreeGuidedMatcher::decide(const WeightedPoint& p) {
  const RegionId r = partition_.insert(p.id, p.pos);
  parent_.push_back(kNoPoint);
  children_.push_back(0);
  const auto* owner = std::get_if<PointId>(&partition_.region(r).responsible);
  if (p.id == 1) {
    partition_.set_responsible(r, PointId{1});
    return Leave{};
  }
  if (!owner) throw InvariantViolation("tgm: region without a responsible point");
  const PointId q = *owner;
  parent_[p.id - 1] = q;
  const unsigned nth = ++children_[q - 1];
  if (nth > 2) throw InvariantViolation("tgm: point " + std::to_string(q) + " got a third child");

  auto [c1, c2] = partition_.split(r, p.id, q);
  partition_.set_responsible(c1, p.id);
  partition_.set_responsible(c2, p.id);

  const double u = draw();
  bool take = false;
  if (p.id == 2) take = u < 1.0 / 3.0;
  else if (!state().is_matched(q)) take = nth == 1 ? u < 0.5 : true;
  if (take) return Match{q};
  return Leave{};
}

std::vector<std::string> TreeGuidedMatcher::audit() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < children_.size(); ++i)
    if (children_[i] > 2) out.push_back("tree node " + std::to_string(i + 1) + " has more than two children");
  for (const Edge& e : state().edges())
    if (parent_[e.b - 1] != e.a) out.push_back("edge " + to_string(e) + " is not a parent-child pair");
  return out;
}

}  // namespace nca
