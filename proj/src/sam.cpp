#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

SplitAndMatch::SplitAndMatch(Space space, std::vector<bool> advice)
    : OnlineMatcher(space, MatchMode::Irrevocable), advice_(std::move(advice)), partition_(space) {}

OnlineDecision SplitAndMatch::decide(const WeightedPoint& p) {
  if (p.id > advice_.size()) throw Error("advice corrupted: advice exhausted at arrival " + std::to_string(p.id));
  const bool bit = advice_[p.id - 1];
  const RegionId r = partition_.insert(p.id, p.pos);
  const auto* owner = std::get_if<PointId>(&partition_.region(r).responsible);
  if (!owner) {
    if (bit) throw Error("advice corrupted: match bit at arrival " + std::to_string(p.id) + " with no responsible point");
    partition_.set_responsible(r, p.id);
    return Leave{};
  }
  const PointId q = *owner;
  partition_.set_responsible(r, std::monostate{});
  auto [first, second] = partition_.split(r, p.id, q);
  if (bit) return Match{q};
  partition_.set_responsible(first, q);
  partition_.set_responsible(second, p.id);
  return Leave{};
}

}  // namespace nca
