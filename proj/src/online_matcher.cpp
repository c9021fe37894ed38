#include "nca/online_matcher.hpp"

#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

std::string to_string(const OnlineDecision& d) {
  if (std::holds_alternative<Leave>(d)) return "leave";
  if (auto m = std::get_if<Match>(&d)) return "match " + std::to_string(m->partner);
  const auto& r = std::get<RevokeAndMatch>(d);
  return "revoke " + to_string(r.revoked) + " match " + std::to_string(r.partner);
}

OnlineMatcher::OnlineMatcher(Space space, MatchMode mode) : state_(space, mode) {}

OnlineDecision OnlineMatcher::on_arrival(const WeightedPoint& p) {
  if (p.id != state_.size() + 1)
    throw Error("arrival id " + std::to_string(p.id) + " out of order, expected " + std::to_string(state_.size() + 1));
  return on_arrival(p.pos, p.weight);
}

OnlineDecision OnlineMatcher::on_arrival(const Position& pos, const Rational& weight) {
  const WeightedPoint& p = state_.add_point(pos, weight);
  OnlineDecision d = decide(p);
  if (auto m = std::get_if<Match>(&d)) {
    state_.apply_match(p.id, m->partner);
  } else if (auto r = std::get_if<RevokeAndMatch>(&d)) {
    state_.apply_revoke(r->revoked.a, r->revoked.b);
    state_.apply_match(p.id, r->partner);
  }
  after_apply(p, d);
  return d;
}

std::vector<std::string> matcher_names() { return {"greedy", "never", "twm", "wam", "tgm", "bim", "rrm", "sam"}; }

bool matcher_revokes(const std::string& name) { return name == "bim" || name == "rrm"; }

std::unique_ptr<OnlineMatcher> make_matcher(const std::string& name, Space space, const MatcherParams& params) {
  auto need_regions = [&] {
    if (space == Space::Line) throw Error("algorithm " + name + " needs plane or circle input");
  };
  auto need_upper = [&]() -> const Rational& {
    if (!params.upper) throw Error("algorithm " + name + " needs --U");
    return *params.upper;
  };
  if (name == "greedy") return std::make_unique<GreedyMatcher>(space);
  if (name == "never") return std::make_unique<NeverMatcher>(space);
  if (name == "twm") {
    need_regions();
    return std::make_unique<TwoWeightMatcher>(space, need_upper());
  }
  if (name == "wam") {
    need_regions();
    return std::make_unique<WaitAndMatch>(space, need_upper());
  }
  if (name == "tgm") {
    need_regions();
    return std::make_unique<TreeGuidedMatcher>(space, params.seed);
  }
  if (name == "bim") {
    need_regions();
    return std::make_unique<BigImprovementMatcher>(space, params.bim_r ? *params.bim_r : balanced_revoke_parameter());
  }
  if (name == "rrm") {
    if (space != Space::Line) throw Error("algorithm rrm needs line input");
    return std::make_unique<RandomRevokingMatcher>(space, params.seed);
  }
  if (name == "sam") {
    need_regions();
    return std::make_unique<SplitAndMatch>(space, params.advice);
  }
  throw Error("unknown algorithm '" + name + "'");
}

}  // namespace nca
