#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nca/matching.hpp"

namespace nca {

class ConvexPartition;

struct Leave {
  friend bool operator==(const Leave&, const Leave&) = default;
};
struct Match {
  PointId partner = kNoPoint;
  friend bool operator==(const Match&, const Match&) = default;
};
struct RevokeAndMatch {
  Edge revoked;
  PointId partner = kNoPoint;
  friend bool operator==(const RevokeAndMatch&, const RevokeAndMatch&) = default;
};

using OnlineDecision = std::variant<Leave, Match, RevokeAndMatch>;

std::string to_string(const OnlineDecision& d);

/// Common driver: the matcher owns its MatchingState, appends each arrival,
/// asks the concrete algorithm for a decision and applies it.
class OnlineMatcher {
 public:
  OnlineMatcher(Space space, MatchMode mode);
  virtual ~OnlineMatcher() = default;
  OnlineMatcher(const OnlineMatcher&) = delete;
  OnlineMatcher& operator=(const OnlineMatcher&) = delete;

  virtual std::string name() const = 0;

  OnlineDecision on_arrival(const Position& pos, const Rational& weight);
  /// Same, but checks that `p.id` is the next arrival index.
  OnlineDecision on_arrival(const WeightedPoint& p);

  const MatchingState& state() const { return state_; }

  /// End-of-run consistency checks. Each string describes one violation.
  virtual std::vector<std::string> audit() const { return {}; }

  /// Region tree, for algorithms that keep one.
  virtual const ConvexPartition* region_tree() const { return nullptr; }

 protected:
  /// Decide for the point just appended to state(); update private bookkeeping.
  virtual OnlineDecision decide(const WeightedPoint& p) = 0;
  /// Called after the decision has been applied to the matching.
  virtual void after_apply(const WeightedPoint&, const OnlineDecision&) {}

 private:
  MatchingState state_;
};

struct MatcherParams {
  std::optional<Rational> upper;     // U for twm / wam
  std::optional<Rational> bim_r;     // defaults to the balanced parameter
  std::uint64_t seed = 0;            // tgm / rrm
  std::vector<bool> advice;          // sam: decoded Dyck word
};

/// greedy | never | twm | wam | tgm | bim | rrm | sam
std::unique_ptr<OnlineMatcher> make_matcher(const std::string& name, Space space, const MatcherParams& params);

std::vector<std::string> matcher_names();
/// Whether the named algorithm may revoke edges.
bool matcher_revokes(const std::string& name);

}  // namespace nca
