#pragma once

#include <map>
#include <random>

#include "nca/classification.hpp"
#include "nca/online_matcher.hpp"
#include "nca/partition.hpp"

namespace nca {

/// Nearest reachable unmatched point (Euclidean, arc, or coordinate
/// distance by space); ties go to the earliest arrival.
class GreedyMatcher final : public OnlineMatcher {
 public:
  explicit GreedyMatcher(Space space);
  std::string name() const override { return "greedy"; }
  const ConvexPartition* region_tree() const override { return regions_ ? &*regions_ : nullptr; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;

 private:
  OnlineDecision decide_circle(const WeightedPoint& p);
  std::optional<ConvexPartition> regions_;  // circle mode only
  std::map<Rational, PointId> line_order_;  // line mode only
};

/// Never matches anything. Useful as a null baseline against adversaries.
class NeverMatcher final : public OnlineMatcher {
 public:
  explicit NeverMatcher(Space space) : OnlineMatcher(space, MatchMode::Irrevocable) {}
  std::string name() const override { return "never"; }

 protected:
  OnlineDecision decide(const WeightedPoint&) override { return Leave{}; }
};

/// Two weights {1, U}.
class TwoWeightMatcher final : public OnlineMatcher {
 public:
  TwoWeightMatcher(Space space, Rational upper);
  std::string name() const override { return "twm"; }
  std::vector<std::string> audit() const override;
  const ConvexPartition* region_tree() const override { return &partition_; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;
  void after_apply(const WeightedPoint& p, const OnlineDecision& d) override;

 private:
  std::vector<std::string> check_region(RegionId r) const;

  Rational upper_;
  ConvexPartition partition_;
  std::vector<RegionId> touched_;
};

/// Weight classes over [1, U]: a candidate q is accepted when each side of
/// pq keeps at least 2^(k-i)-1 unmatched points, i the segment type.
class WaitAndMatch final : public OnlineMatcher {
 public:
  WaitAndMatch(Space space, Rational upper);
  std::string name() const override { return "wam"; }
  std::vector<std::string> audit() const override;
  const WeightClasses& classes() const { return classes_; }
  const ConvexPartition* region_tree() const override { return &partition_; }
  /// Segment each point was charged to on arrival; nullopt means the
  /// pre-matched imaginary segment of type k.
  const std::vector<std::optional<Edge>>& mapping() const { return mapped_; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;

 private:
  WeightClasses classes_;
  ConvexPartition partition_;
  std::vector<unsigned> types_;
  std::vector<std::optional<Edge>> mapped_;
};

/// Randomized: every point becomes a tree child of the point responsible
/// for its region and is matched to its parent with probability 1/3.
class TreeGuidedMatcher final : public OnlineMatcher {
 public:
  TreeGuidedMatcher(Space space, std::uint64_t seed);
  std::string name() const override { return "tgm"; }
  const ConvexPartition* region_tree() const override { return &partition_; }
  std::vector<std::string> audit() const override;
  PointId parent(PointId id) const { return parent_.at(id - 1); }
  unsigned child_count(PointId id) const { return children_.at(id - 1); }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;

 private:
  double draw();

  ConvexPartition partition_;
  std::mt19937_64 rng_;
  std::vector<PointId> parent_;
  std::vector<unsigned> children_;
};

/// Revoking algorithm with arbitrary weights; `r` in (1, sqrt 2].
class BigImprovementMatcher final : public OnlineMatcher {
 public:
  BigImprovementMatcher(Space space, Rational r);
  std::string name() const override { return "bim"; }
  std::vector<std::string> audit() const override;
  const Rational& r() const { return r_; }
  const ConvexPartition* region_tree() const override { return &partition_; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;
  void after_apply(const WeightedPoint& p, const OnlineDecision& d) override;

 private:
  std::vector<RegionId> regions_of(const Edge& e) const;
  PointId heavier(const Edge& e) const;

  Rational r_;
  ConvexPartition partition_;
  std::vector<std::string> violations_;
};

/// Positive root of r^3 = (r^2 - 1)(1 + 2r), as a dyadic rational accurate to 2^-60.
Rational balanced_revoke_parameter();
/// min{(r^2-1)/r^3, 1/(1+2r)}.
Rational revoke_ratio_bound(const Rational& r);

/// Line intervals for the randomized revoking algorithm.
struct LineInterval {
  PointId lo = kNoPoint, hi = kNoPoint;  // kNoPoint is an infinite end
  bool lo_closed = false, hi_closed = false;
  std::vector<PointId> interior;         // points strictly inside

  enum class Kind { Open, LeftClosed, RightClosed, Closed };
  Kind kind() const;
};

class IntervalPartition {
 public:
  IntervalPartition();
  std::size_t locate(const MatchingState& s, const Rational& x) const;
  const std::vector<LineInterval>& intervals() const { return intervals_; }
  std::vector<LineInterval>& intervals() { return intervals_; }
  /// The three structural invariants plus tiling consistency.
  std::vector<std::string> check(const MatchingState& s) const;

 private:
  std::vector<LineInterval> intervals_;
};

class RandomRevokingMatcher final : public OnlineMatcher {
 public:
  RandomRevokingMatcher(Space space, std::uint64_t seed);
  std::string name() const override { return "rrm"; }
  std::vector<std::string> audit() const override;
  const IntervalPartition& intervals() const { return intervals_; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;
  void after_apply(const WeightedPoint& p, const OnlineDecision& d) override;

 private:
  IntervalPartition intervals_;
  std::mt19937_64 rng_;
  std::vector<std::string> violations_;
};

/// Perfect matching driven by an advice Dyck word (index i is arrival i).
class SplitAndMatch final : public OnlineMatcher {
 public:
  SplitAndMatch(Space space, std::vector<bool> advice);
  std::string name() const override { return "sam"; }
  const ConvexPartition* region_tree() const override { return &partition_; }

 protected:
  OnlineDecision decide(const WeightedPoint& p) override;

 private:
  std::vector<bool> advice_;
  ConvexPartition partition_;
};

}  // namespace nca
