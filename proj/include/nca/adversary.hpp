#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nca/classification.hpp"
#include "nca/online_matcher.hpp"

namespace nca {

struct TranscriptStep {
  std::size_t step = 0;
  Position pos;
  Rational weight;
  OnlineDecision decision;
  std::uint64_t state_hash = 0;
};

/// The only view an adversary gets of the algorithm: emit a point, read
/// back the decision and a read-only matching snapshot. Every emission is
/// checked for general position against the points so far.
class Arena {
 public:
  explicit Arena(OnlineMatcher& alg);

  OnlineDecision emit(const Position& pos, const Rational& weight);
  const MatchingState& state() const { return alg_.state(); }
  std::size_t emitted() const { return transcript_.size(); }
  const std::vector<TranscriptStep>& transcript() const { return transcript_; }

 private:
  OnlineMatcher& alg_;
  std::set<Rational> seen_;  // circle / line positions
  std::vector<TranscriptStep> transcript_;
};

/// Certified quantities and assertion results an adversary reports.
struct AdversaryReport {
  std::vector<std::string> violations;
  std::map<std::string, std::string> facts;
  /// Exact per-region ratio certificates: (label, value, bound).
  struct Certificate {
    std::string label;
    Rational value, bound;
  };
  std::vector<Certificate> certificates;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual Space space() const = 0;
  /// Plays to completion. Throws InvariantViolation when the algorithm
  /// steps outside the construction's case analysis.
  virtual void play(Arena& arena) = 0;
  /// Post-run assertions; call after play.
  virtual AdversaryReport report(const MatchingState& final_state) const = 0;
};

/// Two weights {1, U} on a circle.
class TwoWeightAdversary final : public Adversary {
 public:
  TwoWeightAdversary(Rational upper, unsigned k);
  std::string name() const override { return "two-weight"; }
  Space space() const override { return Space::Circle; }
  void play(Arena& arena) override;
  AdversaryReport report(const MatchingState& final_state) const override;

  struct RegionCase {
    std::string kind;  // S0 .. S4 and how it resolved
  };
  const std::vector<RegionCase>& cases() const { return cases_; }

 private:
  void attack_single(Arena& arena, const Edge& face);
  Rational upper_;
  unsigned k_;
  std::size_t first_phase_chords_ = 0;
  bool ended_early_ = false;
  std::vector<RegionCase> cases_;
};

/// Weights in [1, U] on a circle; k, r and a_i from the weight classes.
class RestrictedAdversary final : public Adversary {
 public:
  RestrictedAdversary(Rational upper, std::size_t m);
  std::string name() const override { return "restricted"; }
  Space space() const override { return Space::Circle; }
  void play(Arena& arena) override;
  AdversaryReport report(const MatchingState& final_state) const override;

 private:
  WeightClasses classes_;
  std::size_t m_;
  bool ended_early_ = false;
  AdversaryReport findings_;
};

/// Unit weights on a circle; the algorithm may revoke.
class RevokingAdversary final : public Adversary {
 public:
  explicit RevokingAdversary(std::size_t n);
  std::string name() const override { return "revoking"; }
  Space space() const override { return Space::Circle; }
  void play(Arena& arena) override;
  AdversaryReport report(const MatchingState& final_state) const override;

 private:
  std::vector<std::string> check_associations(const MatchingState& s, const Edge& active) const;
  std::size_t n_;
  std::map<Edge, PointId> assoc_;
  std::vector<std::string> violations_;
  std::size_t phases_ = 0;
};

/// Unit weights on a line; keeps the algorithm at one matched pair at a time.
class CollinearRevokingAdversary final : public Adversary {
 public:
  explicit CollinearRevokingAdversary(std::size_t n);
  std::string name() const override { return "collinear-revoking"; }
  Space space() const override { return Space::Line; }
  void play(Arena& arena) override;
  AdversaryReport report(const MatchingState& final_state) const override;

 private:
  std::size_t n_;
  std::size_t max_concurrent_ = 0;
};

/// Replays a fixed (oblivious) sequence.
class SequenceAdversary final : public Adversary {
 public:
  SequenceAdversary(std::string label, std::vector<WeightedPoint> points);
  std::string name() const override { return label_; }
  Space space() const override;
  void play(Arena& arena) override;
  AdversaryReport report(const MatchingState&) const override { return {}; }

 private:
  std::string label_;
  std::vector<WeightedPoint> points_;
};

/// Circle input driven by left/right and skip coins; unit weights.
std::vector<WeightedPoint> yao_random_input(std::size_t n, std::uint64_t seed);
/// Same construction with explicit coins: each call returns the next coin.
std::vector<WeightedPoint> yao_input_from_coins(std::size_t n, const std::function<bool()>& left_coin,
                                                const std::function<bool()>& skip_coin);

/// Line input: 0, 1, 1/2, then midpoints beside the previous point.
std::vector<WeightedPoint> collinear_random_input(std::size_t n, std::uint64_t seed);
std::vector<WeightedPoint> collinear_input_from_coins(std::size_t n, const std::function<bool()>& left_coin);

struct DuelResult {
  std::vector<TranscriptStep> transcript;
  RunOutcome outcome;
  AdversaryReport adversary;
  std::vector<std::string> audit;      // algorithm self-checks
  std::vector<std::string> crossings;  // non-crossing validation
  /// Protocol abort: the algorithm left the construction's case analysis
  /// or an invariant check fired. The transcript stops at the abort.
  std::optional<std::string> aborted;
};

DuelResult run_duel(Adversary& adversary, OnlineMatcher& alg);

}  // namespace nca
