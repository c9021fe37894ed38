#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nca/adversary.hpp"
#include "nca/generators.hpp"
#include "nca/io.hpp"
#include "nca/online_matcher.hpp"

namespace nca {

enum ExitCode { kExitPass = 0, kExitInvariant = 2, kExitBound = 3, kExitInput = 4 };

/// Worker count: `requested` if nonzero, else hardware concurrency, capped by NCA_THREADS.
unsigned thread_count(unsigned requested = 0);
/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct ExperimentConfig {
  std::string algorithm;
  std::optional<Rational> upper;
  std::optional<Rational> bim_r;
  // input: a file, or a generator
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> tape;
  std::string generator;
  std::size_t points = 0;
  std::string weights = "unit";
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Rational total, matched;
  std::size_t pairs = 0;
  std::size_t revokes = 0;
  std::vector<std::string> violations;
  std::vector<bool> matched_flags;
};

struct BoundCheck {
  std::string name;
  double value = 0;
  double bound = 0;
  bool pass = true;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  double mean_ratio = 0, ratio_half_width = 0;
  Rational min_ratio;
  double mean_pairs = 0, pairs_half_width = 0;
  /// Smallest per-arrival-index match frequency (inputs of equal size only).
  std::optional<double> min_point_frequency;
  std::vector<BoundCheck> bounds;
  Json first_snapshot;  // final state of trial 0

  std::size_t violation_count() const;
  int exit_code() const;
};

/// Validates the configuration, then runs every trial. Throws nca::Error on
/// configuration or input problems.
ExperimentResult run_experiment(const ExperimentConfig& config);
Json report_json(const ExperimentResult& result);

struct DuelConfig {
  std::string algorithm;
  std::optional<Rational> upper;
  std::optional<Rational> bim_r;
  std::uint64_t seed = 0;
  std::string adversary;  // two-weight | restricted | revoking | collinear-revoking
  unsigned k = 0;         // two-weight phase length
  std::size_t m = 0;      // restricted: number of edges
  std::size_t n = 0;      // revoking: phases / points
};

struct DuelOutcome {
  DuelConfig config;
  DuelResult result;
  Json snapshot;
  int exit_code() const;
};

std::unique_ptr<Adversary> make_adversary(const DuelConfig& config);
std::vector<std::string> adversary_names();
DuelOutcome run_duel(const DuelConfig& config);
Json report_json(const DuelOutcome& outcome);

/// One CSV row per parameter value; `param` is "r" or "U".
std::string run_sweep(const ExperimentConfig& base, const std::string& param, const std::vector<Rational>& values);

}  // namespace nca
