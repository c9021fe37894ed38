#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "nca/matching.hpp"

namespace nca {

/// Total weight; OPT always matches everything.
Rational opt_value(std::span<const WeightedPoint> points);

struct OfflineMatching {
  std::set<Edge> edges;
  double total_length = 0;  // informational; comparisons are exact
};

/// Minimum total Euclidean length perfect matching by enumeration.
/// Plane only, at most 14 points.
OfflineMatching brute_force_perfect_nm(std::span<const WeightedPoint> points);

/// Recursive construction: match the lexicographically least point to the
/// first angular candidate leaving an even count on both sides, recurse.
OfflineMatching split_perfect_nm(std::span<const WeightedPoint> points);

/// All properly crossing edge pairs (empty when valid).
std::vector<std::pair<Edge, Edge>> validate_non_crossing(std::span<const WeightedPoint> points,
                                                         const std::set<Edge>& edges);

/// Every point covered exactly once.
bool is_perfect(std::size_t point_count, const std::set<Edge>& edges);

struct RatioSummary {
  std::vector<Rational> ratios;
  double mean = 0;
  Rational min;
  double half_width = 0;  // 99% normal-approximation confidence half-width
};

RatioSummary empirical_ratio(std::span<const RunOutcome> outcomes);

/// Mean and 99% half-width of arbitrary samples.
std::pair<double, double> mean_and_half_width(std::span<const double> samples);

}  // namespace nca
