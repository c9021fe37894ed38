#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nca/geometry.hpp"
#include "nca/rational.hpp"

namespace nca {

/// 1-based arrival index; 0 means "no point".
using PointId = std::size_t;
inline constexpr PointId kNoPoint = 0;

struct WeightedPoint {
  PointId id = kNoPoint;
  Position pos;
  Rational weight;
};

/// Unordered pair of point ids, stored with a < b.
struct Edge {
  PointId a = kNoPoint, b = kNoPoint;
  Edge() = default;
  Edge(PointId i, PointId j) : a(std::min(i, j)), b(std::max(i, j)) {}
  bool has(PointId p) const { return a == p || b == p; }
  PointId other(PointId p) const { return a == p ? b : a; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

enum class MatchMode { Irrevocable, Revocable };

struct RevokedEdge {
  Edge edge;
  std::size_t at;  // number of arrived points when the edge was removed
};

struct RunOutcome {
  Rational total_weight;
  Rational matched_weight;
  std::size_t matched_pairs = 0;
  std::vector<bool> matched;  // indexed by id - 1

  Rational ratio() const;
};

/// Points seen so far plus the current non-crossing matching.
/// Single writer; every mutation re-establishes the non-crossing invariant.
class MatchingState {
 public:
  MatchingState(Space space, MatchMode mode);

  Space space() const { return space_; }
  MatchMode mode() const { return mode_; }

  /// Appends the next arrival. Weight must be strictly positive.
  const WeightedPoint& add_point(Position pos, Rational weight);

  void apply_match(PointId i, PointId j);
  void apply_revoke(PointId i, PointId j);

  std::size_t size() const { return points_.size(); }
  const WeightedPoint& point(PointId id) const;
  const std::vector<WeightedPoint>& points() const { return points_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<RevokedEdge>& revoked() const { return revoked_; }

  bool is_matched(PointId id) const { return partner(id) != kNoPoint; }
  PointId partner(PointId id) const;

  /// Whether segment (i, j) properly crosses any current edge.
  bool crosses_current(PointId i, PointId j) const;

  /// Exhaustive all-pairs check; empty when the matching is non-crossing.
  std::vector<std::pair<Edge, Edge>> crossing_pairs() const;

  RunOutcome outcome() const;

  /// FNV-1a over the sorted edge list and point count.
  std::uint64_t hash() const;

 private:
  void check_id(PointId id) const;

  Space space_;
  MatchMode mode_;
  std::vector<WeightedPoint> points_;
  std::vector<PointId> partner_;
  std::set<Edge> edges_;
  std::vector<RevokedEdge> revoked_;
};

}  // namespace nca
