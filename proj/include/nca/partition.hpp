#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nca/errors.hpp"
#include "nca/geometry.hpp"
#include "nca/matching.hpp"

namespace nca {

using RegionId = std::size_t;
inline constexpr RegionId kRootRegion = 0;

/// Plane: Positive is the counter-clockwise side of the directed line a->b.
/// Circle: Positive is the counter-clockwise arc from a to b.
enum class Side { Negative = -1, Positive = 1 };

struct SplitConstraint {
  PointId a = kNoPoint, b = kNoPoint;
  Side side = Side::Positive;
};

/// Nobody, a point (TWM/WAM/TGM/SAM), or a matched edge (BIM).
using Responsibility = std::variant<std::monostate, PointId, Edge>;

struct Region {
  RegionId id = kRootRegion;
  std::optional<RegionId> parent;
  std::optional<SplitConstraint> constraint;  // the split that created this region
  bool active = true;
  bool ever_split = false;
  std::optional<std::pair<RegionId, RegionId>> children;   // (positive, negative)
  std::vector<std::pair<RegionId, RegionId>> retired;       // splits undone by merges
  Responsibility responsible;
  std::vector<PointId> members;  // located points strictly inside, arrival order
};

/// Convex partition of the plane (or the disk bounded by the circle) into
/// regions described by constraint lists, never by polygons. The whole
/// region tree is kept so merges and replays can walk the history.
class ConvexPartition {
 public:
  explicit ConvexPartition(Space space);

  Space space() const { return space_; }

  /// Records the position of the next point id (ids must be consecutive).
  void register_point(PointId id, Position pos);
  const Position& position(PointId id) const;
  std::size_t registered() const { return positions_.size(); }

  RegionId locate(const Position& p) const;
  /// register_point + locate + add_member.
  RegionId insert(PointId id, Position pos);
  void add_member(RegionId r, PointId id);

  std::pair<RegionId, RegionId> split(RegionId r, PointId i, PointId j);
  RegionId merge_siblings(RegionId r1, RegionId r2);

  /// Members of `r` accepted by `filter`, excluding i and j, strictly on
  /// each side of line(i, j): (positive, negative).
  template <class Filter>
  std::pair<std::size_t, std::size_t> side_counts(RegionId r, PointId i, PointId j, Filter&& filter) const {
    const Region& reg = region(r);
    if (!reg.active) throw Error("side_counts on inactive region");
    std::size_t pos = 0, neg = 0;
    for (PointId m : reg.members) {
      if (m == i || m == j || !filter(m)) continue;
      (side_of(i, j, positions_[m - 1]) == Side::Positive ? pos : neg)++;
    }
    return {pos, neg};
  }

  Side side_of(PointId a, PointId b, const Position& p) const;

  std::vector<SplitConstraint> constraints(RegionId r) const;
  bool contains(RegionId r, const Position& p) const;
  /// Like contains, but a defining point of a constraint counts as on its boundary.
  bool contains_closed(RegionId r, PointId id) const;

  const Region& region(RegionId r) const;
  void set_responsible(RegionId r, Responsibility who);
  std::vector<RegionId> active_regions() const;
  std::size_t region_count() const { return regions_.size(); }

 private:
  Region& mut(RegionId r);

  Space space_;
  std::vector<Position> positions_;
  std::vector<Region> regions_;
};

}  // namespace nca
