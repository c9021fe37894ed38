#pragma once

#include <map>
#include <vector>

#include "nca/matching.hpp"

namespace nca {

/// Faces of the disk cut by the current (non-crossing) chords. A face is
/// named by the innermost chord enclosing it, viewing each chord as the
/// interval [min t, max t]; the face outside every chord is kOuterFace.
using FaceLabel = Edge;
inline const FaceLabel kOuterFace{};

struct Gap {
  Rational start;   // arc position of the point opening the gap
  Rational length;  // counter-clockwise length, in (0, 1]
  PointId before = kNoPoint, after = kNoPoint;
  FaceLabel face;
};

class ChordRegions {
 public:
  explicit ChordRegions(const MatchingState& state);

  FaceLabel face_of_point(PointId id) const { return point_face_.at(id); }
  const std::vector<Gap>& gaps() const { return gaps_; }

  /// Unmatched points inside the face, by arrival order.
  std::vector<PointId> unmatched_in(const FaceLabel& face) const;

  /// Midpoint of the longest gap of the face (first such in circle order).
  Rational fresh_position(const FaceLabel& face) const;
  bool face_exists(const FaceLabel& face) const;
  /// Midpoint of the longest gap overall (t = 0 on an empty circle).
  Rational largest_gap_midpoint() const;

  /// Faces of the gaps just clockwise and just counter-clockwise of a point.
  FaceLabel face_clockwise_of(PointId id) const;
  FaceLabel face_counter_clockwise_of(PointId id) const;

  /// Face on the outer side of a chord.
  FaceLabel parent_face(const Edge& chord) const;

  /// Whether chord `inner` lies inside chord `outer`.
  bool encloses(const Edge& outer, const Edge& inner) const;

 private:
  const MatchingState& state_;
  std::vector<PointId> order_;            // points sorted by t
  std::map<PointId, std::size_t> slot_;   // position in order_
  std::map<PointId, FaceLabel> point_face_;
  std::vector<Gap> gaps_;                 // gaps_[i] follows order_[i]
};

}  // namespace nca
