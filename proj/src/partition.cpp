#include "nca/partition.hpp"

#include <algorithm>

namespace nca {

ConvexPartition::ConvexPartition(Space space) : space_(space) {
  if (space == Space::Line) throw Error("convex partitions support plane and circle spaces only");
  regions_.push_back(Region{});
}

void ConvexPartition::register_point(PointId id, Position pos) {
  if (id != positions_.size() + 1) throw Error("partition points must be registered in arrival order");
  if (pos.space() != space_) throw Error("mixed position spaces");
  positions_.push_back(std::move(pos));
}

const Position& ConvexPartition::position(PointId id) const {
  if (id == kNoPoint || id > positions_.size()) throw Error("unknown point id " + std::to_string(id));
  return positions_[id - 1];
}

const Region& ConvexPartition::region(RegionId r) const {
  if (r >= regions_.size()) throw Error("unknown region " + std::to_string(r));
  return regions_[r];
}

Region& ConvexPartition::mut(RegionId r) {
  if (r >= regions_.size()) throw Error("unknown region " + std::to_string(r));
  return regions_[r];
}

Side ConvexPartition::side_of(PointId a, PointId b, const Position& p) const {
  const Position& pa = position(a);
  const Position& pb = position(b);
  if (space_ == Space::Plane) {
    int s = orientation_sign(pa.as_plane(), pb.as_plane(), p.as_plane());
    if (s == 0) throw Error("degenerate position: point lies on a splitting line");
    return s > 0 ? Side::Positive : Side::Negative;
  }
  const Rational& t = p.as_circle().t;
  if (t == pa.as_circle().t || t == pb.as_circle().t) throw Error("degenerate position: point lies on a splitting chord");
  return circular_side(pa, pb, p) == ArcSide::AB ? Side::Positive : Side::Negative;
}

RegionId ConvexPartition::locate(const Position& p) const {
  if (p.space() != space_) throw Error("mixed position spaces");
  RegionId r = kRootRegion;
  while (regions_[r].children) {
    const auto [pos, neg] = *regions_[r].children;
    const SplitConstraint& c = *regions_[pos].constraint;
    r = side_of(c.a, c.b, p) == Side::Positive ? pos : neg;
  }
  return r;
}

RegionId ConvexPartition::insert(PointId id, Position pos) {
  register_point(id, std::move(pos));
  RegionId r = locate(positions_.back());
  regions_[r].members.push_back(id);
  return r;
}

void ConvexPartition::add_member(RegionId r, PointId id) {
  Region& reg = mut(r);
  if (!reg.active) throw Error("cannot add a member to an inactive region");
  position(id);
  auto it = std::lower_bound(reg.members.begin(), reg.members.end(), id);
  if (it == reg.members.end() || *it != id) reg.members.insert(it, id);
}

std::pair<RegionId, RegionId> ConvexPartition::split(RegionId r, PointId i, PointId j) {
  if (!mut(r).active) throw Error("cannot split inactive region " + std::to_string(r));
  if (i == j) throw Error("split needs two distinct points");
  position(i);
  position(j);
  const RegionId pos = regions_.size();
  const RegionId neg = pos + 1;
  Region child;
  child.parent = r;
  child.id = pos;
  child.constraint = SplitConstraint{i, j, Side::Positive};
  regions_.push_back(child);
  child.id = neg;
  child.constraint = SplitConstraint{i, j, Side::Negative};
  regions_.push_back(child);

  Region& parent = regions_[r];
  for (PointId m : parent.members) {
    if (m == i || m == j) continue;
    RegionId target = side_of(i, j, positions_[m - 1]) == Side::Positive ? pos : neg;
    regions_[target].members.push_back(m);
  }
  parent.members.clear();
  parent.active = false;
  parent.ever_split = true;
  parent.children = std::make_pair(pos, neg);
  return {pos, neg};
}

RegionId ConvexPartition::merge_siblings(RegionId r1, RegionId r2) {
  const Region& a = region(r1);
  const Region& b = region(r2);
  if (!a.parent || !b.parent || *a.parent != *b.parent || r1 == r2) throw Error("merge_siblings: regions are not siblings");
  Region& parent = mut(*a.parent);
  if (!parent.children || !((parent.children->first == r1 && parent.children->second == r2) ||
                            (parent.children->first == r2 && parent.children->second == r1)))
    throw Error("merge_siblings: regions are not the current children of their parent");
  if (a.ever_split || b.ever_split) throw Error("merge_siblings: a child was split");
  if (!a.active || !b.active) throw Error("merge_siblings: a child is inactive");

  std::vector<PointId> members = a.members;
  members.insert(members.end(), b.members.begin(), b.members.end());
  std::sort(members.begin(), members.end());
  mut(r1).active = false;
  mut(r2).active = false;
  mut(r1).responsible = std::monostate{};
  mut(r2).responsible = std::monostate{};
  parent.retired.push_back(*parent.children);
  parent.children.reset();
  parent.active = true;
  parent.responsible = std::monostate{};
  parent.members = std::move(members);
  return parent.id;
}

std::vector<SplitConstraint> ConvexPartition::constraints(RegionId r) const {
  std::vector<SplitConstraint> out;
  for (const Region* reg = &region(r); reg->constraint; reg = &regions_[*reg->parent]) out.push_back(*reg->constraint);
  std::reverse(out.begin(), out.end());
  return out;
}

bool ConvexPartition::contains(RegionId r, const Position& p) const {
  for (const SplitConstraint& c : constraints(r))
    if (side_of(c.a, c.b, p) != c.side) return false;
  return true;
}

bool ConvexPartition::contains_closed(RegionId r, PointId id) const {
  const Position& p = position(id);
  for (const SplitConstraint& c : constraints(r)) {
    if (c.a == id || c.b == id) continue;
    if (side_of(c.a, c.b, p) != c.side) return false;
  }
  return true;
}

void ConvexPartition::set_responsible(RegionId r, Responsibility who) { mut(r).responsible = std::move(who); }

std::vector<RegionId> ConvexPartition::active_regions() const {
  std::vector<RegionId> out;
  for (const Region& reg : regions_)
    if (reg.active) out.push_back(reg.id);
  return out;
}

}  // namespace nca
