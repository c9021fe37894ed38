#include <algorithm>
#include <map>

#include "nca/algorithms.hpp"
#include "nca/errors.hpp"

namespace nca {

WaitAndMatch::WaitAndMatch(Space space, Rational upper)
    : OnlineMatcher(space, MatchMode::Irrevocable), classes_(std::move(upper)), partition_(space) {}

OnlineDecision WaitAndMatch::decide(const WeightedPoint& p) {
  const MatchingState& s = state();
  types_.push_back(classes_.type(p.weight));
  const RegionId r = partition_.insert(p.id, p.pos);
  const Region& reg = partition_.region(r);
  if (reg.constraint) mapped_.push_back(Edge(reg.constraint->a, reg.constraint->b));
  else mapped_.push_back(std::nullopt);

  std::vector<PointId> candidates;
  for (PointId q : reg.members)
    if (q != p.id) candidates.push_back(q);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](PointId a, PointId b) { return s.point(a).weight > s.point(b).weight; });

  const unsigned k = classes_.k();
  for (PointId q : candidates) {
    const unsigned i = segment_type(types_[p.id - 1], types_[q - 1]);
    const std::size_t need = (std::size_t{1} << (k - i)) - 1;
    if (need > 0) {
      auto [a, b] = partition_.side_counts(r, p.id, q, [](PointId) { return true; });
      if (a < need || b < need) continue;
    }
    partition_.split(r, p.id, q);
    return Match{q};
  }
  return Leave{};
}

std::vector<std::string> WaitAndMatch::audit() const {
  std::vector<std::string> out;
  const MatchingState& s = state();
  const unsigned k = classes_.k();
  auto seg_type = [&](const std::optional<Edge>& e) {
    return e ? segment_type(types_[e->a - 1], types_[e->b - 1]) : k;
  };
  auto seg_name = [](const std::optional<Edge>& e) { return e ? to_string(*e) : std::string("imaginary"); };

  // per segment: count of mapped unmatched points by type, and their weight
  std::map<std::optional<Edge>, std::vector<std::size_t>> counts;
  std::map<std::optional<Edge>, Rational> weight;
  for (const WeightedPoint& p : s.points()) {
    if (s.is_matched(p.id)) continue;
    const auto& e = mapped_[p.id - 1];
    const unsigned t = types_[p.id - 1];
    if (e && !s.edges().contains(*e)) out.push_back("point " + std::to_string(p.id) + " mapped to a segment that is not matched");
    if (seg_type(e) < t)
      out.push_back("lower-index: point " + std::to_string(p.id) + " of type " + std::to_string(t) +
                    " mapped to segment " + seg_name(e) + " of type " + std::to_string(seg_type(e)));
    auto& c = counts[e];
    c.resize(k + 1, 0);
    c[t]++;
    weight[e] += p.weight;
  }
  for (const auto& [e, c] : counts) {
    for (unsigned i = 0; i <= k; ++i) {
      const std::size_t cap = (std::size_t{1} << (k - i + 2)) - 2;
      if (c[i] > cap)
        out.push_back("upper-index: segment " + seg_name(e) + " has " + std::to_string(c[i]) +
                      " unmatched points of type " + std::to_string(i));
    }
    if (classes_.upper() >= 16) {
      // weight <= a_{j+1} 2^(k-j+3)  <=>  (weight / 2^(k-j+3))^k <= U^(j+1)
      const unsigned j = seg_type(e);
      Rational scaled = weight.at(e) / Rational(pow(BigInt(2), k - j + 3));
      if (pow(scaled, k) > pow(classes_.upper(), j + 1))
        out.push_back("mapping weight: segment " + seg_name(e) + " of type " + std::to_string(j) +
                      " carries unmatched weight " + to_string(weight.at(e)));
    }
  }
  return out;
}

}  // namespace nca
