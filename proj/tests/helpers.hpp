#pragma once

#include <random>
#include <vector>

#include "nca/generators.hpp"
#include "nca/matching.hpp"
#include "nca/online_matcher.hpp"

namespace nca::test {

inline Position P(long x, long y) { return Position::plane(Rational(x), Rational(y)); }
inline Position C(long num, long den = 1) { return Position::circle(make_rational(num, den)); }
inline Position L(long num, long den = 1) { return Position::line(make_rational(num, den)); }

inline std::vector<WeightedPoint> unit_points(const std::vector<Position>& pos) {
  std::vector<WeightedPoint> out;
  for (std::size_t i = 0; i < pos.size(); ++i) out.push_back({i + 1, pos[i], Rational(1)});
  return out;
}

inline std::vector<WeightedPoint> random_plane_instance(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return unit_points(random_disk_positions(count, rng));
}

/// Streams points through a fresh matcher and returns it.
inline std::unique_ptr<OnlineMatcher> play(const std::string& alg, Space space, const std::vector<WeightedPoint>& pts,
                                           MatcherParams params = {}) {
  auto m = make_matcher(alg, space, params);
  for (const auto& p : pts) m->on_arrival(p);
  return m;
}

}  // namespace nca::test
