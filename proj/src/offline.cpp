#include "nca/offline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nca/errors.hpp"

namespace nca {
namespace {

Rational squared_length(const PlanePos& a, const PlanePos& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// sqrt(v) enclosed in [lo, hi] with 128 fractional bits.
struct Interval {
  Rational lo, hi;
};

Interval sqrt_interval(const Rational& v) {
  // sqrt(p/q) = sqrt(p q) / q
  BigInt pq = v.get_num() * v.get_den();
  BigInt scaled = pq << 256;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt scale = BigInt(1) << 128;
  Rational lo(root, scale * v.get_den());
  Rational hi(root * root == scaled ? root : root + 1, scale * v.get_den());
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

struct Candidate {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // zero-based
  double length;
};

}  // namespace

Rational opt_value(std::span<const WeightedPoint> points) {
  if (points.size() % 2 != 0) throw Error("OPT is defined for an even number of points");
  Rational w = 0;
  for (const auto& p : points) w += p.weight;
  return w;
}

OfflineMatching brute_force_perfect_nm(std::span<const WeightedPoint> points) {
  const std::size_t n = points.size();
  if (n > 14) throw Error("brute-force matching is capped at 14 points; use split constructor");
  if (n % 2 != 0) throw Error("perfect matching needs an even number of points");
  for (const auto& p : points)
    if (p.pos.space() != Space::Plane) throw Error("brute-force matching needs plane input");
  if (n == 0) return {};

  std::vector<std::vector<Rational>> sq(n, std::vector<Rational>(n));
  std::vector<std::vector<double>> len(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      sq[i][j] = sq[j][i] = squared_length(points[i].pos.as_plane(), points[j].pos.as_plane());
      len[i][j] = len[j][i] = std::sqrt(to_double(sq[i][j]));
    }

  // Enumerate with double pruning, keep every matching within a relative
  // tolerance of the best, then decide among them exactly.
  constexpr double kTol = 1e-9;
  std::vector<Candidate> keep;
  double best = INFINITY;
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> cur;
  auto rec = [&](auto&& self, double acc) -> void {
    if (acc > best + kTol * (1 + best)) return;
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (acc < best) best = acc;
      keep.push_back({cur, acc});
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(i, j);
      self(self, acc + len[i][j]);
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec, 0.0);
  std::erase_if(keep, [&](const Candidate& c) { return c.length > best + kTol * (1 + best); });

  auto exact_total = [&](const Candidate& c) {
    Interval t{0, 0};
    for (auto [i, j] : c.pairs) {
      Interval s = sqrt_interval(sq[i][j]);
      t.lo += s.lo;
      t.hi += s.hi;
    }
    return t;
  };
  auto tie_key = [&](const Candidate& c) {
    std::vector<Rational> lens;
    for (auto [i, j] : c.pairs) lens.push_back(sq[i][j]);
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  std::size_t winner = 0;
  Interval win_total = exact_total(keep[0]);
  for (std::size_t c = 1; c < keep.size(); ++c) {
    Interval t = exact_total(keep[c]);
    bool better = false;
    if (t.hi < win_total.lo) better = true;
    else if (win_total.hi < t.lo) better = false;
    else {
      auto a = tie_key(keep[c]), b = tie_key(keep[winner]);
      better = a < b || (a == b && keep[c].pairs < keep[winner].pairs);
    }
    if (better) {
      winner = c;
      win_total = t;
    }
  }
  OfflineMatching out;
  out.total_length = keep[winner].length;
  for (auto [i, j] : keep[winner].pairs) out.edges.insert(Edge(points[i].id, points[j].id));
  return out;
}

OfflineMatching split_perfect_nm(std::span<const WeightedPoint> points) {
  if (points.size() % 2 != 0) throw Error("perfect matching needs an even number of points");
  for (const auto& p : points)
    if (p.pos.space() != Space::Plane) throw Error("split constructor needs plane input");
  OfflineMatching out;
  std::vector<std::size_t> work(points.size());
  std::iota(work.begin(), work.end(), 0);
  auto pos = [&](std::size_t i) -> const PlanePos& { return points[i].pos.as_plane(); };

  // explicit stack instead of recursion; chains can be long
  std::vector<std::vector<std::size_t>> todo{work};
  while (!todo.empty()) {
    std::vector<std::size_t> set = std::move(todo.back());
    todo.pop_back();
    if (set.empty()) continue;
    auto least = std::min_element(set.begin(), set.end(), [&](std::size_t a, std::size_t b) {
      return pos(a).x < pos(b).x || (pos(a).x == pos(b).x && pos(a).y < pos(b).y);
    });
    const std::size_t b = *least;
    set.erase(least);
    // all others lie in the half-plane to the right, so a CCW comparator is a total order
    std::sort(set.begin(), set.end(),
              [&](std::size_t u, std::size_t v) { return orientation_sign(pos(b), pos(u), pos(v)) > 0; });
    const std::size_t m = set.size();
    for (std::size_t t = 0; t < m; ++t) {
      if (t % 2 == 0 && (m - 1 - t) % 2 == 0) {
        out.edges.insert(Edge(points[b].id, points[set[t]].id));
        out.total_length += std::sqrt(to_double(squared_length(pos(b), pos(set[t]))));
        todo.emplace_back(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(t));
        todo.emplace_back(set.begin() + static_cast<std::ptrdiff_t>(t) + 1, set.end());
        break;
      }
    }
  }
  return out;
}

namespace {

// Circle and line matchings as coordinate intervals: chords cross when
// intervals partly overlap, line arcs whenever they overlap at all. True
// when one sorted pass proves there is no crossing; false means "check pairs".
bool intervals_clear(std::span<const WeightedPoint> points, const std::set<Edge>& edges, Space space) {
  struct Span {
    const Rational* lo;
    const Rational* hi;
  };
  std::vector<Span> spans;
  std::vector<const Rational*> ends;
  for (const Edge& e : edges) {
    if (e.a == kNoPoint || e.b > points.size()) return false;
    const Position &p = points[e.a - 1].pos, &q = points[e.b - 1].pos;
    if (p.space() != space || q.space() != space) return false;
    const Rational* u = space == Space::Circle ? &p.as_circle().t : &p.as_line().x;
    const Rational* v = space == Space::Circle ? &q.as_circle().t : &q.as_line().x;
    if (*v < *u) std::swap(u, v);
    spans.push_back({u, v});
    ends.push_back(u);
    ends.push_back(v);
  }
  auto less = [](const Rational* x, const Rational* y) { return *x < *y; };
  std::sort(ends.begin(), ends.end(), less);
  for (std::size_t i = 1; i < ends.size(); ++i)
    if (*ends[i] == *ends[i - 1]) return false;  // shared endpoint or duplicate position
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return *x.lo < *y.lo; });
  std::vector<const Rational*> open;  // right ends of enclosing intervals
  for (const Span& sp : spans) {
    while (!open.empty() && *open.back() < *sp.lo) open.pop_back();
    if (!open.empty() && (space == Space::Line || *open.back() < *sp.hi)) return false;
    open.push_back(sp.hi);
  }
  return true;
}

}  // namespace

std::vector<std::pair<Edge, Edge>> validate_non_crossing(std::span<const WeightedPoint> points,
                                                         const std::set<Edge>& edges) {
  if (!points.empty() && points.front().pos.space() != Space::Plane &&
      intervals_clear(points, edges, points.front().pos.space()))
    return {};
  auto at = [&](PointId id) -> const Position& {
    if (id == kNoPoint || id > points.size()) throw Error("edge references unknown point " + std::to_string(id));
    return points[id - 1].pos;
  };
  std::vector<Edge> list(edges.begin(), edges.end());
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const Edge &e = list[i], &f = list[j];
      if (e.has(f.a) || e.has(f.b)) {
        out.emplace_back(e, f);
        continue;
      }
      if (segments_properly_cross(at(e.a), at(e.b), at(f.a), at(f.b))) out.emplace_back(e, f);
    }
  return out;
}

bool is_perfect(std::size_t point_count, const std::set<Edge>& edges) {
  std::vector<int> seen(point_count + 1, 0);
  for (const Edge& e : edges) {
    if (e.b > point_count || e.a == kNoPoint) return false;
    ++seen[e.a];
    ++seen[e.b];
  }
  for (std::size_t i = 1; i <= point_count; ++i)
    if (seen[i] != 1) return false;
  return true;
}

std::pair<double, double> mean_and_half_width(std::span<const double> samples) {
  if (samples.empty()) throw Error("no samples");
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() < 2) return {mean, 0.0};
  double ss = 0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / (n - 1));
  return {mean, 2.576 * sd / std::sqrt(n)};
}

RatioSummary empirical_ratio(std::span<const RunOutcome> outcomes) {
  if (outcomes.empty()) throw Error("empirical ratio needs at least one run");
  RatioSummary out;
  std::vector<double> d;
  for (const auto& o : outcomes) {
    out.ratios.push_back(o.ratio());
    d.push_back(to_double(out.ratios.back()));
  }
  out.min = *std::min_element(out.ratios.begin(), out.ratios.end());
  std::tie(out.mean, out.half_width) = mean_and_half_width(d);
  return out;
}

}  // namespace nca
