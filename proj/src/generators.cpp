#include "nca/generators.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "nca/adversary.hpp"
#include "nca/classification.hpp"
#include "nca/errors.hpp"

namespace nca {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exact dyadic rational of a finite double.
Rational exact(double v) {
  Rational r(v);
  return r;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Position> random_disk_positions(std::size_t count, std::mt19937_64& rng) {
  constexpr std::int64_t kRadius = std::int64_t{1} << 20;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  std::uniform_int_distribution<std::int64_t> coord(-kRadius, kRadius);
  while (pts.size() < count) {
    const std::int64_t x = coord(rng), y = coord(rng);
    if (x * x + y * y > kRadius * kRadius) continue;
    // collinear with two earlier points <=> two earlier points share a direction line from (x, y)
    std::unordered_set<std::uint64_t> seen;
    std::set<std::pair<std::int64_t, std::int64_t>> dirs;
    bool ok = true;
    for (auto [px, py] : pts) {
      std::int64_t dx = px - x, dy = py - y;
      if (dx == 0 && dy == 0) {
        ok = false;
        break;
      }
      const std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      if (!dirs.emplace(dx, dy).second) {
        ok = false;
        break;
      }
    }
    if (ok) pts.emplace_back(x, y);
  }
  std::vector<Position> out;
  out.reserve(count);
  for (auto [x, y] : pts) out.push_back(Position::plane(Rational(static_cast<long>(x)), Rational(static_cast<long>(y))));
  return out;
}

std::vector<Position> random_line_positions(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(0, (std::int64_t{1} << 40) - 1);
  std::set<std::int64_t> used;
  std::vector<Position> out;
  while (out.size() < count) {
    const std::int64_t x = coord(rng);
    if (used.insert(x).second) out.push_back(Position::line(Rational(static_cast<long>(x))));
  }
  return out;
}

std::vector<Rational> random_weights(std::size_t count, const WeightSpec& spec, std::mt19937_64& rng) {
  std::vector<Rational> out;
  out.reserve(count);
  if (spec.kind == "unit") {
    out.assign(count, Rational(1));
    return out;
  }
  if (!spec.upper) throw Error("weights '" + spec.kind + "' need --U");
  const Rational& upper = *spec.upper;
  if (upper < 1) throw Error("U must be at least 1");
  if (spec.kind == "two-weight") {
    const double heavy = uniform01(rng);  // per-instance mix
    for (std::size_t i = 0; i < count; ++i) out.push_back(uniform01(rng) < heavy ? upper : Rational(1));
    return out;
  }
  const double log_u = std::log2(to_double(upper));
  auto log_uniform = [&] {
    Rational w = exact(std::exp2(uniform01(rng) * log_u));
    if (w < 1) w = 1;
    if (w > upper) w = upper;
    return w;
  };
  if (spec.kind == "restricted") {
    WeightClasses classes(upper);
    for (std::size_t i = 0; i < count; ++i) {
      if (uniform01(rng) < 0.5) {
        const unsigned t = static_cast<unsigned>(rng() % (classes.k() + 1));
        Rational w = classes.threshold_value(t);
        out.push_back(w > upper ? upper : w);
      } else {
        out.push_back(log_uniform());
      }
    }
    return out;
  }
  if (spec.kind == "arbitrary") {
    for (std::size_t i = 0; i < count; ++i) out.push_back(log_uniform());
    return out;
  }
  throw Error("unknown weight distribution '" + spec.kind + "'");
}

std::vector<std::string> generator_names() { return {"random-disk", "random-line", "yao", "collinear"}; }

Space generator_space(const std::string& name) {
  if (name == "random-disk") return Space::Plane;
  if (name == "random-line" || name == "collinear") return Space::Line;
  if (name == "yao") return Space::Circle;
  throw Error("unknown generator '" + name + "'");
}

std::vector<WeightedPoint> generate(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<WeightedPoint> out;
  if (spec.name == "yao" || spec.name == "collinear") {
    if (spec.points % 2 != 0) throw Error(spec.name + " generator needs an even point count");
    if (spec.weights.kind != "unit") throw Error(spec.name + " generator produces unit weights only");
    return spec.name == "yao" ? yao_random_input(spec.points / 2, spec.seed)
                              : collinear_random_input(spec.points / 2, spec.seed);
  }
  std::vector<Position> pos;
  if (spec.name == "random-disk") pos = random_disk_positions(spec.points, rng);
  else if (spec.name == "random-line") pos = random_line_positions(spec.points, rng);
  else throw Error("unknown generator '" + spec.name + "'");
  auto w = random_weights(spec.points, spec.weights, rng);
  for (std::size_t i = 0; i < spec.points; ++i) out.push_back({i + 1, pos[i], w[i]});
  return out;
}

}  // namespace nca
