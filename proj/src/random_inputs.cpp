#include <random>
#include <set>

#include "nca/adversary.hpp"
#include "nca/errors.hpp"

namespace nca {
namespace {

std::function<bool()> coin_source(std::mt19937_64& rng) {
  return [&rng] { return (rng() >> 63) != 0; };
}

// Clockwise and counter-clockwise neighbours of t among `ts` (cyclic).
std::pair<Rational, Rational> neighbours(const std::set<Rational>& ts, const Rational& t) {
  auto it = ts.find(t);
  Rational cw = it == ts.begin() ? *ts.rbegin() : *std::prev(it);
  auto next = std::next(it);
  Rational ccw = next == ts.end() ? *ts.begin() : *next;
  return {cw, ccw};
}

Rational wrap(Rational t) {
  while (t < 0) t += 1;
  while (t >= 1) t -= 1;
  return t;
}

}  // namespace

std::vector<WeightedPoint> yao_input_from_coins(std::size_t n, const std::function<bool()>& left_coin,
                                                const std::function<bool()>& skip_coin) {
  if (n == 0) throw Error("yao input needs n >= 1");
  std::vector<WeightedPoint> out;
  std::set<Rational> ts;
  auto add = [&](const Rational& t) {
    out.push_back({out.size() + 1, Position::circle(t), Rational(1)});
    ts.insert(t);
  };
  // middle of the left (clockwise) or right (counter-clockwise) arc of `at`
  auto arc_middle = [&](const Rational& at, bool left) {
    auto [cw, ccw] = neighbours(ts, at);
    if (left) return wrap(at - ccw_arc_length(cw, at) / 2);
    return wrap(at + ccw_arc_length(at, ccw) / 2);
  };
  add(0);
  add(Rational(1, 2));
  Rational active(1, 2);
  while (out.size() < 2 * n) {
    const bool left = left_coin();
    const Rational first = arc_middle(active, left);
    add(first);
    if (out.size() == 2 * n) break;
    if (skip_coin()) {
      const Rational second = arc_middle(active, !left);
      add(second);
      active = second;
    } else {
      active = first;
    }
  }
  return out;
}

std::vector<WeightedPoint> yao_random_input(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = coin_source(rng);
  return yao_input_from_coins(n, coin, coin);
}

std::vector<WeightedPoint> collinear_input_from_coins(std::size_t n, const std::function<bool()>& left_coin) {
  if (n < 2) throw Error("collinear input needs n >= 2");
  std::vector<WeightedPoint> out;
  std::set<Rational> xs;
  auto add = [&](const Rational& x) {
    out.push_back({out.size() + 1, Position::line(x), Rational(1)});
    xs.insert(x);
  };
  add(0);
  add(1);
  add(Rational(1, 2));
  Rational last(1, 2);
  while (out.size() < 2 * n) {
    auto it = xs.find(last);
    const Rational& lo = *std::prev(it);
    const Rational& hi = *std::next(it);
    Rational x = left_coin() ? (lo + last) / 2 : (last + hi) / 2;
    add(x);
    last = x;
  }
  return out;
}

std::vector<WeightedPoint> collinear_random_input(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return collinear_input_from_coins(n, coin_source(rng));
}

}  // namespace nca
