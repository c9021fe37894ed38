#include "nca/classification.hpp"

#include <cmath>

#include "nca/errors.hpp"

namespace nca {
namespace {

std::optional<BigInt> exact_root(const BigInt& v, unsigned k) {
  BigInt root;
  if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

WeightClasses::WeightClasses(Rational upper) : upper_(std::move(upper)) {
  if (upper_ < 1) throw Error("weight bound U must be at least 1");
  // smallest k with 2^(k*k) >= U
  while (Rational(pow(BigInt(2), k_ * k_)) < upper_) ++k_;
  if (k_ == 0) {
    exact_r_ = Rational(1);
    return;
  }
  auto num = exact_root(upper_.get_num(), k_);
  auto den = exact_root(upper_.get_den(), k_);
  if (num && den) exact_r_ = Rational(*num, *den);
}

double WeightClasses::ratio_approx() const {
  if (k_ == 0) return 1.0;
  return std::pow(to_double(upper_), 1.0 / k_);
}

bool WeightClasses::threshold_at_most(unsigned i, const Rational& w) const {
  if (k_ == 0) return 1 <= w;
  return pow(upper_, i) <= pow(w, k_);
}

bool WeightClasses::threshold_at_least(unsigned i, const Rational& w) const {
  if (k_ == 0) return w <= 1;
  return pow(w, k_) <= pow(upper_, i);
}

unsigned WeightClasses::type(const Rational& w) const {
  if (w < 1 || w > upper_) throw Error("weight " + to_string(w) + " outside [1, U]");
  if (k_ == 0) return 0;
  const Rational wk = pow(w, k_);
  unsigned t = 0;
  Rational ui = upper_;
  for (unsigned i = 1; i <= k_; ++i, ui *= upper_) {
    if (ui <= wk) t = i;
    else break;
  }
  return t;
}

Rational WeightClasses::threshold_value(unsigned i, unsigned bits) const {
  if (exact_r_) return pow(*exact_r_, i);
  if (i % k_ == 0) return pow(upper_, i / k_);
  // bisection on [1, U] for x^k = U^i
  const Rational target = pow(upper_, i);
  Rational lo = 1, hi = upper_;
  if (i > k_) hi = pow(upper_, (i + k_ - 1) / k_);
  const Rational eps = Rational(1) / Rational(pow(BigInt(2), bits));
  while (hi - lo > eps * lo) {
    Rational mid = (lo + hi) / 2;
    if (pow(mid, k_) <= target) lo = mid;
    else hi = mid;
  }
  return hi;
}

}  // namespace nca
