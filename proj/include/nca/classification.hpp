#pragma once

#include <optional>

#include "nca/rational.hpp"

namespace nca {

/// Weight classes for weights in [1, U]: k = ceil(sqrt(log2 U)),
/// thresholds a_i = U^(i/k). The ratio r = U^(1/k) is usually irrational,
/// so every threshold test is done as U^i <= w^k.
class WeightClasses {
 public:
  explicit WeightClasses(Rational upper);

  const Rational& upper() const { return upper_; }
  unsigned k() const { return k_; }

  /// U^(1/k) when it is rational.
  const std::optional<Rational>& exact_ratio() const { return exact_r_; }
  double ratio_approx() const;

  /// Largest i with a_i <= w. Throws outside [1, U].
  unsigned type(const Rational& w) const;

  /// a_i <= w, exactly.
  bool threshold_at_most(unsigned i, const Rational& w) const;
  /// w <= a_i, exactly.
  bool threshold_at_least(unsigned i, const Rational& w) const;

  /// a_i when rational, otherwise a rational upper bound within 2^-bits relative error.
  Rational threshold_value(unsigned i, unsigned bits = 64) const;

 private:
  Rational upper_;
  unsigned k_ = 0;
  std::optional<Rational> exact_r_;
};

/// Type of a matched segment: the larger of its endpoint types.
inline unsigned segment_type(unsigned a, unsigned b) { return a > b ? a : b; }

}  // namespace nca
