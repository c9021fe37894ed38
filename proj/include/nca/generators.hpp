#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nca/matching.hpp"

namespace nca {

/// Independent stream seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

/// Integer grid points in a disk of radius 2^20, rejection-sampled so no
/// two coincide and no three are collinear.
std::vector<Position> random_disk_positions(std::size_t count, std::mt19937_64& rng);
/// Distinct integer coordinates in [0, 2^40).
std::vector<Position> random_line_positions(std::size_t count, std::mt19937_64& rng);

struct WeightSpec {
  std::string kind = "unit";  // unit | two-weight | restricted | arbitrary
  std::optional<Rational> upper;
};

std::vector<Rational> random_weights(std::size_t count, const WeightSpec& spec, std::mt19937_64& rng);

struct GeneratorSpec {
  std::string name;          // random-disk | random-line | yao | collinear
  std::size_t points = 0;    // total arrivals
  WeightSpec weights;
  std::uint64_t seed = 0;
};

std::vector<WeightedPoint> generate(const GeneratorSpec& spec);
std::vector<std::string> generator_names();
Space generator_space(const std::string& name);

}  // namespace nca
