#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nca/matching.hpp"
#include "nca/rational.hpp"

namespace nca {

/// Bit strings are kept as text over {'0','1'}, most significant bit first.
using BitString = std::string;

BigInt catalan(unsigned n);

/// Balanced, every prefix has at least as many '0' as '1'.
bool is_dyck(std::string_view bits);

/// Rank among Dyck words of the same length, lexicographic with '0' < '1'.
BigInt dyck_rank(std::string_view bits);
BitString dyck_unrank(unsigned n, const BigInt& index);

BitString elias_delta_encode(const BigInt& m);
struct DeltaDecoded {
  BigInt value;
  std::size_t consumed = 0;
};
DeltaDecoded elias_delta_decode(std::string_view bits);

/// Advice word: bit i is 1 when arrival i forms a safe match with the
/// point responsible for its region.
BitString sam_oracle(std::span<const WeightedPoint> points);

/// elias_delta(1 + rank(oracle word)).
BitString advice_tape(std::span<const WeightedPoint> points);
/// Inverse of advice_tape for an input of 2n points.
BitString decode_advice_tape(std::string_view tape, unsigned n);

std::vector<bool> to_bits(std::string_view word);

/// `.tape` format: 8-byte big-endian bit count, then the bits MSB-first
/// padded with zeros to a whole byte.
void write_tape_file(const std::filesystem::path& path, std::string_view bits);
BitString read_tape_file(const std::filesystem::path& path);

/// ceil(log2 C_n); zero for n <= 1.
std::size_t catalan_bits(unsigned n);
/// Length bound for the delta code of a number below C_n + 1.
std::size_t advice_length_bound(unsigned n);

}  // namespace nca
