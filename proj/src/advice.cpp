#include "nca/advice.hpp"

#include <fstream>

#include "nca/errors.hpp"
#include "nca/partition.hpp"

namespace nca {
namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Paths of `len` steps from height `h` down to 0 that never go below 0.
BigInt completions(long len, long h) {
  if (h < 0 || len < h || (len - h) % 2 != 0) return 0;
  const long up = (len - h) / 2;
  BigInt total = binomial(static_cast<unsigned long>(len), static_cast<unsigned long>(up));
  if (up > 0) total -= binomial(static_cast<unsigned long>(len), static_cast<unsigned long>(up - 1));
  return total;
}

}  // namespace

BigInt catalan(unsigned n) {
  BigInt c = 1;
  for (unsigned i = 1; i <= n; ++i) {
    c *= 2 * (2 * i - 1);
    BigInt q;
    if (!mpz_divisible_ui_p(c.get_mpz_t(), i + 1)) throw InvariantViolation("catalan recurrence left a remainder");
    mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), i + 1);
    c = q;
  }
  return c;
}

bool is_dyck(std::string_view bits) {
  long h = 0;
  for (char c : bits) {
    if (c == '0') ++h;
    else if (c == '1') {
      if (--h < 0) return false;
    } else {
      return false;
    }
  }
  return h == 0;
}

BigInt dyck_rank(std::string_view bits) {
  if (!is_dyck(bits)) throw Error("not a Dyck word: " + std::string(bits));
  const long len = static_cast<long>(bits.size());
  BigInt rank = 0;
  long h = 0;
  for (long i = 0; i < len; ++i) {
    if (bits[i] == '1') {
      rank += completions(len - i - 1, h + 1);
      --h;
    } else {
      ++h;
    }
  }
  return rank;
}

BitString dyck_unrank(unsigned n, const BigInt& index) {
  if (index < 0 || index >= catalan(n)) throw Error("Dyck index " + to_string(index) + " out of range for n=" + std::to_string(n));
  const long len = 2L * n;
  BitString out;
  BigInt rest = index;
  long h = 0;
  for (long i = 0; i < len; ++i) {
    BigInt with_zero = completions(len - i - 1, h + 1);
    if (rest < with_zero) {
      out.push_back('0');
      ++h;
    } else {
      rest -= with_zero;
      out.push_back('1');
      --h;
    }
  }
  return out;
}

BitString elias_delta_encode(const BigInt& m) {
  if (m < 1) throw Error("Elias delta codes positive integers only");
  const std::size_t n = bit_length(m);
  const BigInt nbig = static_cast<unsigned long>(n);
  const std::size_t l = bit_length(nbig);
  BitString out(l - 1, '0');
  out += nbig.get_str(2);
  out += m.get_str(2).substr(1);
  return out;
}

DeltaDecoded elias_delta_decode(std::string_view bits) {
  std::size_t zeros = 0;
  while (zeros < bits.size() && bits[zeros] == '0') ++zeros;
  if (zeros == bits.size()) throw Error("malformed Elias delta code: no length marker");
  if (zeros > 40) throw Error("malformed Elias delta code: length prefix too long");
  std::size_t pos = zeros;
  if (pos + zeros + 1 > bits.size()) throw Error("malformed Elias delta code: truncated length");
  const std::size_t n = std::stoull(std::string(bits.substr(pos, zeros + 1)), nullptr, 2);
  pos += zeros + 1;
  if (pos + n - 1 > bits.size()) throw Error("malformed Elias delta code: truncated value");
  BigInt value(std::string("1") + std::string(bits.substr(pos, n - 1)), 2);
  pos += n - 1;
  return {value, pos};
}

BitString sam_oracle(std::span<const WeightedPoint> points) {
  if (points.size() % 2 != 0) throw Error("advice needs an even number of points");
  if (points.empty()) return {};
  ConvexPartition part(points.front().pos.space());
  for (std::size_t i = 0; i < points.size(); ++i) part.register_point(i + 1, points[i].pos);
  for (std::size_t i = 0; i < points.size(); ++i) part.add_member(kRootRegion, i + 1);

  BitString word;
  for (PointId i = 1; i <= points.size(); ++i) {
    const RegionId r = part.locate(points[i - 1].pos);
    const auto* owner = std::get_if<PointId>(&part.region(r).responsible);
    if (!owner) {
      part.set_responsible(r, i);
      word.push_back('0');
      continue;
    }
    const PointId j = *owner;
    part.set_responsible(r, std::monostate{});
    auto [first, second] = part.split(r, i, j);
    auto future = [&](RegionId c) {
      std::size_t n = 0;
      for (PointId m : part.region(c).members) n += m > i;
      return n;
    };
    if (future(first) % 2 == 0 && future(second) % 2 == 0) {
      word.push_back('1');
    } else {
      part.set_responsible(first, j);
      part.set_responsible(second, i);
      word.push_back('0');
    }
  }
  return word;
}

BitString advice_tape(std::span<const WeightedPoint> points) {
  BigInt rank = dyck_rank(sam_oracle(points));
  return elias_delta_encode(rank + 1);
}

BitString decode_advice_tape(std::string_view tape, unsigned n) {
  DeltaDecoded d = elias_delta_decode(tape);
  if (d.consumed != tape.size()) throw Error("advice tape has trailing bits");
  if (d.value > catalan(n)) throw Error("advice index exceeds the advice family size");
  return dyck_unrank(n, d.value - 1);
}

std::vector<bool> to_bits(std::string_view word) {
  std::vector<bool> out;
  out.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw Error("bit string contains '" + std::string(1, c) + "'");
    out.push_back(c == '1');
  }
  return out;
}

void write_tape_file(const std::filesystem::path& path, std::string_view bits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const std::uint64_t count = bits.size();
  for (int shift = 56; shift >= 0; shift -= 8) out.put(static_cast<char>((count >> shift) & 0xff));
  unsigned char byte = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    byte = static_cast<unsigned char>((byte << 1) | (bits[i] == '1'));
    if (i % 8 == 7) {
      out.put(static_cast<char>(byte));
      byte = 0;
    }
  }
  if (bits.size() % 8 != 0) out.put(static_cast<char>(byte << (8 - bits.size() % 8)));
}

BitString read_tape_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (raw.size() < 8) throw Error("tape file too short: " + path.string());
  std::uint64_t count = 0;
  for (int i = 0; i < 8; ++i) count = (count << 8) | static_cast<unsigned char>(raw[i]);
  if ((count + 7) / 8 != raw.size() - 8) throw Error("tape file length does not match its header");
  BitString bits;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto byte = static_cast<unsigned char>(raw[8 + i / 8]);
    bits.push_back((byte >> (7 - i % 8)) & 1 ? '1' : '0');
  }
  return bits;
}

std::size_t catalan_bits(unsigned n) {
  BigInt c = catalan(n);
  if (c <= 1) return 0;
  BigInt m = c - 1;
  return bit_length(m);
}

std::size_t advice_length_bound(unsigned n) {
  const std::size_t b = catalan_bits(n);
  std::size_t lg = 0;  // floor(log2(b + 1))
  for (std::size_t v = b + 1; v > 1; v >>= 1) ++lg;
  return b + 2 * lg + 1;
}

}  // namespace nca
