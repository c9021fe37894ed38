#include <filesystem>
#include <fstream>
#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "nca/advice.hpp"
#include "nca/errors.hpp"

using namespace nca;
using namespace nca::test;

namespace {

// Every balanced word of length 2n in lexicographic order, by brute force.
std::vector<std::string> all_dyck(unsigned n) {
  std::vector<std::string> out;
  std::function<void(std::string, int, int)> go = [&](std::string w, int open, int close) {
    if (w.size() == 2 * n) {
      out.push_back(w);
      return;
    }
    if (open < static_cast<int>(n)) go(w + '0', open + 1, close);
    if (close < open) go(w + '1', open, close + 1);
  };
  go("", 0, 0);
  return out;
}

// Delta code straight from its definition: gamma(bit_length(m)) then m without its leading 1.
std::string delta_reference(unsigned long m) {
  std::string bin;
  for (unsigned long v = m; v; v >>= 1) bin.insert(bin.begin(), char('0' + (v & 1)));
  std::string len;
  for (unsigned long v = bin.size(); v; v >>= 1) len.insert(len.begin(), char('0' + (v & 1)));
  return std::string(len.size() - 1, '0') + len + bin.substr(1);
}

}  // namespace

TEST_SUITE("advice") {
  TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    for (unsigned n = 0; n <= 6; ++n) CHECK(catalan(n) == all_dyck(n).size());
  }

  TEST_CASE("dyck predicate") {
    CHECK(is_dyck("0101"));
    CHECK_FALSE(is_dyck("0110"));
    CHECK(is_dyck("0011"));
    CHECK(is_dyck(""));
    CHECK_FALSE(is_dyck("000111" "1"));
    CHECK_FALSE(is_dyck("01a1"));
  }

  TEST_CASE("rank examples") {
    CHECK(dyck_rank("0011") == 0);
    CHECK(dyck_rank("0101") == 1);
    CHECK(dyck_unrank(1, 0) == "01");
    CHECK_THROWS_AS(dyck_rank("0110"), Error);
    CHECK_THROWS_AS(dyck_unrank(2, 2), Error);
  }

  TEST_CASE("rank is the lexicographic position, exhaustively for n <= 7") {
    for (unsigned n = 0; n <= 7; ++n) {
      const auto words = all_dyck(n);
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(dyck_rank(words[i]) == i);
        CHECK(dyck_unrank(n, BigInt(static_cast<unsigned long>(i))) == words[i]);
      }
    }
    CHECK(all_dyck(7).size() == 429);
  }

  TEST_CASE("elias delta examples") {
    CHECK(elias_delta_encode(1) == "1");
    CHECK(elias_delta_encode(2) == "0100");
    CHECK(elias_delta_encode(4) == "01100");
    CHECK_THROWS_AS(elias_delta_encode(0), Error);
  }

  TEST_CASE("delta decode inverts encode for 1..10^6") {
    for (unsigned long m = 1; m <= 1000000; ++m) {
      const std::string bits = elias_delta_encode(BigInt(m));
      if (m <= 5000) REQUIRE(bits == delta_reference(m));
      const DeltaDecoded d = elias_delta_decode(bits + "1");
      REQUIRE(d.value == m);
      REQUIRE(d.consumed == bits.size());
    }
  }

  TEST_CASE("truncated delta codes are rejected") {
    CHECK_THROWS_AS(elias_delta_decode("01"), Error);
    CHECK_THROWS_AS(elias_delta_decode(""), Error);
    CHECK_THROWS_AS(elias_delta_decode("000"), Error);
  }

  TEST_CASE("oracle and tape examples") {
    auto two = unit_points({P(0, 0), P(3, 1)});
    CHECK(sam_oracle(two) == "01");
    CHECK(advice_tape(two) == "1");
    auto sq = unit_points({P(0, 0), P(1, 0), P(0, -1), P(1, 1)});
    CHECK(sam_oracle(sq) == "0011");
    CHECK(advice_tape(sq) == "1");
    CHECK(decode_advice_tape("1", 2) == "0011");
    CHECK(decode_advice_tape("0100", 2) == "0101");
    CHECK_THROWS_AS(decode_advice_tape("01100", 2), Error);  // index 3 > C_2
    CHECK_THROWS_AS(decode_advice_tape("11", 2), Error);     // trailing bit
  }

  TEST_CASE("tape length bounds") {
    for (unsigned n = 1; n <= 60; ++n) {
      const std::size_t c = catalan_bits(n);
      CHECK(c < 2 * n);
      std::size_t lg = 0;
      while ((std::size_t{2} << lg) <= c + 1) ++lg;  // floor(log2(c + 1))
      CHECK(advice_length_bound(n) == c + 2 * lg + 1);
      // the longest possible tape carries 1 + (C_n - 1) = C_n
      CHECK(elias_delta_encode(catalan(n)).size() <= advice_length_bound(n));
    }
    CHECK(catalan_bits(1) == 0);
    CHECK(catalan_bits(3) == 3);
  }

  TEST_CASE("oracle words are balanced on random instances") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const std::size_t n = 1 + seed % 10;
      auto pts = random_plane_instance(2 * n, seed);
      const BitString w = sam_oracle(pts);
      REQUIRE(is_dyck(w));
      const BitString tape = advice_tape(pts);
      REQUIRE(tape.size() <= advice_length_bound(static_cast<unsigned>(n)));
      REQUIRE(decode_advice_tape(tape, static_cast<unsigned>(n)) == w);
    }
  }

  TEST_CASE("tape files round trip") {
    const auto path = std::filesystem::temp_directory_path() / "nca_test.tape";
    for (std::string bits : {"", "1", "0100", "011000101", "0110001010111100"}) {
      write_tape_file(path, bits);
      CHECK(read_tape_file(path) == bits);
    }
    CHECK(std::filesystem::file_size(path) == 8 + 2);
    {
      std::ofstream out(path, std::ios::binary);
      out << "abc";
    }
    CHECK_THROWS_AS(read_tape_file(path), Error);
    std::filesystem::remove(path);
  }
}
