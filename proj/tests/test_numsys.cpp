#include <doctest.h>

#include <array>

#include "fibcube/errors.hpp"
#include "fibcube/numsys.hpp"
#include "oracle.hpp"

using namespace fibcube;

namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("phi matches the recurrence and the printed rows") {
  const std::array<std::uint64_t, 13> r11{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  const std::array<std::uint64_t, 13> r13{1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490};
  const std::array<std::uint64_t, 13> r21{1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60};
  for (int i = 0; i <= 12; ++i) {
    CHECK(phi(1, 1, i) == r11[i]);
    CHECK(phi(1, 3, i) == r13[i]);
    CHECK(phi(2, 1, i) == r21[i]);
  }
  // The (2,2) row is printed with 85 at i = 11; the recurrence says 74.
  CHECK(phi(2, 2, 11) == 74);
  CHECK(phi(2, 2, 12) == 116);
  for (int p = 1; p <= 5; ++p) {
    for (int r = 1; r <= 5; ++r) {
      for (int i = -3; i <= 40; ++i) CHECK(phi(p, r, i) == oracle::phi(p, r, i));
    }
  }
}

TEST_CASE("phi reports overflow instead of wrapping") {
  CHECK(phi(1, 1, 92) == 12200160415121876738ULL);
  CHECK_THROWS_AS(phi(1, 1, 93), OverflowError);
  PhiTable t(1, 1);
  CHECK_THROWS_AS(t(500), OverflowError);
  CHECK_THROWS_AS(PhiTable(0, 1), ContractError);
}

TEST_CASE("Word basics") {
  const Word w = Word::parse("10110");
  CHECK(w.length() == 5);
  CHECK(w.str() == "10110");
  CHECK(w.weight() == 3);
  CHECK(w.at(0));
  CHECK_FALSE(w.at(1));
  CHECK(w.flipped(1).str() == "11110");
  CHECK(w.reversed().str() == "01101");
  CHECK((Word::parse("10") + Word::parse("011")).str() == "10011");
  CHECK(Word::parse("10").repeated(3).str() == "101010");
  CHECK(Word::zeros(3).str() == "000");
  CHECK(Word::ones(2).str() == "11");
  CHECK(Word::parse("").empty());
  CHECK(hamming(Word::parse("1100"), Word::parse("1010")) == 2);
  CHECK(Word::parse("011") < Word::parse("100"));
  CHECK(Word::parse("11") < Word::parse("000"));
  CHECK(Word::ones(64).weight() == 64);
  CHECK_THROWS_AS(Word::parse("102"), ContractError);
  CHECK_THROWS_AS(Word::parse(std::string(65, '0')), ContractError);
  CHECK_THROWS_AS(Word::ones(40) + Word::ones(30), ContractError);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("O") == Family::O);
  CHECK(parse_family("i") == Family::I);
  CHECK(to_string(Family::I) == "I");
  CHECK_THROWS_AS(parse_family("X"), UsageError);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (Family f : {Family::O, Family::I}) {
    const char tag = f == Family::O ? 'O' : 'I';
    for (int p = 1; p <= 4; ++p) {
      for (int r = 1; r <= 4; ++r) {
        for (int n = 0; n <= 11; ++n) {
          const CubeParams cp{f, p, r, n};
          const auto got = strings(enumerate_vertices(cp));
          const auto want = oracle::vertices(tag, p, r, n);
          CAPTURE(cp.str());
          CHECK(got == want);
          CHECK(count_vertices(cp) == want.size());
          for (const auto& s : want) CHECK(is_valid_word(cp, Word::parse(s)));
        }
      }
    }
  }
}

TEST_CASE("O order is phi at the shifted index") {
  for (int p = 1; p <= 4; ++p) {
    for (int r = 1; r <= 4; ++r) {
      for (int n = 0; n <= 30; ++n) {
        CHECK(count_vertices({Family::O, p, r, n}) == oracle::phi(p, r, n + p));
      }
    }
  }
}

TEST_CASE("validity rejects forbidden factors") {
  CHECK_FALSE(is_valid_code(Family::I, 2, 2, Word::parse("111")));
  CHECK_FALSE(is_valid_code(Family::I, 2, 2, Word::parse("1010")));
  CHECK(is_valid_code(Family::I, 2, 2, Word::parse("1100110")));
  CHECK(is_valid_code(Family::O, 2, 2, Word::parse("10100")));
  CHECK_FALSE(is_valid_code(Family::O, 2, 2, Word::parse("10101")));
  CHECK_FALSE(is_valid_code(Family::O, 2, 2, Word::parse("11000")));
  CHECK_THROWS_AS(is_valid_word({Family::O, 2, 2, 5}, Word::parse("1010")), ContractError);
}

TEST_CASE("encode and decode follow the greedy numbering") {
  const CubeParams cp{Family::O, 2, 2, 5};
  CHECK(encode(cp, 11).str() == "10100");
  CHECK(encode(cp, 0).str() == "00000");
  CHECK(decode(cp, Word::parse("00000")) == 0);
  CHECK_THROWS_AS(encode(cp, 12), RangeError);
  CHECK_THROWS_AS(decode(cp, Word::parse("11000")), ValidityError);
  CHECK_THROWS_AS(encode({Family::I, 2, 2, 5}, 1), ContractError);
  for (int p = 1; p <= 4; ++p) {
    for (int r = 1; r <= 4; ++r) {
      for (int n = 0; n <= 10; ++n) {
        const CubeParams o{Family::O, p, r, n};
        for (std::uint64_t k = 0; k < count_vertices(o); ++k) {
          const Word w = encode(o, k);
          CHECK(w.str() == oracle::greedy_code(p, r, n, k));
          CHECK(decode(o, w) == k);
        }
      }
    }
  }
}

TEST_CASE("recursive vertex sets equal the enumeration") {
  for (Family f : {Family::O, Family::I}) {
    for (int p = 1; p <= 3; ++p) {
      for (int r = 1; r <= 3; ++r) {
        for (int n = 0; n <= 12; ++n) {
          const CubeParams cp{f, p, r, n};
          const auto rec = recursive_vertex_set(cp);
          const auto all = enumerate_vertices(cp);
          CAPTURE(cp.str());
          CHECK(std::vector<Word>(rec.begin(), rec.end()) == all);
        }
      }
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((CubeParams{Family::O, 0, 1, 3}.validate()), ContractError);
  CHECK_THROWS_AS((CubeParams{Family::I, 1, 1, 65}.validate()), ContractError);
  CHECK((CubeParams{Family::O, 2, 2, 5}.str()) == "O(p=2,r=2,n=5)");
}
