#include <doctest.h>

#include <algorithm>

#include "fibcube/errors.hpp"
#include "fibcube/formulas.hpp"
#include "oracle.hpp"

using namespace fibcube;

namespace {

struct Stats {
  int radius = 0;
  int diameter = 0;
  int min_degree = 0;
  int max_degree = 0;
  int max_degree_count = 0;
  std::vector<std::string> center;
  oracle::Graph g;
};

Stats stats(Family f, int p, int r, int n) {
  Stats s;
  s.g = oracle::graph(oracle::vertices(f == Family::O ? 'O' : 'I', p, r, n));
  const auto ecc = oracle::eccentricities(s.g);
  s.radius = *std::min_element(ecc.begin(), ecc.end());
  s.diameter = *std::max_element(ecc.begin(), ecc.end());
  for (std::size_t v = 0; v < ecc.size(); ++v) {
    if (ecc[v] == s.radius) s.center.push_back(s.g.words[v]);
  }
  s.min_degree = 1 << 30;
  for (const auto& a : s.g.adj) {
    const int d = static_cast<int>(a.size());
    s.min_degree = std::min(s.min_degree, d);
    if (d > s.max_degree) {
      s.max_degree = d;
      s.max_degree_count = 0;
    }
    if (d == s.max_degree) ++s.max_degree_count;
  }
  return s;
}

}  // namespace

TEST_CASE("O radius, center and diameter against brute force") {
  for (int p = 1; p <= 3; ++p) {
    for (int r = 1; r <= 3; ++r) {
      for (int n = 1; n <= 11; ++n) {
        const Stats s = stats(Family::O, p, r, n);
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(radius_O(p, r, n) == s.radius);
        CHECK(diameter_O(p, r, n) == s.diameter);
        const CenterResult z = center_O(p, r, n);
        std::vector<std::string> got;
        for (const auto& w : z.center) got.push_back(w.str());
        CHECK(got == s.center);
        CHECK(z.count == s.center.size());
      }
    }
  }
}

TEST_CASE("center count methods") {
  CHECK(center_O(1, 2, 8).count_method == CountMethod::kVandermonde);
  CHECK(center_O(2, 2, 9).count_method == CountMethod::kSingleton);
  CHECK(center_O(2, 2, 6).count_method == CountMethod::kClosedForm);
  CHECK(to_string(CountMethod::kClosedForm) == "closed_form");
}

TEST_CASE("O diameter at the codeword length is off by the index shift") {
  // O(2,2,5): BFS gives 4; reading the closed form at n = 5 gives 3.
  CHECK(diameter_O(2, 2, 5) == 4);
  CHECK(diameter_O_as_printed(2, 2, 5) == 3);
  CHECK(diameter_O_as_printed(2, 2, 5 + 2) == diameter_O(2, 2, 5));
}

TEST_CASE("I diameter: exact cases equal BFS, the barrier case brackets it") {
  for (int p = 1; p <= 3; ++p) {
    for (int r = 1; r <= 10; ++r) {
      for (int n = 1; n <= 12; ++n) {
        if (std::uint64_t{1} << n > 5000 && r >= n) continue;
        const Stats s = stats(Family::I, p, r, n);
        const DiameterResult d = diameter_I(p, r, n);
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(d.which == diameter_I_case(p, r, n));
        if (d.kind == DiameterResult::Kind::kExact) {
          CHECK(d.value == s.diameter);
        } else {
          REQUIRE(d.barrier.has_value());
          CHECK(d.lower_printed <= s.diameter);
          CHECK(d.lower <= s.diameter);
          CHECK(s.diameter <= d.upper);
        }
      }
    }
  }
}

TEST_CASE("I diameter case selection") {
  CHECK(diameter_I_case(1, 5, 9) == DiameterCase::kHypercubeLike);
  CHECK(diameter_I_case(3, 2, 9) == DiameterCase::kShortBlocks);
  CHECK(diameter_I_case(2, 6, 9) == DiameterCase::kNoGain);
  CHECK(diameter_I_case(2, 7, 6) == DiameterCase::kShortWord);
  CHECK(diameter_I_case(2, 7, 16) == DiameterCase::kBarrier);
  CHECK(to_string(DiameterCase::kShortBlocks) == "r<p");
  // The ceiling variant overshoots when p + r does not divide n.
  CHECK(diameter_I(3, 2, 7).value < diameter_I_short_blocks_as_printed(3, 2, 7));
}

TEST_CASE("best barrier profiles") {
  const BarrierProfile a = best_barrier(2, 7);
  CHECK(a.c == 1);
  CHECK(a.r_prime == 7);
  CHECK(a.s == 2);
  CHECK(a.str() == "1 0^2 1 0^2 1");
  const BarrierProfile b = best_barrier(3, 9);
  CHECK(b.c == 1);
  CHECK(b.r_prime == 9);
  CHECK(b.str() == "1 0^3 1 0^3 1");
  CHECK(best_barrier(2, 9).r_prime == 7);
  CHECK(best_barrier(2, 12).c >= 2);
  CHECK_THROWS_AS(best_barrier(1, 7), ContractError);
  CHECK_THROWS_AS(best_barrier(2, 6), ContractError);

  const DiameterResult d = diameter_I(2, 7, 16);
  CHECK(d.kind == DiameterResult::Kind::kBounds);
  CHECK(d.lower_printed == 17);
  CHECK(d.upper == 19);
  const DiameterResult e = diameter_I(2, 9, 14);
  CHECK(e.lower_printed == 15);
  CHECK(e.upper == 16);
}

TEST_CASE("degrees against brute force") {
  for (Family f : {Family::O, Family::I}) {
    for (int p = 1; p <= 4; ++p) {
      for (int r = 1; r <= 4; ++r) {
        for (int n = 1; n <= 11; ++n) {
          const Stats s = stats(f, p, r, n);
          const std::string where = CubeParams{f, p, r, n}.str();
          CAPTURE(where);
          CHECK(min_degree(f, p, r, n) == s.min_degree);
          const Word w = min_degree_witness(f, p, r, n);
          CHECK(w.length() == n);
          CHECK(oracle::index_of(s.g, w.str()) >= 0);
          CHECK(word_degree(f, p, r, w) == s.min_degree);
          if (n >= 2) {
            const MaxDegree m = max_degree(f, p, r, n);
            CHECK(m.delta == s.max_degree);
            CHECK(m.unique_zero_witness == (s.max_degree_count == 1));
          }
        }
      }
    }
  }
}

TEST_CASE("formula preconditions") {
  CHECK_THROWS_AS(radius_O(0, 1, 3), ContractError);
  CHECK_THROWS_AS(max_degree(Family::O, 2, 2, 1), ContractError);
}
