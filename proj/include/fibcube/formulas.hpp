#pragma once

// Closed-form and constructive invariants of the cubes, evaluated from
// (family, p, r, n) alone. Nothing here builds a graph.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/numsys.hpp"

namespace fibcube {

enum class CountMethod : std::uint8_t { kSingleton, kVandermonde, kClosedForm };
std::string_view to_string(CountMethod m);

struct CenterResult {
  std::vector<Word> center;  // sorted
  std::uint64_t count = 0;
  CountMethod count_method = CountMethod::kSingleton;
};

// Radius of the O-cube with codeword length n: ceil(nr/(r+1)) for p = 1,
// ceil(nr/(pr+1)) otherwise.
int radius_O(int p, int r, int n);

// Center of the O-cube. For p = 1 the set comes from iterated 0^{r+1}
// insertion and its size is cross-checked by an exact polynomial fit; for
// p >= 2 it comes from the two-sided 0^{pr+1} padding recursion and is
// cross-checked against the closed-form count. A disagreement throws
// FormulaViolation carrying both numbers.
CenterResult center_O(int p, int r, int n);

// Diameter of the O-cube. The closed form is stated for the index n + p of
// the underlying numbering system; this evaluates it at that index.
int diameter_O(int p, int r, int n);
// Same closed form evaluated directly at the codeword length n.
int diameter_O_as_printed(int p, int r, int n);

/// A barrier 1^{r_1} 0^p 1^{r_2} ... 0^p 1^{r_{s+1}} against all 1s.
struct BarrierProfile {
  int c = 0;              // contribution: sum(r_i) - 2 max(r_i)
  int r_prime = 0;        // total length
  int s = 0;              // number of 0-blocks
  std::vector<int> ones;  // r_1 .. r_{s+1}
  int p = 0;              // length of every 0-block

  std::string str() const;  // e.g. "1 0^2 1 0^2 1"
};

// Exhaustive search over profiles with 0-blocks of length exactly p and
// total length <= r. Maximizes c, then minimizes r', then s, then takes the
// lexicographically smallest profile. Requires p >= 2 and r >= 2p + 3.
BarrierProfile best_barrier(int p, int r);

// Which closed form governs the I-cube diameter.
enum class DiameterCase : std::uint8_t {
  kHypercubeLike,  // p = 1
  kShortBlocks,    // r < p
  kNoGain,         // p <= r <= 2p + 2
  kShortWord,      // r >= 2p + 3, n < 2p + 3
  kBarrier,        // r >= 2p + 3, n >= 2p + 3
};
std::string_view to_string(DiameterCase c);
DiameterCase diameter_I_case(int p, int r, int n);

struct DiameterResult {
  enum class Kind : std::uint8_t { kExact, kBounds };
  Kind kind = Kind::kExact;
  DiameterCase which = DiameterCase::kHypercubeLike;
  int value = 0;          // kExact
  int lower = 0;          // kBounds: max(printed lower, n + 1)
  int lower_printed = 0;  // kBounds: n + c floor(n/(r'+p))
  int upper = 0;          // kBounds: n + c ceil(n/r')
  std::optional<BarrierProfile> barrier;
};

DiameterResult diameter_I(int p, int r, int n);
// The r < p form with ceil(n/(p+r)) in place of floor(n/(p+r)).
int diameter_I_short_blocks_as_printed(int p, int r, int n);

struct MaxDegree {
  int delta = 0;
  bool unique_zero_witness = false;  // 0^n is the only vertex of degree n
};
// Requires n >= 2.
MaxDegree max_degree(Family family, int p, int r, int n);

int min_degree_I(int p, int r, int n);
// For p = 1 or r = 1 the O- and I-cubes coincide and this delegates.
int min_degree_O(int p, int r, int n);
int min_degree(Family family, int p, int r, int n);

// A vertex of minimum degree, built periodically from short blocks.
Word min_degree_witness(Family family, int p, int r, int n);

// Degree of w in its cube, counted as the number of valid one-bit flips.
int word_degree(Family family, int p, int r, const Word& w);

}  // namespace fibcube
