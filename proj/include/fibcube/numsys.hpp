#pragma once

// Fibonacci (p,r)-numbers, codeword validity for the original (O) and
// imitative (I) cube families, integer <-> codeword conversion, and vertex
// enumeration.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fibcube {

enum class Family : std::uint8_t { O, I };

std::string_view to_string(Family f);
// Accepts "O"/"I" (either case). Throws UsageError otherwise.
Family parse_family(std::string_view text);

/// Binary word of length 0..64, stored packed, most significant symbol first.
///
/// Position 0 is the leftmost symbol as printed. For words of equal length
/// the ordering below is the lexicographic order with 0 < 1, which is the
/// canonical vertex order used everywhere.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  constexpr Word() = default;
  Word(std::uint64_t bits, int length);

  static Word zeros(int length);
  static Word ones(int length);
  // Parses a string of '0'/'1'. Throws ContractError on any other symbol.
  static Word parse(std::string_view text);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool empty() const noexcept { return length_ == 0; }

  bool at(int pos) const noexcept {
    return ((bits_ >> (length_ - 1 - pos)) & 1U) != 0;
  }
  Word flipped(int pos) const noexcept {
    return Word(bits_ ^ (std::uint64_t{1} << (length_ - 1 - pos)), length_,
                Unchecked{});
  }
  int weight() const noexcept;
  Word reversed() const;
  Word repeated(int times) const;

  std::string str() const;

  friend Word operator+(const Word& head, const Word& tail);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Unchecked {};
  constexpr Word(std::uint64_t bits, int length, Unchecked)
      : length_(length), bits_(bits) {}

  int length_ = 0;  // compared first: shorter words sort first
  std::uint64_t bits_ = 0;
};

int hamming(const Word& a, const Word& b);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// One cube: family tag, parameters p and r, and codeword length n.
///
/// For family O, n is the codeword length, i.e. the graph on the codes of
/// 0 .. phi(p, r, n + p) - 1.
struct CubeParams {
  Family family = Family::O;
  int p = 1;
  int r = 1;
  int n = 0;

  // Throws ContractError unless p >= 1, r >= 1 and 0 <= n <= 64.
  void validate() const;
  std::string str() const;

  friend auto operator<=>(const CubeParams&, const CubeParams&) = default;
  friend bool operator==(const CubeParams&, const CubeParams&) = default;
};

/// Memoized Fibonacci (p,r)-number sequence for one (p, r).
///
/// Not synchronized; each thread should own its table (phi() below keeps a
/// thread-local one per (p, r)).
class PhiTable {
 public:
  PhiTable(int p, int r);

  // phi(i); 0 for i < 0. Throws OverflowError naming (p, r, i).
  std::uint64_t operator()(int i);

  int p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }

 private:
  int p_;
  int r_;
  std::vector<std::uint64_t> values_;
};

std::uint64_t phi(int p, int r, int i);

/// Incremental forbidden-factor scanner. Feeding a word symbol by symbol
/// reports the first symbol at which it stops being a codeword. Validity is
/// prefix-closed for both families, so this also drives enumeration.
class CodeScanner {
 public:
  CodeScanner(Family family, int p, int r) : family_(family), p_(p), r_(r) {}

  // Returns false (and leaves the state unspecified) when appending `bit`
  // creates a forbidden factor.
  bool push(bool bit) noexcept;
  bool accepts(bool bit) const noexcept {
    CodeScanner copy = *this;
    return copy.push(bit);
  }

 private:
  Family family_;
  int p_;
  int r_;
  int gap_ = -1;  // zeros since the last 1; -1 before the first 1
  int run_ = 0;   // I: length of the current 1-block; O: current chain length
};

bool is_valid_code(Family family, int p, int r, const Word& w);
// Throws ContractError when w.length() != params.n.
bool is_valid_word(const CubeParams& params, const Word& w);

// Exact number of codewords of length n, without enumerating them.
std::uint64_t count_vertices(const CubeParams& params);

// All codewords of length n in increasing lexicographic order.
std::vector<Word> enumerate_vertices(const CubeParams& params);

// Family O only. Greedy most-significant-first code of k.
// Throws RangeError unless 0 <= k < phi(p, r, n + p).
Word encode(const CubeParams& params, std::uint64_t k);
// Family O only. Throws ValidityError for a non-codeword.
std::uint64_t decode(const CubeParams& params, const Word& w);

// Vertex set assembled by prefix decomposition (family O: prefixes
// (1 0^{p-1})^t 0; family I: prefixes 0 and 1^t 0^p). Short lengths where the
// decomposition does not apply are seeded by direct enumeration.
std::set<Word> recursive_vertex_set(const CubeParams& params);

}  // namespace fibcube
