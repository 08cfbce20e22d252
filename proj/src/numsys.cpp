#include "fibcube/numsys.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0}
                      : (std::uint64_t{1} << length) - 1;
}

bool checked_add(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_add_overflow(a, b, &out);
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::O ? "O" : "I"; }

Family parse_family(std::string_view text) {
  if (text == "O" || text == "o") return Family::O;
  if (text == "I" || text == "i") return Family::I;
  throw UsageError("unknown cube family '" + std::string(text) +
                   "' (expected O or I)");
}

// ---------------------------------------------------------------- Word

Word::Word(std::uint64_t bits, int length) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength) {
    throw ContractError("word length " + std::to_string(length) +
                        " outside [0, 64]");
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw ContractError("word bits exceed length " + std::to_string(length));
  }
}

Word Word::zeros(int length) { return Word(0, length); }

Word Word::ones(int length) { return Word(low_mask(length), length); }

Word Word::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw ContractError("word longer than 64 symbols");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ContractError("'" + std::string(text) + "' is not a binary word");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Word(bits, static_cast<int>(text.size()));
}

int Word::weight() const noexcept { return std::popcount(bits_); }

Word Word::reversed() const {
  std::uint64_t out = 0;
  for (int i = 0; i < length_; ++i) {
    out = (out << 1) | ((bits_ >> i) & 1U);
  }
  return Word(out, length_, Unchecked{});
}

Word Word::repeated(int times) const {
  Word out;
  for (int i = 0; i < times; ++i) out = out + *this;
  return out;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (at(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Word operator+(const Word& head, const Word& tail) {
  const int length = head.length_ + tail.length_;
  if (length > Word::kMaxLength) {
    throw ContractError("concatenated word longer than 64 symbols");
  }
  const std::uint64_t hi = tail.length_ >= 64 ? 0 : head.bits_ << tail.length_;
  return Word(hi | tail.bits_, length, Word::Unchecked{});
}

int hamming(const Word& a, const Word& b) {
  if (a.length() != b.length()) {
    throw ContractError("hamming distance of words with different lengths");
  }
  return std::popcount(a.bits() ^ b.bits());
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

// ---------------------------------------------------------------- CubeParams

void CubeParams::validate() const {
  if (p < 1 || r < 1 || n < 0 || n > Word::kMaxLength) {
    throw ContractError("invalid cube parameters " + str() +
                        " (need p >= 1, r >= 1, 0 <= n <= 64)");
  }
}

std::string CubeParams::str() const {
  std::ostringstream os;
  os << to_string(family) << "(p=" << p << ",r=" << r << ",n=" << n << ")";
  return os.str();
}

// ---------------------------------------------------------------- phi

PhiTable::PhiTable(int p, int r) : p_(p), r_(r), values_{1} {
  if (p < 1 || r < 1) {
    throw ContractError("phi requires p >= 1 and r >= 1");
  }
}

std::uint64_t PhiTable::operator()(int i) {
  if (i < 0) return 0;
  while (static_cast<int>(values_.size()) <= i) {
    const int k = static_cast<int>(values_.size());
    std::uint64_t sum = 0;
    for (int j = 0; j <= r_; ++j) {
      const int idx = k - p_ * j - 1;
      if (idx < 0) break;
      if (!checked_add(sum, values_[static_cast<std::size_t>(idx)], sum)) {
        std::ostringstream os;
        os << "phi(" << p_ << "," << r_ << "," << k
           << ") overflows 64-bit arithmetic";
        throw OverflowError(os.str());
      }
    }
    values_.push_back(sum);
  }
  return values_[static_cast<std::size_t>(i)];
}

std::uint64_t phi(int p, int r, int i) {
  thread_local std::map<std::pair<int, int>, PhiTable> tables;
  auto it = tables.find({p, r});
  if (it == tables.end()) {
    it = tables.emplace(std::pair{p, r}, PhiTable(p, r)).first;
  }
  return it->second(i);
}

// ---------------------------------------------------------------- validity

bool CodeScanner::push(bool bit) noexcept {
  if (!bit) {
    if (gap_ >= 0) ++gap_;
    return true;
  }
  if (family_ == Family::I) {
    if (gap_ == 0) {
      if (++run_ > r_) return false;
    } else if (gap_ > 0 && gap_ < p_) {
      return false;
    } else {
      run_ = 1;
    }
  } else {
    // A "consecutive" pair in family O is two 1s separated by exactly p-1 0s.
    if (gap_ < 0 || gap_ > p_ - 1) {
      run_ = 1;
    } else if (gap_ < p_ - 1) {
      return false;
    } else if (++run_ > r_) {
      return false;
    }
  }
  gap_ = 0;
  return true;
}

bool is_valid_code(Family family, int p, int r, const Word& w) {
  CodeScanner scanner(family, p, r);
  for (int i = 0; i < w.length(); ++i) {
    if (!scanner.push(w.at(i))) return false;
  }
  return true;
}

bool is_valid_word(const CubeParams& params, const Word& w) {
  if (w.length() != params.n) {
    throw ContractError("word '" + w.str() + "' has length " +
                        std::to_string(w.length()) + ", expected " +
                        std::to_string(params.n));
  }
  return is_valid_code(params.family, params.p, params.r, w);
}

// ---------------------------------------------------------------- counting

std::uint64_t count_vertices(const CubeParams& params) {
  params.validate();
  const int p = params.p;
  const int r = params.r;
  // State: (zeros since last 1 capped at p, current run). "No 1 yet" behaves
  // exactly like a gap of at least p.
  using State = std::pair<int, int>;
  std::map<State, std::uint64_t> cur{{{p, 0}, 1}};
  for (int step = 0; step < params.n; ++step) {
    std::map<State, std::uint64_t> next;
    auto add = [&](State s, std::uint64_t c) {
      auto& slot = next[s];
      if (!checked_add(slot, c, slot)) {
        throw OverflowError("vertex count of " + params.str() +
                            " overflows 64-bit arithmetic");
      }
    };
    for (const auto& [state, count] : cur) {
      const auto [gap, run] = state;
      add({std::min(gap + 1, p), run}, count);
      int next_run = -1;
      if (params.family == Family::I) {
        if (gap == 0) {
          next_run = run + 1 <= r ? run + 1 : -1;
        } else if (gap >= p) {
          next_run = 1;
        }
      } else {
        if (gap >= p) {
          next_run = 1;
        } else if (gap == p - 1) {
          next_run = run + 1 <= r ? run + 1 : -1;
        }
      }
      if (next_run > 0) add({0, next_run}, count);
    }
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [state, count] : cur) {
    if (!checked_add(total, count, total)) {
      throw OverflowError("vertex count of " + params.str() +
                          " overflows 64-bit arithmetic");
    }
  }
  return total;
}

// ---------------------------------------------------------------- enumeration

namespace {

void extend(const CodeScanner& scanner, std::uint64_t prefix, int depth,
            int n, std::vector<Word>& out) {
  if (depth == n) {
    out.emplace_back(prefix, n);
    return;
  }
  for (int bit = 0; bit <= 1; ++bit) {
    CodeScanner next = scanner;
    if (next.push(bit == 1)) {
      extend(next, (prefix << 1) | static_cast<std::uint64_t>(bit), depth + 1,
             n, out);
    }
  }
}

}  // namespace

std::vector<Word> enumerate_vertices(const CubeParams& params) {
  params.validate();
  std::vector<Word> out;
  extend(CodeScanner(params.family, params.p, params.r), 0, 0, params.n, out);
  return out;
}

// ---------------------------------------------------------------- codes

Word encode(const CubeParams& params, std::uint64_t k) {
  params.validate();
  if (params.family != Family::O) {
    throw ContractError("integer codes are defined for family O only");
  }
  const int p = params.p;
  const int r = params.r;
  const int n = params.n;
  const std::uint64_t limit = phi(p, r, n + p);
  if (k >= limit) {
    std::ostringstream os;
    os << "value " << k << " outside [0, " << limit - 1 << "] for "
       << params.str();
    throw RangeError(os.str());
  }
  CodeScanner scanner(Family::O, p, r);
  std::uint64_t remainder = k;
  std::uint64_t bits = 0;
  for (int i = n + p - 1; i >= p; --i) {
    const std::uint64_t weight = phi(p, r, i);
    const bool take = weight <= remainder && scanner.accepts(true);
    scanner.push(take);
    bits = (bits << 1) | static_cast<std::uint64_t>(take);
    if (take) remainder -= weight;
  }
  if (remainder != 0) {
    std::ostringstream os;
    os << "greedy code of " << k << " in " << params.str()
       << " leaves remainder " << remainder;
    throw FormulaViolation(os.str(), std::to_string(k - remainder),
                           std::to_string(k));
  }
  return Word(bits, n);
}

std::uint64_t decode(const CubeParams& params, const Word& w) {
  params.validate();
  if (params.family != Family::O) {
    throw ContractError("integer codes are defined for family O only");
  }
  if (!is_valid_word(params, w)) {
    throw ValidityError("'" + w.str() + "' is not a codeword of " +
                        params.str());
  }
  std::uint64_t k = 0;
  for (int pos = 0; pos < w.length(); ++pos) {
    if (!w.at(pos)) continue;
    const int index = params.n + params.p - 1 - pos;
    if (!checked_add(k, phi(params.p, params.r, index), k)) {
      throw OverflowError("decoded value of '" + w.str() + "' overflows");
    }
  }
  return k;
}

// ---------------------------------------------------------------- recursion

std::set<Word> recursive_vertex_set(const CubeParams& params) {
  params.validate();
  const int p = params.p;
  const int r = params.r;
  const bool family_o = params.family == Family::O;
  // Lengths at or below the threshold are seeded by direct enumeration.
  const int seed_max = family_o ? p * r : p + r - 1;

  std::vector<std::set<Word>> sets;
  sets.reserve(static_cast<std::size_t>(params.n) + 1);
  for (int m = 0; m <= params.n; ++m) {
    std::set<Word> level;
    if (m <= seed_max) {
      const auto words = enumerate_vertices({params.family, p, r, m});
      level.insert(words.begin(), words.end());
    } else if (family_o) {
      const Word link = Word::parse("1") + Word::zeros(p - 1);
      for (int t = 0; t <= r; ++t) {
        const Word prefix = link.repeated(t) + Word::zeros(1);
        for (const Word& tail : sets[static_cast<std::size_t>(m - p * t - 1)]) {
          level.insert(prefix + tail);
        }
      }
    } else {
      for (const Word& tail : sets[static_cast<std::size_t>(m - 1)]) {
        level.insert(Word::zeros(1) + tail);
      }
      for (int t = 1; t <= r; ++t) {
        const Word prefix = Word::ones(t) + Word::zeros(p);
        for (const Word& tail : sets[static_cast<std::size_t>(m - p - t)]) {
          level.insert(prefix + tail);
        }
      }
    }
    sets.push_back(std::move(level));
  }
  return sets.back();
}

}  // namespace fibcube
