#include "fibcube/formulas.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int floor_div(int a, int b) { return a / b; }
int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_positive(int p, int r, int n, const char* what) {
  if (p < 1 || r < 1 || n < 1) {
    std::ostringstream os;
    os << what << " needs p, r, n >= 1 (got " << p << ", " << r << ", " << n
       << ")";
    throw ContractError(os.str());
  }
}

// One round of 0^{r+1} insertion: the inserted block goes in front, or right
// after any 1. Words are plain strings so lengths beyond 64 stay countable.
std::set<std::string> insert_round(const std::set<std::string>& words,
                                   int block) {
  const std::string pad(static_cast<std::size_t>(block), '0');
  std::set<std::string> out;
  for (const auto& w : words) {
    out.insert(pad + w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == '1') out.insert(w.substr(0, i + 1) + pad + w.substr(i + 1));
    }
  }
  if (out.size() > 5'000'000) {
    throw ResourceError("center construction exceeds 5000000 words");
  }
  return out;
}

std::set<std::string> all_words(int k) {
  std::set<std::string> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    out.insert(Word(bits, k).str());
  }
  return out;
}

// Fits the degree-k polynomial through (x, counts[x-1]) for x = 1..k+1 over
// exact rationals and evaluates it at `at`.
Rational vandermonde_eval(const std::vector<std::uint64_t>& counts, int at) {
  const std::size_t m = counts.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t row = 0; row < m; ++row) {
    const Rational x = static_cast<long long>(row + 1);
    Rational power = 1;
    for (std::size_t col = m; col-- > 0;) {
      a[row][col] = power;
      power *= x;
    }
    a[row][m] = Rational(counts[row]);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= m; ++k) a[row][k] -= f * a[col][k];
    }
  }
  Rational value = 0;
  for (std::size_t col = 0; col < m; ++col) {
    value = value * at + a[col][m] / a[col][col];
  }
  return value;
}

CenterResult center_unit_p(int r, int n) {
  CenterResult out;
  const int k = n % (r + 1);
  if (k == 0) {
    out.center.push_back(Word::zeros(n));
    out.count = 1;
    out.count_method = CountMethod::kSingleton;
    return out;
  }
  const int rounds = n / (r + 1);
  std::vector<std::uint64_t> counts;
  std::set<std::string> level = all_words(k);
  std::set<std::string> at_n;
  for (int j = 0; j <= std::max(rounds, k); ++j) {
    if (j <= k) counts.push_back(level.size());
    if (j == rounds) at_n = level;
    if (j < std::max(rounds, k)) level = insert_round(level, r + 1);
  }
  for (const auto& w : at_n) out.center.push_back(Word::parse(w));

  const Rational fitted = vandermonde_eval(counts, ceil_div(n, r + 1));
  if (denominator(fitted) != 1 || fitted != Rational(out.center.size())) {
    std::ostringstream os;
    os << "center of O(p=1,r=" << r << ",n=" << n << ") has "
       << out.center.size() << " words but the fitted count is " << fitted;
    throw FormulaViolation(os.str(), std::to_string(out.center.size()),
                           fitted.str());
  }
  out.count = out.center.size();
  out.count_method = CountMethod::kVandermonde;
  return out;
}

CenterResult center_wide_p(int p, int r, int n) {
  CenterResult out;
  const int period = p * r + 1;
  const int m = n % period;
  if (m % p != 1) {
    out.center.push_back(Word::zeros(n));
    out.count = 1;
    out.count_method = CountMethod::kSingleton;
    return out;
  }
  const int k = (m - 1) / p;
  std::set<Word> level{Word::zeros(m)};
  for (int j = 0; j <= k; ++j) {
    level.insert(Word::zeros((k - j) * p) + Word::parse("1") +
                 Word::zeros(j * p));
  }
  const Word pad = Word::zeros(period);
  for (int len = m + period; len <= n; len += period) {
    std::set<Word> next;
    for (const Word& w : level) {
      next.insert(pad + w);
      next.insert(w + pad);
    }
    level = std::move(next);
  }
  out.center.assign(level.begin(), level.end());
  const std::uint64_t closed =
      static_cast<std::uint64_t>(n / period + 1) * static_cast<std::uint64_t>(k + 1) + 1;
  if (closed != out.center.size()) {
    std::ostringstream os;
    os << "center of O(p=" << p << ",r=" << r << ",n=" << n << ") has "
       << out.center.size() << " words but the closed form gives " << closed;
    throw FormulaViolation(os.str(), std::to_string(out.center.size()),
                           std::to_string(closed));
  }
  out.count = closed;
  out.count_method = CountMethod::kClosedForm;
  return out;
}

int diameter_O_at(int p, int r, int n) {
  if (p == 1) return n;
  return floor_div(n * r, p * r + 1) + floor_div((n - 1) * r, p * r + 1);
}

Word pattern(std::string_view text) { return Word::parse(text); }

Word witness_I(int p, int r, int n) {
  if (n <= r) return Word::ones(n);
  if (n <= r + p) return Word::ones(r) + Word::zeros(n - r);
  if (n <= r + 2 * p) {
    return Word::zeros(n - r - p) + Word::ones(r) + Word::zeros(p);
  }
  return Word::zeros(p) + Word::ones(r) + Word::zeros(p) +
         witness_I(p, r, n - 2 * p - r);
}

Word witness_O_r2(int p, int n) {
  const Word one = pattern("1");
  if (n <= p) return Word::zeros(n - 1) + one;
  if (n <= 2 * p - 1) return Word::zeros(p - 1) + one + Word::zeros(n - p);
  if (n <= 3 * p) {
    return Word::zeros(p - 1) + one + Word::zeros(n - p - 1) + one;
  }
  if (n <= 4 * p - 1) {
    return Word::zeros(p - 1) + one + Word::zeros(2 * p - 1) + one +
           Word::zeros(n - 3 * p);
  }
  return Word::zeros(p - 1) + one + Word::zeros(p) + witness_O_r2(p, n - 2 * p);
}

Word witness_O_p2r3(int n) {
  if (n > 13) return pattern("0100010100010") + witness_O_p2r3(n - 13);
  if (n == 13) return pattern("0100010100010");
  const Word unit = pattern("010");
  const Word head = unit.repeated(n / 3);
  switch (n % 3) {
    case 1: return head + pattern("1");
    case 2: return head + pattern("10");
    default: return head;
  }
}

Word witness_O_general(int p, int n) {
  const Word one = pattern("1");
  if (n <= p) return one + Word::zeros(n - 1);
  if (n < 2 * p - 1) return Word::zeros(n - p) + one + Word::zeros(p - 1);
  return Word::zeros(p - 1) + one + Word::zeros(p - 1) +
         (n > 2 * p - 1 ? witness_O_general(p, n - 2 * p + 1) : Word{});
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::kSingleton: return "singleton";
    case CountMethod::kVandermonde: return "vandermonde";
    case CountMethod::kClosedForm: return "closed_form";
  }
  return "?";
}

int radius_O(int p, int r, int n) {
  require_positive(p, r, n, "radius_O");
  return p == 1 ? ceil_div(n * r, r + 1) : ceil_div(n * r, p * r + 1);
}

CenterResult center_O(int p, int r, int n) {
  require_positive(p, r, n, "center_O");
  return p == 1 ? center_unit_p(r, n) : center_wide_p(p, r, n);
}

int diameter_O(int p, int r, int n) {
  require_positive(p, r, n, "diameter_O");
  return diameter_O_at(p, r, n + (p == 1 ? 0 : p));
}

int diameter_O_as_printed(int p, int r, int n) {
  require_positive(p, r, n, "diameter_O");
  return diameter_O_at(p, r, n);
}

std::string BarrierProfile::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < ones.size(); ++i) {
    if (i > 0) os << " 0^" << p << ' ';
    os << (ones[i] == 1 ? "1" : "1^" + std::to_string(ones[i]));
  }
  return os.str();
}

BarrierProfile best_barrier(int p, int r) {
  if (p < 2 || r < 2 * p + 3) {
    throw ContractError("best_barrier needs p >= 2 and r >= 2p + 3");
  }
  std::optional<BarrierProfile> best;
  std::vector<int> ones;
  auto consider = [&]() {
    BarrierProfile b;
    b.p = p;
    b.ones = ones;
    b.s = static_cast<int>(ones.size()) - 1;
    int sum = 0;
    int largest = 0;
    for (int a : ones) {
      sum += a;
      largest = std::max(largest, a);
    }
    b.c = sum - 2 * largest;
    b.r_prime = sum + b.s * p;
    if (!best || std::tie(b.c, best->r_prime, best->s, best->ones) >
                     std::tie(best->c, b.r_prime, b.s, b.ones)) {
      best = b;
    }
  };
  // Depth-first over r_1, r_2, ... with the remaining length budget.
  std::function<void(int)> grow = [&](int budget) {
    for (int a = 1; a <= budget; ++a) {
      ones.push_back(a);
      if (ones.size() >= 2) consider();
      if (budget - a - p >= 1) grow(budget - a - p);
      ones.pop_back();
    }
  };
  for (int first = 1; first <= r; ++first) {
    ones.assign(1, first);
    if (r - first - p >= 1) grow(r - first - p);
  }
  return *best;
}

std::string_view to_string(DiameterCase c) {
  switch (c) {
    case DiameterCase::kHypercubeLike: return "p=1";
    case DiameterCase::kShortBlocks: return "r<p";
    case DiameterCase::kNoGain: return "p<=r<=2p+2";
    case DiameterCase::kShortWord: return "r>=2p+3,n<2p+3";
    case DiameterCase::kBarrier: return "r>=2p+3,n>=2p+3";
  }
  return "?";
}

DiameterCase diameter_I_case(int p, int r, int n) {
  if (p == 1) return DiameterCase::kHypercubeLike;
  if (r < p) return DiameterCase::kShortBlocks;
  if (r <= 2 * p + 2) return DiameterCase::kNoGain;
  if (n < 2 * p + 3) return DiameterCase::kShortWord;
  return DiameterCase::kBarrier;
}

DiameterResult diameter_I(int p, int r, int n) {
  require_positive(p, r, n, "diameter_I");
  DiameterResult out;
  out.which = diameter_I_case(p, r, n);
  switch (out.which) {
    case DiameterCase::kShortBlocks:
      out.value = 2 * r * floor_div(n, p + r) + std::min(n % (p + r), 2 * r);
      return out;
    case DiameterCase::kBarrier: {
      const BarrierProfile b = best_barrier(p, r);
      out.kind = DiameterResult::Kind::kBounds;
      out.lower_printed = n + b.c * floor_div(n, b.r_prime + p);
      out.lower = std::max(out.lower_printed, n + 1);
      out.upper = n + b.c * ceil_div(n, b.r_prime);
      out.barrier = b;
      return out;
    }
    default:
      out.value = n;
      return out;
  }
}

int diameter_I_short_blocks_as_printed(int p, int r, int n) {
  require_positive(p, r, n, "diameter_I");
  return 2 * r * ceil_div(n, p + r) + std::min(n % (p + r), 2 * r);
}

MaxDegree max_degree(Family family, int p, int r, int n) {
  if (p < 1 || r < 1 || n < 2) {
    throw ContractError("max_degree needs p, r >= 1 and n >= 2");
  }
  MaxDegree out;
  out.delta = n;
  if (family == Family::O) {
    out.unique_zero_witness = r == 1 || (p >= 2 && r >= 2);
  } else {
    out.unique_zero_witness = r == 1 || (p >= 2 && r == 2 && n >= 4) ||
                              (p >= 2 && r >= 3 && n >= 5);
  }
  return out;
}

int min_degree_I(int p, int r, int n) {
  require_positive(p, r, n, "min_degree_I");
  if (r == 1) return ceil_div(n, 2 * p + 1);
  if (p == 1) {
    const int t = n % (r + 2);
    return r * (n / (r + 2)) + (t <= r - 1 ? t : r);
  }
  const int t = n % (2 * p + r);
  return 2 * (n / (r + 2 * p)) + (t <= 1 ? t : 2);
}

int min_degree_O(int p, int r, int n) {
  require_positive(p, r, n, "min_degree_O");
  if (p == 1 || r == 1) return min_degree_I(p, r, n);
  if (r == 2) return n <= 2 * p - 1 ? 1 : n / (2 * p) + 1;
  if (p == 2 && r == 3) {
    const int t = n % 13;
    return 4 * (n / 13) + ceil_div(t, 3);
  }
  return ceil_div(n, 2 * p - 1);
}

int min_degree(Family family, int p, int r, int n) {
  return family == Family::O ? min_degree_O(p, r, n) : min_degree_I(p, r, n);
}

Word min_degree_witness(Family family, int p, int r, int n) {
  require_positive(p, r, n, "min_degree_witness");
  if (family == Family::I || p == 1 || r == 1) return witness_I(p, r, n);
  if (r == 2) return witness_O_r2(p, n);
  if (p == 2 && r == 3) return witness_O_p2r3(n);
  return witness_O_general(p, n);
}

int word_degree(Family family, int p, int r, const Word& w) {
  if (!is_valid_code(family, p, r, w)) {
    throw ValidityError("'" + w.str() + "' is not a codeword");
  }
  int degree = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (is_valid_code(family, p, r, w.flipped(i))) ++degree;
  }
  return degree;
}

}  // namespace fibcube
