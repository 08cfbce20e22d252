#include <charconv>
#include <sstream>

#include "claims.hpp"
#include "fibcube/errors.hpp"

namespace fibcube::verify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kBoundsHold: return "bounds_hold";
    case Verdict::kBoundsViolated: return "bounds_violated";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(ClaimKind k) {
  return k == ClaimKind::kTheorem ? "theorem" : "probe";
}

Range parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc{} || ptr != end) {
      throw UsageError("malformed range '" + std::string(text) +
                       "' (expected N or LO..HI)");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::string to_string(const ClaimPoint& pt) {
  std::ostringstream os;
  os << (pt.family ? to_string(*pt.family) : "-") << "(p=" << pt.p
     << ",r=" << pt.r << ",n=" << pt.n << ")";
  return os.str();
}

bool ClaimCheck::failing() const noexcept {
  if (kind != ClaimKind::kTheorem || known_discrepancy) return false;
  return verdict == Verdict::kMismatch || verdict == Verdict::kBoundsViolated;
}

bool GridReport::failed() const noexcept {
  for (const auto& c : checks) {
    if (c.failing()) return true;
  }
  return false;
}

const std::vector<ClaimInfo>& registered_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& d : detail::claim_defs()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const ClaimInfo& find_claim(std::string_view id) {
  return detail::find_def(id).info;
}

bool KnownDiscrepancy::covers(const ClaimCheck& check) const {
  if (check.claim_id != claim_id) return false;
  if (family && check.point.family != family) return false;
  const ClaimPoint& pt = check.point;
  if (!p.contains(pt.p) || !r.contains(pt.r) || !n.contains(pt.n)) return false;
  if (n_at_most_p_plus && pt.n > pt.p + *n_at_most_p_plus) return false;
  return check.verdict == Verdict::kMismatch ||
         check.verdict == Verdict::kBoundsViolated;
}

const std::vector<KnownDiscrepancy>& default_known_discrepancies() {
  static const std::vector<KnownDiscrepancy> known = [] {
    std::vector<KnownDiscrepancy> out;
    {
      KnownDiscrepancy k;
      k.claim_id = "table1-phi";
      k.p = {2, 2};
      k.r = {2, 2};
      k.n = {11, 11};
      k.reason =
          "printed phi(2,2,11) = 85; the recurrence gives 47+19+8 = 74, and "
          "the printed phi(2,2,12) = 116 = 74+30+12 agrees with 74";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "thm4.4-diameter-as-printed";
      k.family = Family::O;
      k.p = {2, 1 << 30};
      k.reason =
          "the O-diameter closed form counts n as the numbering index "
          "(codeword length + p); read at the codeword length it is too small";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "thm4.5-diameter-as-printed";
      k.family = Family::I;
      k.reason =
          "for r < p the printed ceiling overshoots whenever (p+r) does not "
          "divide n; the floor form matches BFS everywhere";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "prop2.4-order-comparison";
      k.p = {2, 1 << 30};
      k.r = {2, 1 << 30};
      k.n = {2, 1 << 30};
      k.n_at_most_p_plus = 1;
      k.reason =
          "for 2 <= n <= p+1 the word 1^2 0^{n-2} is an I-codeword but not an "
          "O-codeword, so |V(O)| < |V(I)| already there";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "prop2.9-size-recursion";
      k.family = Family::I;
      k.p = {1, 1};
      k.r = {3, 1 << 30};
      k.reason =
          "with p = 1 flipping the single 0 of 1^t 0 1^k ... merges the blocks "
          "into 1^{t+1+k}, an edge between non-consecutive parts of the "
          "decomposition that the recursion does not count (needs t+1+k <= r)";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "prop2.7-iff";
      k.p = {2, 1 << 30};
      k.r = {2, 1 << 30};
      k.n = {1, 1};
      k.reason = "at n = 1 both cubes are K_2 for every p and r";
      out.push_back(k);
    }
    {
      KnownDiscrepancy k;
      k.claim_id = "thm4.5-worked-examples";
      k.family = Family::I;
      k.p = {2, 2};
      k.r = {7, 7};
      k.n = {16, 16};
      k.reason =
          "the exhibited pair (100100111)(1001001), (111111100)(1111111) is "
          "at BFS distance 18, not 17: it holds two barriers of contribution 1 "
          "each, so the lower bound 17 is not attained";
      out.push_back(k);
    }
    return out;
  }();
  return known;
}

}  // namespace fibcube::verify
