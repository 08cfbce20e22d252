// Acceptance checks. Prints one "CRITERION k: PASS|FAIL ..." line per
// criterion; exits nonzero when any requested criterion fails.
//
//   fibcube_acceptance          all criteria
//   fibcube_acceptance 3 5      only criteria 3 and 5

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fibcube/cubegraph.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/verify.hpp"
#include "oracle.hpp"

using namespace fibcube;
using namespace fibcube::verify;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

GridSpec grid(std::vector<std::string> claims, Range p, Range r, Range n,
              std::vector<Family> families = {Family::O, Family::I},
              std::size_t budget = 20'000) {
  GridSpec spec;
  spec.claims = std::move(claims);
  spec.p = p;
  spec.r = r;
  spec.n = n;
  spec.families = std::move(families);
  spec.vertex_budget = budget;
  return spec;
}

std::string brief(const ClaimCheck& c) {
  std::ostringstream os;
  os << c.claim_id << ' ' << to_string(c.point) << ": expected " << c.expected.dump()
     << ", observed " << c.observed.dump();
  return os.str();
}

// Every check must match (or hold its bounds); skips are allowed only for
// graphs above the vertex budget. Registered discrepancies are reported but
// still count against the criterion.
void require_clean(Outcome& out, const GridReport& report, std::size_t budget) {
  std::map<std::string, std::vector<const ClaimCheck*>> bad;
  std::size_t evaluated = 0;
  for (const auto& c : report.checks) {
    switch (c.verdict) {
      case Verdict::kMatch:
      case Verdict::kBoundsHold:
        ++evaluated;
        break;
      case Verdict::kSkipped: {
        const std::string reason = c.witness.value("reason", "");
        const bool budget_skip = reason.find("vertex budget") != std::string::npos ||
                                 reason.find("cap of") != std::string::npos;
        out.require(budget_skip, brief(c) + " skipped: " + reason);
        break;
      }
      default:
        bad[c.claim_id].push_back(&c);
    }
  }
  for (const auto& [id, checks] : bad) {
    std::ostringstream os;
    os << id << " disagrees at " << checks.size() << " point(s), first "
       << brief(*checks.front());
    if (checks.front()->known_discrepancy) {
      os << " [" << *checks.front()->known_discrepancy << "]";
    }
    out.require(false, os.str());
  }
  std::ostringstream os;
  os << evaluated << " checks agree (budget " << budget << ")";
  out.note(os.str());
}

Outcome criterion1() {
  Outcome out;
  const std::map<std::pair<int, int>, std::vector<std::uint64_t>> printed{
      {{1, 1}, {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233}},
      {{1, 3}, {1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490}},
      {{2, 1}, {1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60}},
      {{2, 2}, {1, 1, 1, 2, 3, 5, 8, 12, 19, 30, 47, 85, 116}}};
  for (const auto& [pr, row] : printed) {
    for (int i = 0; i <= 12; ++i) {
      const auto value = oracle::phi(pr.first, pr.second, i);
      const bool odd_one = pr == std::pair{2, 2} && i == 11;
      out.require((value == row[static_cast<std::size_t>(i)]) != odd_one,
                  "reference recurrence at (" + std::to_string(pr.first) + "," +
                      std::to_string(pr.second) + ") i=" + std::to_string(i));
    }
  }
  const GridReport r = run_grid(grid({"table1-phi"}, {1, 4}, {1, 4}, {1, 12}));
  out.require(r.checks.size() == 52, "52 table entries checked");
  std::size_t matches = 0;
  for (const auto& c : r.checks) {
    if (c.verdict == Verdict::kMatch) {
      ++matches;
      continue;
    }
    const bool expected_row = c.point.p == 2 && c.point.r == 2 && c.point.n == 11;
    out.require(expected_row && c.expected == 85 && c.observed == 74 &&
                    c.known_discrepancy.has_value(),
                "unexpected disagreement " + brief(c));
    if (expected_row) out.note("registered: " + brief(c));
  }
  out.require(matches == 51, "51 printed entries equal the recurrence");
  out.require(!r.failed(), "suite status ignores the registered entry");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const GridReport r = run_grid(grid({"eq2.4-order-recursion", "eq2.6-order-recursion",
                                      "prop2.8-size-recursion", "prop2.9-size-recursion"},
                                     {1, 4}, {1, 4}, {1, 14}));
  require_clean(out, r, 20'000);
  // When the size recursion misses, check that the gap is exactly the merge
  // edges it leaves out.
  std::size_t explained = 0;
  std::size_t missed = 0;
  for (const auto& c : r.checks) {
    if (c.claim_id != "prop2.9-size-recursion" || c.verdict != Verdict::kMismatch) continue;
    ++missed;
    const auto gap = c.observed.get<std::int64_t>() - c.expected.get<std::int64_t>();
    if (c.witness.value("uncounted_merge_edges", std::int64_t{-1}) == gap) ++explained;
  }
  if (missed > 0) {
    out.note("size recursion misses at " + std::to_string(missed) + " I-points (p=1, r>=3); " +
             std::to_string(explained) + " gaps equal the uncounted merge edges");
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  const GridReport r = run_grid(grid({"thm4.1-radius", "thm4.1-center", "thm4.2-radius",
                                      "thm4.2-center"},
                                     {1, 4}, {1, 4}, {1, 14}, {Family::O}));
  require_clean(out, r, 20'000);
  std::map<std::string, int> methods;
  for (const auto& c : r.checks) {
    if (c.claim_id.find("center") != std::string::npos && c.witness.contains("count_method")) {
      ++methods[c.witness["count_method"].get<std::string>()];
    }
  }
  std::ostringstream os;
  os << "center counts by method:";
  for (const auto& [m, k] : methods) os << ' ' << m << '=' << k;
  out.note(os.str());
  // Independent brute force on the small end of the grid.
  int compared = 0;
  for (int p = 1; p <= 4; ++p) {
    for (int rr = 1; rr <= 4; ++rr) {
      for (int n = 1; n <= 9; ++n) {
        const auto g = oracle::graph(oracle::vertices('O', p, rr, n));
        const auto ecc = oracle::eccentricities(g);
        const int rad = *std::min_element(ecc.begin(), ecc.end());
        std::vector<std::string> center;
        for (std::size_t v = 0; v < ecc.size(); ++v) {
          if (ecc[v] == rad) center.push_back(g.words[v]);
        }
        const CenterResult z = center_O(p, rr, n);
        std::vector<std::string> got;
        for (const auto& w : z.center) got.push_back(w.str());
        out.require(radius_O(p, rr, n) == rad && got == center && z.count == center.size(),
                    "reference BFS at O(" + std::to_string(p) + "," + std::to_string(rr) +
                        "," + std::to_string(n) + ")");
        ++compared;
      }
    }
  }
  out.note(std::to_string(compared) + " points also match a string-based BFS");
  return out;
}

Outcome criterion4() {
  Outcome out;
  const GridReport r =
      run_grid(grid({"thm4.4-diameter"}, {1, 4}, {1, 4}, {1, 14}, {Family::O}));
  require_clean(out, r, 20'000);
  std::ostringstream n1;
  n1 << "n=1 boundary:";
  bool all_one = true;
  for (const auto& c : r.checks) {
    if (c.point.n == 1) all_one = all_one && c.observed == 1 && c.expected == 1;
  }
  n1 << (all_one ? " every O-cube of length 1 is K_2 and the closed form gives 1"
                 : " disagreement at n=1");
  out.note(n1.str());
  const GridReport printed = run_grid(
      grid({"thm4.4-diameter-as-printed"}, {2, 4}, {1, 4}, {1, 14}, {Family::O}));
  std::size_t off = 0;
  for (const auto& c : printed.checks) off += c.verdict == Verdict::kMismatch;
  out.note("closed form read at the codeword length instead of the index differs at " +
           std::to_string(off) + " of " + std::to_string(printed.checks.size()) +
           " points with p>=2 (registered)");
  return out;
}

Outcome criterion5() {
  Outcome out;
  const GridReport exact =
      run_grid(grid({"thm4.5-diameter"}, {1, 4}, {1, 4}, {1, 14}, {Family::I}));
  require_clean(out, exact, 20'000);
  // The grid above has r <= 4, so the barrier case needs its own sweep.
  const GridReport bounds =
      run_grid(grid({"thm4.5-diameter"}, {2, 3}, {7, 12}, {1, 16}, {Family::I}));
  std::size_t bracketed = 0;
  for (const auto& c : bounds.checks) bracketed += c.verdict == Verdict::kBoundsHold;
  require_clean(out, bounds, 20'000);
  out.note(std::to_string(bracketed) + " barrier-case points bracketed by the bounds");

  struct Example {
    int r;
    int n;
    int claimed;
    const char* which;
  };
  for (const Example ex : {Example{7, 16, 17, "lower"}, Example{9, 14, 16, "upper"}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const DiameterResult d = diameter_I(2, ex.r, ex.n);
    const int bound = std::string(ex.which) == "lower" ? d.lower_printed : d.upper;
    const int library = invariants(build_graph({Family::I, 2, ex.r, ex.n})).diameter;
    const int reference = oracle::diameter(oracle::graph(oracle::vertices('I', 2, ex.r, ex.n)));
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "I(2," << ex.r << "," << ex.n << "): bounds [" << d.lower_printed << "," << d.upper
       << "], BFS " << library << ", reference BFS " << reference << " (" << secs << " s)";
    out.note(os.str());
    out.require(library == reference, "both BFS routes agree on I(2," + std::to_string(ex.r) + ")");
    out.require(bound == ex.claimed, "the " + std::string(ex.which) + " bound evaluates to " +
                                         std::to_string(ex.claimed));
    out.require(library == ex.claimed,
                "I(2," + std::to_string(ex.r) + "," + std::to_string(ex.n) + ") attains the " +
                    ex.which + " bound " + std::to_string(ex.claimed) + " (BFS diameter is " +
                    std::to_string(library) + ")");
  }
  // The exhibited pair for the first example, measured directly.
  const auto g = oracle::graph(oracle::vertices('I', 2, 7, 16));
  const int a = oracle::index_of(g, "1001001111001001");
  const int b = oracle::index_of(g, "1111111001111111");
  if (a >= 0 && b >= 0) {
    out.note("exhibited pair 1001001111001001 / 1111111001111111 is at distance " +
             std::to_string(oracle::bfs(g, a)[static_cast<std::size_t>(b)]) +
             ": two barriers of contribution 1 each");
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  const GridReport r = run_grid(grid({"thm5.1-max-degree", "thm5.4-min-degree",
                                      "thm5.6-min-degree", "min-degree-witness",
                                      "lemma5.2-down-flips"},
                                     {1, 4}, {1, 4}, {1, 14}));
  require_clean(out, r, 20'000);
  return out;
}

Outcome criterion7() {
  Outcome out;
  GridReport r = run_grid(grid({"prop2.1-vertex-sets", "prop2.6-reversal"}, {1, 4}, {1, 4},
                               {1, 14}));
  require_clean(out, r, 20'000);
  r = run_grid(grid({"prop2.3-hypercube", "prop2.3-fibonacci", "prop2.3-postal"}, {1, 4},
                    {1, 8}, {1, 8}));
  require_clean(out, r, 20'000);
  r = run_grid(grid({"prop2.7-iff"}, {1, 4}, {1, 4}, {1, 10}));
  require_clean(out, r, 20'000);
  r = run_grid(grid({"fig3-isomorphism"}, {1, 4}, {1, 4}, {1, 14}));
  require_clean(out, r, 20'000);
  return out;
}

Outcome criterion8() {
  Outcome out;
  const GridReport k = probe_connectivity_conjecture(grid({}, {1, 4}, {1, 4}, {1, 14},
                                                          {Family::O, Family::I}, 5'000));
  std::size_t probed = 0;
  for (const auto& c : k.checks) {
    if (c.verdict == Verdict::kSkipped) {
      const std::string reason = c.witness.value("reason", "");
      out.require(reason.find("vertex budget") != std::string::npos ||
                      reason.find("cap of") != std::string::npos,
                  "connectivity probe skipped " + to_string(c.point) + ": " + reason);
    } else {
      ++probed;
    }
  }
  out.require(!k.summary.empty() && k.summary[0].extra.contains("counterexamples"),
              "connectivity summary lists counterexamples");
  out.require(!k.failed(), "probe never fails the run");
  if (!k.summary.empty()) {
    out.note("kappa = delta probe: " + std::to_string(probed) + " points, counterexamples " +
             k.summary[0].extra["counterexamples"].dump());
  }
  const GridReport z = probe_I_radius_claim(grid({}, {2, 4}, {2, 4}, {1, 14}, {Family::I}));
  out.require(!z.summary.empty() && z.summary[0].extra.contains("residue_zero") &&
                  z.summary[0].extra.contains("residue_nonzero"),
              "I-radius probe splits by n mod (p+r)");
  out.require(!z.failed(), "probe never fails the run");
  if (!z.summary.empty()) out.note("I-radius probe: " + z.summary[0].extra.dump());
  std::ostringstream table;
  write_report(table, z, ReportFormat::kTable, false);
  std::cout << table.str();
  return out;
}

Outcome criterion9() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() / "fibcube-acceptance";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cache.ndjson";
  std::filesystem::remove(path);
  const GridSpec spec;  // the default full suite
  std::string reports[2];
  double secs[2] = {0, 0};
  for (int run = 0; run < 2; ++run) {
    Cache cache(path);
    RunOptions options;
    options.cache = &cache;
    const auto t0 = std::chrono::steady_clock::now();
    const GridReport r = run_grid(spec, options);
    secs[run] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    write_report(os, r, ReportFormat::kJson, false);
    reports[run] = os.str();
    if (run == 0) out.require(!r.failed(), "full suite has no unregistered mismatch");
  }
  out.require(reports[0] == reports[1], "cold and warm reports are byte-identical");
  std::ostringstream os;
  os << "report " << reports[0].size() << " bytes; cold " << secs[0] << " s, warm " << secs[1]
     << " s";
  out.note(os.str());
  std::filesystem::remove(path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) wanted.push_back(i);
  }
  bool all = true;
  for (int k : wanted) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << k << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    for (const auto& line : o.notes) std::cout << "  [" << k << "] " << line << '\n';
    std::cout << "CRITERION " << k << ": " << (o.pass ? "PASS" : "FAIL") << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
