#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "claims.hpp"
#include "fibcube/errors.hpp"

namespace fibcube::verify {

namespace {

using detail::ClaimDef;
using detail::Oracle;
using detail::Scope;
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since)
      .count();
}

// Empty when the claim applies at `pt`, else the reason it does not.
std::string inapplicable(const ClaimDef& d, const ClaimPoint& pt) {
  switch (d.scope) {
    case Scope::kFixed:
      if (std::find(d.fixed.begin(), d.fixed.end(), pt) == d.fixed.end()) {
        return "claim is only evaluated at its fixed points";
      }
      return {};
    case Scope::kCube:
      if (!pt.family) return "claim needs a cube family";
      if (std::find(d.families.begin(), d.families.end(), *pt.family) ==
          d.families.end()) {
        return "claim does not cover family " + std::string(to_string(*pt.family));
      }
      break;
    case Scope::kPair:
      break;
  }
  if (pt.p < 1 || pt.r < 1 || pt.n < 1) return "needs p, r, n >= 1";
  if (d.applies && !d.applies(pt)) return "parameters outside the claim's range";
  return {};
}

// Empty when every cube the claim builds fits the budgets.
std::string over_budget(const ClaimDef& d, const ClaimPoint& pt,
                        std::size_t budget) {
  if (!d.cubes) return {};
  for (const CubeParams& cube : d.cubes(pt)) {
    if (cube.n > Word::kMaxLength) return "codeword length above 64";
    std::uint64_t order = 0;
    try {
      order = count_vertices(cube);
    } catch (const OverflowError&) {
      return cube.str() + " is too large to count";
    }
    std::ostringstream os;
    if (order > budget) {
      os << cube.str() << " has " << order << " vertices, above the vertex budget of "
         << budget;
      return os.str();
    }
    if (d.order_cap != 0 && order > d.order_cap) {
      os << cube.str() << " has " << order << " vertices, above this claim's cap of "
         << d.order_cap;
      return os.str();
    }
  }
  return {};
}

ClaimCheck evaluate(const ClaimDef& d, Oracle& oracle, ClaimPoint pt,
                    std::size_t budget,
                    const std::vector<KnownDiscrepancy>& known) {
  const auto start = Clock::now();
  if (d.scope == Scope::kPair) pt.family.reset();
  ClaimCheck c;
  c.claim_id = d.info.id;
  c.kind = d.info.kind;
  c.point = pt;
  std::string reason = inapplicable(d, pt);
  if (reason.empty()) reason = over_budget(d, pt, budget);
  if (!reason.empty()) {
    c.verdict = Verdict::kSkipped;
    c.witness = {{"reason", reason}};
  } else {
    try {
      d.evaluate(oracle, pt, c);
    } catch (const ResourceError& e) {
      c = ClaimCheck{c.claim_id, c.kind, pt, nullptr, nullptr, Verdict::kSkipped,
                     Json{{"reason", e.what()}}, std::nullopt, 0};
    }
  }
  if ((c.verdict == Verdict::kMismatch || c.verdict == Verdict::kBoundsViolated)) {
    if (c.witness.is_null()) c.witness = Json::object();
    std::ostringstream os;
    os << "fibcube verify --claim " << c.claim_id;
    if (pt.family) os << " --family " << to_string(*pt.family);
    os << " --p " << pt.p << " --r " << pt.r << " --n " << pt.n;
    c.witness["reproduce"] = os.str();
    for (const auto& k : known) {
      if (k.covers(c)) {
        c.known_discrepancy = k.reason;
        break;
      }
    }
  }
  c.runtime_ms = elapsed_ms(start);
  return c;
}

std::vector<const ClaimDef*> selected(const GridSpec& spec) {
  std::vector<const ClaimDef*> out;
  if (spec.claims.empty()) {
    for (const auto& d : detail::claim_defs()) out.push_back(&d);
    return out;
  }
  for (const auto& id : spec.claims) {
    const ClaimDef* d = &detail::find_def(id);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

std::vector<ClaimPoint> points_for(const ClaimDef& d, const GridSpec& spec) {
  std::vector<ClaimPoint> out;
  if (spec.empty()) return out;
  if (d.scope == Scope::kFixed) return d.fixed;
  for (int p = std::max(1, spec.p.lo); p <= spec.p.hi; ++p) {
    for (int r = std::max(1, spec.r.lo); r <= spec.r.hi; ++r) {
      for (int n = std::max(1, spec.n.lo); n <= spec.n.hi; ++n) {
        if (d.scope == Scope::kPair) {
          ClaimPoint pt{std::nullopt, p, r, n};
          if (inapplicable(d, pt).empty()) out.push_back(pt);
          continue;
        }
        for (Family f : spec.families) {
          ClaimPoint pt{f, p, r, n};
          if (inapplicable(d, pt).empty()) out.push_back(pt);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClaimSummary summarize(const ClaimDef& d, const std::vector<ClaimCheck>& checks) {
  ClaimSummary s;
  s.claim_id = d.info.id;
  s.kind = d.info.kind;
  for (auto v : {Verdict::kMatch, Verdict::kMismatch, Verdict::kBoundsHold,
                 Verdict::kBoundsViolated, Verdict::kSkipped}) {
    s.counts[v] = 0;
  }
  Json split = {{"residue_zero", {{"points", 0}, {"formula_holds", 0}, {"zero_central", 0}}},
                {"residue_nonzero", {{"points", 0}, {"formula_holds", 0}, {"zero_central", 0}}}};
  Json counterexamples = Json::array();
  for (const auto& c : checks) {
    if (c.claim_id != d.info.id) continue;
    ++s.counts[c.verdict];
    if (c.known_discrepancy) ++s.registered;
    if (c.verdict == Verdict::kSkipped) continue;
    if (d.info.id == "conj-i-radius") {
      auto& row = split[c.witness["residue"] == 0 ? "residue_zero" : "residue_nonzero"];
      row["points"] = row["points"].get<int>() + 1;
      if (c.verdict == Verdict::kMatch) row["formula_holds"] = row["formula_holds"].get<int>() + 1;
      if (c.witness["zero_central"] == true) row["zero_central"] = row["zero_central"].get<int>() + 1;
    } else if (d.info.id == "conj-connectivity" && c.verdict == Verdict::kMismatch) {
      counterexamples.push_back(to_string(c.point));
    }
  }
  if (d.info.id == "conj-i-radius") s.extra = split;
  if (d.info.id == "conj-connectivity") s.extra = {{"counterexamples", counterexamples}};
  return s;
}

}  // namespace

ClaimCheck run_claim(std::string_view claim_id, const ClaimPoint& point,
                     std::size_t vertex_budget, const RunOptions& options) {
  const ClaimDef& d = detail::find_def(claim_id);
  Oracle oracle(options.cache);
  ClaimCheck c = evaluate(d, oracle, point, vertex_budget, options.known);
  if (options.cache != nullptr) options.cache->flush();
  return c;
}

std::vector<ClaimPoint> claim_points(std::string_view claim_id,
                                     const GridSpec& spec) {
  return points_for(detail::find_def(claim_id), spec);
}

GridReport run_grid(const GridSpec& spec, const RunOptions& options) {
  const auto start = Clock::now();
  const auto defs = selected(spec);

  // One task per (p, r, n), so both families and all claims there share a
  // worker's graph memo. Fixed points form their own tasks.
  using TaskKey = std::tuple<int, int, int, int>;
  std::map<TaskKey, std::vector<std::pair<const ClaimDef*, ClaimPoint>>> grouped;
  for (const ClaimDef* d : defs) {
    for (const ClaimPoint& pt : points_for(*d, spec)) {
      const int fixed = d->scope == Scope::kFixed ? 1 : 0;
      grouped[{fixed, pt.n, pt.p, pt.r}].emplace_back(d, pt);
    }
  }
  std::vector<std::vector<std::pair<const ClaimDef*, ClaimPoint>>> tasks;
  for (auto& [key, items] : grouped) tasks.push_back(std::move(items));
  // Largest n first keeps the slowest tasks from trailing.
  std::reverse(tasks.begin(), tasks.end());

  std::vector<std::vector<ClaimCheck>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    Oracle oracle(options.cache);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        for (const auto& [d, pt] : tasks[i]) {
          results[i].push_back(evaluate(*d, oracle, pt, spec.vertex_budget, options.known));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  GridReport report;
  for (auto& r : results) {
    for (auto& c : r) report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const ClaimCheck& a, const ClaimCheck& b) {
              return std::tie(a.claim_id, a.point) < std::tie(b.claim_id, b.point);
            });
  std::vector<const ClaimDef*> ordered = defs;
  std::sort(ordered.begin(), ordered.end(), [](const ClaimDef* a, const ClaimDef* b) {
    return a->info.id < b->info.id;
  });
  for (const ClaimDef* d : ordered) report.summary.push_back(summarize(*d, report.checks));
  if (options.cache != nullptr) options.cache->flush();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

GridReport probe_connectivity_conjecture(GridSpec spec, const RunOptions& options) {
  spec.claims = {"conj-connectivity"};
  return run_grid(spec, options);
}

GridReport probe_I_radius_claim(GridSpec spec, const RunOptions& options) {
  spec.claims = {"conj-i-radius"};
  return run_grid(spec, options);
}

}  // namespace fibcube::verify
