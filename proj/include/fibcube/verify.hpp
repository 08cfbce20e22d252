#pragma once

// Claim harness: every closed form is checked against a brute-force oracle
// over parameter grids. Results are data; only unregistered mismatches fail
// a run.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/numsys.hpp"
#include "json.hpp"

namespace fibcube::verify {

using Json = nlohmann::json;

#ifdef FIBCUBE_CODE_VERSION
inline constexpr std::string_view kCodeVersion = FIBCUBE_CODE_VERSION;
#else
inline constexpr std::string_view kCodeVersion = "dev";
#endif

enum class Verdict : std::uint8_t {
  kMatch,
  kMismatch,
  kBoundsHold,
  kBoundsViolated,
  kSkipped,
};
std::string_view to_string(Verdict v);

// Theorems pass or fail; probes only report.
enum class ClaimKind : std::uint8_t { kTheorem, kProbe };
std::string_view to_string(ClaimKind k);

/// Inclusive integer range, written "a" or "a..b" on the command line.
struct Range {
  int lo = 0;
  int hi = -1;

  bool empty() const noexcept { return hi < lo; }
  bool contains(int x) const noexcept { return lo <= x && x <= hi; }
  static Range all() { return {0, 1 << 30}; }
};
// Throws UsageError on malformed text.
Range parse_range(std::string_view text);

/// Where a claim is evaluated. `family` is empty for claims that are not
/// about a single cube (phi values, O-vs-I comparisons).
struct ClaimPoint {
  std::optional<Family> family;
  int p = 1;
  int r = 1;
  int n = 0;

  friend auto operator<=>(const ClaimPoint&, const ClaimPoint&) = default;
};
std::string to_string(const ClaimPoint& pt);

struct ClaimCheck {
  std::string claim_id;
  ClaimKind kind = ClaimKind::kTheorem;
  ClaimPoint point;
  Json expected;  // formula side; null when skipped
  Json observed;  // oracle side; null when skipped
  Verdict verdict = Verdict::kSkipped;
  Json witness;   // null, or data reproducing the check
  std::optional<std::string> known_discrepancy;  // register reason, if any
  std::int64_t runtime_ms = 0;

  // An unregistered theorem mismatch or bounds violation.
  bool failing() const noexcept;
};

struct ClaimInfo {
  std::string id;
  ClaimKind kind = ClaimKind::kTheorem;
  std::string statement;
};
// Registered claims in report order.
const std::vector<ClaimInfo>& registered_claims();
// Throws UsageError listing every registered id when `id` is unknown.
const ClaimInfo& find_claim(std::string_view id);

/// One entry of the known-discrepancy register: printed values that the
/// oracle contradicts. A mismatch inside an entry is reported but does not
/// fail the run.
struct KnownDiscrepancy {
  std::string claim_id;
  std::optional<Family> family;  // empty matches any
  Range p = Range::all();
  Range r = Range::all();
  Range n = Range::all();
  std::optional<int> n_at_most_p_plus;  // extra constraint n <= p + k
  std::string reason;

  bool covers(const ClaimCheck& check) const;
};
const std::vector<KnownDiscrepancy>& default_known_discrepancies();

/// On-disk oracle cache: newline-delimited JSON records
/// {schema_version, key, value, code_version}. Advisory only: unreadable or
/// stale records are skipped. Thread-safe.
class Cache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Cache(std::filesystem::path path,
                 std::string code_version = std::string(kCodeVersion));
  // Path from the FIBCUBE_CACHE environment variable, if set.
  static std::optional<std::filesystem::path> path_from_env();

  static std::string key(const ClaimPoint& pt, std::string_view name);

  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, Json value);
  // Writes all records to a temporary file and renames it over the cache.
  // Throws IoError when that fails.
  void flush();

  std::size_t size() const;
  std::size_t ignored_records() const noexcept { return ignored_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::string code_version_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, Json> entries_;
  std::size_t ignored_ = 0;
  bool dirty_ = false;
};

struct GridSpec {
  std::vector<Family> families{Family::O, Family::I};
  Range p{1, 4};
  Range r{1, 4};
  Range n{1, 12};
  std::size_t vertex_budget = 20'000;
  std::vector<std::string> claims;  // empty: every registered claim

  bool empty() const noexcept {
    return families.empty() || p.empty() || r.empty() || n.empty();
  }
};

struct RunOptions {
  Cache* cache = nullptr;
  std::vector<KnownDiscrepancy> known = default_known_discrepancies();
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ClaimSummary {
  std::string claim_id;
  ClaimKind kind = ClaimKind::kTheorem;
  std::map<Verdict, std::size_t> counts;
  std::size_t registered = 0;  // mismatches covered by the register
  Json extra;                  // probe-specific tabulation
};

struct GridReport {
  std::vector<ClaimCheck> checks;  // sorted by claim, family, p, r, n
  std::vector<ClaimSummary> summary;
  std::int64_t runtime_ms = 0;

  bool failed() const noexcept;
};

// Evaluates one claim at one point. Inapplicable points and points above the
// vertex budget come back as kSkipped with the reason in the witness.
ClaimCheck run_claim(std::string_view claim_id, const ClaimPoint& point,
                     std::size_t vertex_budget = 20'000,
                     const RunOptions& options = {});

// Points at which `claim_id` is evaluated for this grid.
std::vector<ClaimPoint> claim_points(std::string_view claim_id,
                                     const GridSpec& spec);

GridReport run_grid(const GridSpec& spec, const RunOptions& options = {});

// Probes restricted to their claim ids.
GridReport probe_connectivity_conjecture(GridSpec spec,
                                         const RunOptions& options = {});
GridReport probe_I_radius_claim(GridSpec spec, const RunOptions& options = {});

enum class ReportFormat : std::uint8_t { kJson, kCsv, kTable };
ReportFormat parse_report_format(std::string_view text);

// With `timing` false every runtime field is omitted, which makes reports of
// the same grid byte-identical across runs.
void write_report(std::ostream& os, const GridReport& report,
                  ReportFormat format, bool timing = true);

Json to_json(const ClaimCheck& check, bool timing = true);

}  // namespace fibcube::verify
