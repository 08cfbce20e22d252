#include <algorithm>
#include <ostream>
#include <sstream>

#include "fibcube/errors.hpp"
#include "fibcube/verify.hpp"

namespace fibcube::verify {

namespace {

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Scalars print bare, everything else as compact JSON.
std::string cell(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string clip(std::string s, std::size_t width) {
  if (s.size() > width) s = s.substr(0, width - 3) + "...";
  return s;
}

Json summary_json(const ClaimSummary& s) {
  Json counts = Json::object();
  for (const auto& [v, n] : s.counts) counts[std::string(to_string(v))] = n;
  Json j = {{"claim_id", s.claim_id},
            {"kind", std::string(to_string(s.kind))},
            {"counts", counts},
            {"registered", s.registered}};
  if (!s.extra.is_null()) j["extra"] = s.extra;
  return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "table") return ReportFormat::kTable;
  throw UsageError("unknown report format '" + std::string(text) +
                   "' (expected json, csv or table)");
}

Json to_json(const ClaimCheck& c, bool timing) {
  Json j = {{"claim_id", c.claim_id},
            {"kind", std::string(to_string(c.kind))},
            {"family", c.point.family ? Json(std::string(to_string(*c.point.family))) : Json()},
            {"p", c.point.p},
            {"r", c.point.r},
            {"n", c.point.n},
            {"expected", c.expected},
            {"observed", c.observed},
            {"verdict", std::string(to_string(c.verdict))},
            {"witness", c.witness},
            {"known_discrepancy", c.known_discrepancy ? Json(*c.known_discrepancy) : Json()}};
  if (timing) j["runtime_ms"] = c.runtime_ms;
  return j;
}

void write_report(std::ostream& os, const GridReport& report,
                  ReportFormat format, bool timing) {
  switch (format) {
    case ReportFormat::kJson: {
      Json doc;
      doc["code_version"] = std::string(kCodeVersion);
      doc["failed"] = report.failed();
      Json checks = Json::array();
      for (const auto& c : report.checks) checks.push_back(to_json(c, timing));
      doc["checks"] = std::move(checks);
      Json summary = Json::array();
      for (const auto& s : report.summary) summary.push_back(summary_json(s));
      doc["summary"] = std::move(summary);
      if (timing) doc["runtime_ms"] = report.runtime_ms;
      os << doc.dump(1) << '\n';
      return;
    }
    case ReportFormat::kCsv: {
      os << "claim_id,kind,family,p,r,n,expected,observed,verdict,known_discrepancy,witness";
      if (timing) os << ",runtime_ms";
      os << '\n';
      for (const auto& c : report.checks) {
        os << c.claim_id << ',' << to_string(c.kind) << ','
           << (c.point.family ? to_string(*c.point.family) : "") << ','
           << c.point.p << ',' << c.point.r << ',' << c.point.n << ','
           << csv_cell(cell(c.expected)) << ',' << csv_cell(cell(c.observed)) << ','
           << to_string(c.verdict) << ','
           << csv_cell(c.known_discrepancy.value_or("")) << ','
           << csv_cell(cell(c.witness));
        if (timing) os << ',' << c.runtime_ms;
        os << '\n';
      }
      return;
    }
    case ReportFormat::kTable: {
      std::size_t id_width = 8;
      for (const auto& c : report.checks) id_width = std::max(id_width, c.claim_id.size());
      auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
      };
      os << pad("claim", id_width) << "  " << pad("point", 18) << "  "
         << pad("verdict", 15) << "  " << pad("expected", 24) << "  "
         << pad("observed", 24) << "  note\n";
      for (const auto& c : report.checks) {
        std::string note;
        if (c.known_discrepancy) {
          note = "registered";
        } else if (c.verdict == Verdict::kSkipped && c.witness.contains("reason")) {
          note = c.witness["reason"].get<std::string>();
        }
        os << pad(c.claim_id, id_width) << "  " << pad(to_string(c.point), 18) << "  "
           << pad(std::string(to_string(c.verdict)), 15) << "  "
           << pad(clip(cell(c.expected), 24), 24) << "  "
           << pad(clip(cell(c.observed), 24), 24) << "  " << note;
        if (timing) os << (note.empty() ? "" : " ") << '(' << c.runtime_ms << " ms)";
        os << '\n';
      }
      os << '\n';
      for (const auto& s : report.summary) {
        os << pad(s.claim_id, id_width) << "  " << to_string(s.kind);
        for (const auto& [v, n] : s.counts) {
          if (n > 0) os << "  " << to_string(v) << '=' << n;
        }
        if (s.registered > 0) os << "  registered=" << s.registered;
        if (!s.extra.is_null()) os << "  " << s.extra.dump();
        os << '\n';
      }
      os << (report.failed() ? "FAILED" : "OK");
      if (timing) os << " in " << report.runtime_ms << " ms";
      os << '\n';
      return;
    }
  }
}

}  // namespace fibcube::verify
