// fibcube: generate Fibonacci (p,r)-cubes, tabulate invariants, run the
// verification grid, convert codes and test isomorphism.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 resource, 4 I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibcube/cubegraph.hpp"
#include "fibcube/errors.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/graph_io.hpp"
#include "fibcube/numsys.hpp"
#include "fibcube/verify.hpp"

namespace fc = fibcube;
namespace fv = fibcube::verify;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

int exit_code(fc::ErrorKind kind) {
  switch (kind) {
    case fc::ErrorKind::kFormula: return kExitMismatch;
    case fc::ErrorKind::kResource:
    case fc::ErrorKind::kOverflow: return kExitResource;
    case fc::ErrorKind::kIo: return kExitIo;
    default: return kExitUsage;
  }
}

std::string hint(fc::ErrorKind kind) {
  switch (kind) {
    case fc::ErrorKind::kValidity: return " (the word contains a forbidden factor)";
    case fc::ErrorKind::kResource: return " (raise --budget to allow larger graphs)";
    default: return "";
  }
}

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw fc::IoError("cannot open " + path + " for writing");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw fc::IoError("failed writing " + path_);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

struct CubeArgs {
  std::string family;
  int p = 1;
  int r = 1;
  int n = 0;

  fc::CubeParams params() const {
    fc::CubeParams cp{fc::parse_family(family), p, r, n};
    cp.validate();
    return cp;
  }
};

void add_cube(CLI::App* cmd, CubeArgs& a, const std::string& suffix = "") {
  cmd->add_option("family" + suffix, a.family, "Cube family, O or I")->required();
  cmd->add_option("p" + suffix, a.p, "Parameter p >= 1")->required();
  cmd->add_option("r" + suffix, a.r, "Parameter r >= 1")->required();
  cmd->add_option("n" + suffix, a.n, "Codeword length")->required();
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  CubeArgs cube;
  std::string format = "edgelist";
  std::string out;
  std::size_t budget = 20'000;
};

int run_gen(const GenArgs& a) {
  const auto g = fc::build_graph(a.cube.params(), a.budget);
  Sink sink(a.out);
  if (a.format == "edgelist") {
    fc::write_edgelist(sink.stream(), g);
  } else if (a.format == "dot") {
    fc::write_dot(sink.stream(), g);
  } else if (a.format == "json") {
    fc::write_json(sink.stream(), g);
  } else {
    throw fc::UsageError("gen supports --format edgelist, dot or json");
  }
  sink.close();
  return 0;
}

// ---- table -----------------------------------------------------------------

struct PhiArgs {
  std::string p = "1";
  std::string r = "1";
  int i_max = 12;
  std::string format = "table";
  std::string out;
};

int run_table_phi(const PhiArgs& a) {
  const fv::Range pr = fv::parse_range(a.p);
  const fv::Range rr = fv::parse_range(a.r);
  if (pr.lo < 1 || rr.lo < 1 || a.i_max < 0) {
    throw fc::UsageError("phi needs p, r >= 1 and --i-max >= 0");
  }
  const auto format = fv::parse_report_format(a.format);
  Sink sink(a.out);
  std::ostream& os = sink.stream();
  fv::Json rows = fv::Json::array();
  if (format == fv::ReportFormat::kCsv) os << "p,r,i,value\n";
  for (int p = pr.lo; p <= pr.hi; ++p) {
    for (int r = rr.lo; r <= rr.hi; ++r) {
      if (format == fv::ReportFormat::kTable) os << '(' << p << ',' << r << ')';
      for (int i = 0; i <= a.i_max; ++i) {
        const std::uint64_t v = fc::phi(p, r, i);
        switch (format) {
          case fv::ReportFormat::kTable: os << ' ' << v; break;
          case fv::ReportFormat::kCsv:
            os << p << ',' << r << ',' << i << ',' << v << '\n';
            break;
          case fv::ReportFormat::kJson:
            rows.push_back({{"p", p}, {"r", r}, {"i", i}, {"value", v}});
            break;
        }
      }
      if (format == fv::ReportFormat::kTable) os << '\n';
    }
  }
  if (format == fv::ReportFormat::kJson) os << rows.dump(1) << '\n';
  sink.close();
  return 0;
}

struct InvArgs {
  std::string family;
  int p = 1;
  int r = 1;
  std::string n = "1..8";
  std::string format = "table";
  std::string out;
  std::size_t budget = 20'000;
};

struct InvRow {
  std::string name;
  fv::Json formula;
  fv::Json oracle;
};

std::vector<InvRow> invariant_rows(const fc::CubeParams& cp, std::size_t budget) {
  std::optional<fc::InvariantBundle> b;
  try {
    b = fc::invariants(fc::build_graph(cp, budget));
  } catch (const fc::ResourceError&) {
  }
  auto oracle = [&](auto get) -> fv::Json { return b ? fv::Json(get(*b)) : fv::Json(); };
  const auto [family, p, r, n] = cp;
  std::vector<InvRow> rows;
  rows.push_back({"order", fc::count_vertices(cp), oracle([](auto& x) { return x.order; })});
  rows.push_back({"size", nullptr, oracle([](auto& x) { return x.size; })});

  fv::Json radius;
  fv::Json center_count;
  if (family == fc::Family::O) {
    radius = fc::radius_O(p, r, n);
    try {
      center_count = fc::center_O(p, r, n).count;
    } catch (const fc::Error&) {
    }
  }
  rows.push_back({"radius", radius, oracle([](auto& x) { return x.radius; })});

  fv::Json diameter;
  if (family == fc::Family::O) {
    diameter = fc::diameter_O(p, r, n);
  } else {
    const auto d = fc::diameter_I(p, r, n);
    if (d.kind == fc::DiameterResult::Kind::kExact) {
      diameter = d.value;
    } else {
      diameter = {{"lower", d.lower_printed}, {"upper", d.upper}};
    }
  }
  rows.push_back({"diameter", diameter, oracle([](auto& x) { return x.diameter; })});
  rows.push_back({"min_degree", n >= 1 ? fv::Json(fc::min_degree(family, p, r, n)) : fv::Json(),
                  oracle([](auto& x) { return x.min_degree; })});
  rows.push_back({"max_degree", n >= 2 ? fv::Json(fc::max_degree(family, p, r, n).delta) : fv::Json(n),
                  oracle([](auto& x) { return x.max_degree; })});
  rows.push_back({"center_count", center_count,
                  oracle([](auto& x) { return x.center.size(); })});
  return rows;
}

std::string table_cell(const fv::Json& formula, const fv::Json& oracle) {
  auto str = [](const fv::Json& j) { return j.is_null() ? std::string("-") : j.dump(); };
  if (formula.is_object()) {
    const std::string bracket = "[" + formula["lower"].dump() + "," + formula["upper"].dump() + "]";
    return (oracle.is_null() ? std::string("?") : oracle.dump()) + " ∈ " + bracket;
  }
  if (formula.is_null()) return str(oracle);
  if (oracle.is_null() || formula == oracle) return formula.dump();
  return formula.dump() + "/" + oracle.dump() + "!";
}

int run_table_invariants(const InvArgs& a) {
  const fc::Family family = fc::parse_family(a.family);
  const fv::Range nr = fv::parse_range(a.n);
  const auto format = fv::parse_report_format(a.format);
  Sink sink(a.out);
  std::ostream& os = sink.stream();
  fv::Json json_rows = fv::Json::array();
  bool header = false;
  for (int n = std::max(1, nr.lo); n <= nr.hi; ++n) {
    fc::CubeParams cp{family, a.p, a.r, n};
    cp.validate();
    const auto rows = invariant_rows(cp, a.budget);
    switch (format) {
      case fv::ReportFormat::kTable: {
        if (!header) {
          os << std::left << std::setw(4) << "n";
          for (const auto& row : rows) os << "  " << std::setw(14) << row.name;
          os << '\n';
          header = true;
        }
        os << std::left << std::setw(4) << n;
        for (const auto& row : rows) {
          const std::string cell = table_cell(row.formula, row.oracle);
          // setw counts bytes; the element sign takes three.
          const int extra = cell.find("∈") != std::string::npos ? 2 : 0;
          os << "  " << std::setw(14 + extra) << cell;
        }
        os << '\n';
        break;
      }
      case fv::ReportFormat::kCsv:
        if (!header) {
          os << "family,p,r,n,name,formula,oracle\n";
          header = true;
        }
        for (const auto& row : rows) {
          auto cell = [](const fv::Json& j) {
            if (j.is_null()) return std::string();
            if (j.is_object()) return "[" + j["lower"].dump() + ";" + j["upper"].dump() + "]";
            return j.dump();
          };
          os << fc::to_string(family) << ',' << a.p << ',' << a.r << ',' << n << ','
             << row.name << ',' << cell(row.formula) << ',' << cell(row.oracle) << '\n';
        }
        break;
      case fv::ReportFormat::kJson:
        for (const auto& row : rows) {
          json_rows.push_back({{"family", std::string(fc::to_string(family))},
                               {"p", a.p},
                               {"r", a.r},
                               {"n", n},
                               {"name", row.name},
                               {"formula", row.formula},
                               {"oracle", row.oracle}});
        }
        break;
    }
  }
  if (format == fv::ReportFormat::kJson) os << json_rows.dump(1) << '\n';
  sink.close();
  return 0;
}

// ---- verify / probe --------------------------------------------------------

struct GridArgs {
  bool all = false;
  std::vector<std::string> claims;
  std::vector<std::string> families;
  std::string p;
  std::string r;
  std::string n;
  std::size_t budget = 20'000;
  std::string cache;
  std::string format = "table";
  std::string out;
  bool no_timing = false;
  unsigned threads = 0;
};

void add_grid_flags(CLI::App* cmd, GridArgs& a) {
  cmd->add_option("--families,--family", a.families, "Families to cover (O, I or O,I)");
  cmd->add_option("--p", a.p, "Range of p, N or LO..HI");
  cmd->add_option("--r", a.r, "Range of r, N or LO..HI");
  cmd->add_option("--n", a.n, "Range of codeword lengths, N or LO..HI");
  cmd->add_option("--budget", a.budget, "Largest graph order to build")->capture_default_str();
  cmd->add_option("--cache", a.cache, "NDJSON result cache (default: $FIBCUBE_CACHE)");
  cmd->add_option("--format", a.format, "table, csv or json")->capture_default_str();
  cmd->add_option("--out", a.out, "Write the report here instead of stdout");
  cmd->add_flag("--no-timing", a.no_timing, "Omit runtime fields");
  cmd->add_option("--threads", a.threads, "Worker threads (0: all cores)");
}

fv::GridSpec grid_spec(const GridArgs& a, fv::GridSpec spec) {
  if (!a.families.empty()) {
    spec.families.clear();
    for (const auto& f : split_list(a.families)) spec.families.push_back(fc::parse_family(f));
  }
  if (!a.p.empty()) spec.p = fv::parse_range(a.p);
  if (!a.r.empty()) spec.r = fv::parse_range(a.r);
  if (!a.n.empty()) spec.n = fv::parse_range(a.n);
  spec.vertex_budget = a.budget;
  return spec;
}

template <class Run>
int run_report(const GridArgs& a, Run run, bool probe) {
  const auto format = fv::parse_report_format(a.format);
  std::optional<fv::Cache> cache;
  if (!a.cache.empty()) {
    cache.emplace(a.cache);
  } else if (auto env = fv::Cache::path_from_env()) {
    cache.emplace(*env);
  }
  fv::RunOptions options;
  options.cache = cache ? &*cache : nullptr;
  options.threads = a.threads;
  const fv::GridReport report = run(options);
  Sink sink(a.out);
  fv::write_report(sink.stream(), report, format, !a.no_timing);
  sink.close();
  return !probe && report.failed() ? kExitMismatch : 0;
}

int run_verify(const GridArgs& a) {
  fv::GridSpec spec = grid_spec(a, {});
  if (!a.all) spec.claims = split_list(a.claims);
  if (!a.all && spec.claims.empty()) {
    throw fc::UsageError("verify needs --all or --claim ID");
  }
  for (const auto& id : spec.claims) fv::find_claim(id);
  return run_report(a, [&](const fv::RunOptions& o) { return fv::run_grid(spec, o); }, false);
}

int run_probe(const std::string& which, const GridArgs& a) {
  if (which == "connectivity") {
    fv::GridSpec defaults;
    defaults.vertex_budget = 5'000;
    const auto spec = grid_spec(a, defaults);
    return run_report(
        a, [&](const fv::RunOptions& o) { return fv::probe_connectivity_conjecture(spec, o); },
        true);
  }
  if (which == "i-radius") {
    fv::GridSpec defaults;
    defaults.families = {fc::Family::I};
    defaults.p = {2, 4};
    defaults.r = {2, 4};
    defaults.n = {1, 14};
    const auto spec = grid_spec(a, defaults);
    return run_report(
        a, [&](const fv::RunOptions& o) { return fv::probe_I_radius_claim(spec, o); }, true);
  }
  throw fc::UsageError("unknown probe '" + which + "' (expected connectivity or i-radius)");
}

// ---- encode / decode / iso -------------------------------------------------

fc::CubeParams o_params(const CubeArgs& a, const char* what) {
  const auto cp = a.params();
  if (cp.family != fc::Family::O) {
    throw fc::UsageError(std::string(what) + " is defined for family O only");
  }
  return cp;
}

int run_encode(const CubeArgs& a, std::uint64_t k) {
  const auto cp = o_params(a, "encode");
  const std::uint64_t count = fc::count_vertices(cp);
  if (k >= count) {
    throw fc::RangeError("encode " + cp.str() + ": " + std::to_string(k) +
                         " is out of range (max is " + std::to_string(count - 1) + ")");
  }
  std::cout << fc::encode(cp, k).str() << '\n';
  return 0;
}

int run_decode(const CubeArgs& a, const std::string& text) {
  const auto cp = o_params(a, "decode");
  const fc::Word w = fc::Word::parse(text);
  if (w.length() != cp.n) {
    throw fc::ContractError("decode " + cp.str() + ": word '" + text + "' has length " +
                            std::to_string(w.length()) + ", expected " + std::to_string(cp.n));
  }
  std::cout << fc::decode(cp, w) << '\n';
  return 0;
}

int run_iso(const CubeArgs& a, const CubeArgs& b, std::size_t budget) {
  const auto g1 = fc::build_graph(a.params(), budget);
  const auto g2 = fc::build_graph(b.params(), budget);
  if (g1.order() != g2.order() || g1.size() != g2.size()) {
    std::cout << "not-isomorphic (order/size " << g1.order() << '/' << g1.size() << " vs "
              << g2.order() << '/' << g2.size() << ")\n";
    return 0;
  }
  const auto map = fc::find_isomorphism(g1, g2, budget);
  if (!map) {
    std::cout << "not-isomorphic\n";
    return 0;
  }
  std::cout << "isomorphic\n";
  auto label = [](const fc::Word& w) { return w.empty() ? std::string("λ") : w.str(); };
  for (fc::Rank v = 0; v < g1.order(); ++v) {
    std::cout << label(g1.word(v)) << " -> " << label(g2.word((*map)[v])) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci (p,r)-cubes: generation, invariants and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fv::kCodeVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Export a cube graph");
  add_cube(gen_cmd, gen.cube);
  gen_cmd->add_option("--format", gen.format, "edgelist, dot or json")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  gen_cmd->add_option("--budget", gen.budget, "Largest graph order to build")->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "Print phi or invariant tables");
  table_cmd->require_subcommand(1);
  PhiArgs phi;
  auto* phi_cmd = table_cmd->add_subcommand("phi", "Fibonacci (p,r)-numbers phi(0..i-max)");
  phi_cmd->add_option("--p", phi.p, "p, N or LO..HI")->capture_default_str();
  phi_cmd->add_option("--r", phi.r, "r, N or LO..HI")->capture_default_str();
  phi_cmd->add_option("--i-max", phi.i_max, "Last index")->capture_default_str();
  phi_cmd->add_option("--format", phi.format, "table, csv or json")->capture_default_str();
  phi_cmd->add_option("--out", phi.out, "Output file");
  InvArgs inv;
  auto* inv_cmd = table_cmd->add_subcommand("invariants", "Formula and oracle invariants per n");
  inv_cmd->add_option("family", inv.family, "O or I")->required();
  inv_cmd->add_option("p", inv.p, "Parameter p")->required();
  inv_cmd->add_option("r", inv.r, "Parameter r")->required();
  inv_cmd->add_option("--n", inv.n, "Codeword lengths, N or LO..HI")->capture_default_str();
  inv_cmd->add_option("--format", inv.format, "table, csv or json")->capture_default_str();
  inv_cmd->add_option("--out", inv.out, "Output file");
  inv_cmd->add_option("--budget", inv.budget, "Largest graph order to build")->capture_default_str();

  GridArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check claims against brute force over a grid");
  verify_cmd->add_flag("--all", verify.all, "Every registered claim");
  verify_cmd->add_option("--claim,--claims", verify.claims, "Claim ids (comma separated)");
  add_grid_flags(verify_cmd, verify);
  bool list_claims = false;
  verify_cmd->add_flag("--list", list_claims, "List claim ids and exit");

  GridArgs probe;
  std::string probe_which;
  auto* probe_cmd = app.add_subcommand("probe", "Run an open-question probe (never fails)");
  probe_cmd->add_option("which", probe_which, "connectivity or i-radius")->required();
  add_grid_flags(probe_cmd, probe);

  CubeArgs enc;
  std::uint64_t enc_value = 0;
  auto* enc_cmd = app.add_subcommand("encode", "Integer to O-codeword");
  add_cube(enc_cmd, enc);
  enc_cmd->add_option("value", enc_value, "Integer to encode")->required();

  CubeArgs dec;
  std::string dec_word;
  auto* dec_cmd = app.add_subcommand("decode", "O-codeword to integer");
  add_cube(dec_cmd, dec);
  dec_cmd->add_option("word", dec_word, "Codeword of length n")->required();

  CubeArgs iso_a;
  CubeArgs iso_b;
  std::size_t iso_budget = fc::kDefaultIsoBudget;
  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two cubes");
  add_cube(iso_cmd, iso_a, "_a");
  add_cube(iso_cmd, iso_b, "_b");
  iso_cmd->add_option("--budget", iso_budget, "Largest order searched")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*phi_cmd) return run_table_phi(phi);
    if (*inv_cmd) return run_table_invariants(inv);
    if (*verify_cmd) {
      if (list_claims) {
        for (const auto& c : fv::registered_claims()) {
          std::cout << c.id << '\t' << fv::to_string(c.kind) << '\t' << c.statement << '\n';
        }
        return 0;
      }
      return run_verify(verify);
    }
    if (*probe_cmd) return run_probe(probe_which, probe);
    if (*enc_cmd) return run_encode(enc, enc_value);
    if (*dec_cmd) return run_decode(dec, dec_word);
    if (*iso_cmd) return run_iso(iso_a, iso_b, iso_budget);
  } catch (const fc::Error& e) {
    std::cerr << "fibcube: " << e.what() << hint(e.kind()) << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fibcube: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
