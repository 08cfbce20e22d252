#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fibcube/cubegraph.hpp"
#include "fibcube/errors.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/numsys.hpp"
#include "fibcube/verify.hpp"

namespace py = pybind11;
namespace fc = fibcube;
namespace fv = fibcube::verify;

namespace {

py::object to_python(const fv::Json& j) {
  switch (j.type()) {
    case fv::Json::value_t::null: return py::none();
    case fv::Json::value_t::boolean: return py::bool_(j.get<bool>());
    case fv::Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case fv::Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case fv::Json::value_t::number_float: return py::float_(j.get<double>());
    case fv::Json::value_t::string: return py::str(j.get<std::string>());
    case fv::Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return out;
    }
    case fv::Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

fc::CubeParams cube(const std::string& family, int p, int r, int n) {
  fc::CubeParams cp{fc::parse_family(family), p, r, n};
  cp.validate();
  return cp;
}

std::vector<std::string> words(const std::vector<fc::Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

py::dict invariants(const std::string& family, int p, int r, int n, std::size_t budget,
                    bool connectivity) {
  const auto b = fc::invariants(fc::build_graph(cube(family, p, r, n), budget), connectivity);
  py::dict d;
  d["order"] = b.order;
  d["size"] = b.size;
  d["radius"] = b.radius;
  d["diameter"] = b.diameter;
  d["center"] = words(b.center);
  d["min_degree"] = b.min_degree;
  d["max_degree"] = b.max_degree;
  d["degree_sequence"] = b.degree_sequence;
  if (b.connectivity) d["connectivity"] = *b.connectivity;
  return d;
}

py::dict diameter_I(int p, int r, int n) {
  const auto d = fc::diameter_I(p, r, n);
  py::dict out;
  out["case"] = std::string(fc::to_string(d.which));
  if (d.kind == fc::DiameterResult::Kind::kExact) {
    out["kind"] = "exact";
    out["value"] = d.value;
  } else {
    out["kind"] = "bounds";
    out["lower"] = d.lower_printed;
    out["upper"] = d.upper;
    out["barrier"] = d.barrier->str();
  }
  return out;
}

fv::Range range(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return fv::parse_range(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) {
    const int v = obj.cast<int>();
    return {v, v};
  }
  const auto pair = obj.cast<std::pair<int, int>>();
  return {pair.first, pair.second};
}

py::object run_grid(const std::vector<std::string>& claims, const std::string& families,
                    const py::object& p, const py::object& r, const py::object& n,
                    std::size_t budget, const std::optional<std::string>& cache_path) {
  fv::GridSpec spec;
  spec.claims = claims;
  spec.families.clear();
  for (char f : families) spec.families.push_back(fc::parse_family(std::string(1, f)));
  spec.p = range(p);
  spec.r = range(r);
  spec.n = range(n);
  spec.vertex_budget = budget;
  std::optional<fv::Cache> cache;
  if (cache_path) cache.emplace(*cache_path);
  fv::RunOptions options;
  options.cache = cache ? &*cache : nullptr;
  fv::GridReport report;
  {
    py::gil_scoped_release release;
    report = fv::run_grid(spec, options);
  }
  std::ostringstream os;
  fv::write_report(os, report, fv::ReportFormat::kJson, false);
  return to_python(fv::Json::parse(os.str()));
}

}  // namespace

PYBIND11_MODULE(_fibcube, m) {
  m.doc() = "Fibonacci (p,r)-cubes: construction, invariant formulas and verification";
  m.attr("__version__") = std::string(fv::kCodeVersion);

  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const fc::Error& err) {
      switch (err.kind()) {
        case fc::ErrorKind::kOverflow: PyErr_SetString(PyExc_OverflowError, err.what()); return;
        case fc::ErrorKind::kIo: PyErr_SetString(PyExc_OSError, err.what()); return;
        case fc::ErrorKind::kResource:
        case fc::ErrorKind::kFormula: PyErr_SetString(PyExc_RuntimeError, err.what()); return;
        default: PyErr_SetString(PyExc_ValueError, err.what()); return;
      }
    }
  });

  m.def("phi", &fc::phi, py::arg("p"), py::arg("r"), py::arg("i"));
  m.def("is_valid_word", [](const std::string& family, int p, int r, const std::string& w) {
    return fc::is_valid_code(fc::parse_family(family), p, r, fc::Word::parse(w));
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("word"));
  m.def("count_vertices", [](const std::string& family, int p, int r, int n) {
    return fc::count_vertices(cube(family, p, r, n));
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("vertices", [](const std::string& family, int p, int r, int n) {
    return words(fc::enumerate_vertices(cube(family, p, r, n)));
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("encode", [](int p, int r, int n, std::uint64_t k) {
    return fc::encode(cube("O", p, r, n), k).str();
  }, py::arg("p"), py::arg("r"), py::arg("n"), py::arg("k"));
  m.def("decode", [](int p, int r, int n, const std::string& w) {
    return fc::decode(cube("O", p, r, n), fc::Word::parse(w));
  }, py::arg("p"), py::arg("r"), py::arg("n"), py::arg("word"));

  m.def("edges", [](const std::string& family, int p, int r, int n, std::size_t budget) {
    const auto g = fc::build_graph(cube(family, p, r, n), budget);
    std::vector<std::pair<fc::Rank, fc::Rank>> out;
    for (fc::Rank u = 0; u < g.order(); ++u) {
      for (fc::Rank v : g.neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"), py::arg("budget") = 20'000);
  m.def("invariants", &invariants, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"),
        py::arg("budget") = 20'000, py::arg("connectivity") = false);
  m.def("distance", [](const std::string& family, int p, int r, const std::string& u,
                       const std::string& v) {
    const fc::Word a = fc::Word::parse(u);
    const auto g = fc::build_graph(cube(family, p, r, a.length()));
    return fc::distance(g, a, fc::Word::parse(v));
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("u"), py::arg("v"));
  m.def("are_isomorphic", [](const std::tuple<std::string, int, int, int>& a,
                             const std::tuple<std::string, int, int, int>& b) {
    const auto ga = fc::build_graph(std::apply(cube, a));
    const auto gb = fc::build_graph(std::apply(cube, b));
    return fc::are_isomorphic(ga, gb);
  }, py::arg("a"), py::arg("b"));

  m.def("radius_O", &fc::radius_O, py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("center_O", [](int p, int r, int n) {
    const auto z = fc::center_O(p, r, n);
    py::dict d;
    d["center"] = words(z.center);
    d["count"] = z.count;
    d["count_method"] = std::string(fc::to_string(z.count_method));
    return d;
  }, py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("diameter_O", &fc::diameter_O, py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("diameter_I", &diameter_I, py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("best_barrier", [](int p, int r) {
    const auto b = fc::best_barrier(p, r);
    py::dict d;
    d["c"] = b.c;
    d["r_prime"] = b.r_prime;
    d["s"] = b.s;
    d["profile"] = b.str();
    return d;
  }, py::arg("p"), py::arg("r"));
  m.def("max_degree", [](const std::string& family, int p, int r, int n) {
    const auto d = fc::max_degree(fc::parse_family(family), p, r, n);
    return std::make_pair(d.delta, d.unique_zero_witness);
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("min_degree", [](const std::string& family, int p, int r, int n) {
    return fc::min_degree(fc::parse_family(family), p, r, n);
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"));
  m.def("min_degree_witness", [](const std::string& family, int p, int r, int n) {
    return fc::min_degree_witness(fc::parse_family(family), p, r, n).str();
  }, py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"));

  m.def("claims", [] {
    py::list out;
    for (const auto& c : fv::registered_claims()) {
      py::dict d;
      d["id"] = c.id;
      d["kind"] = std::string(fv::to_string(c.kind));
      d["statement"] = c.statement;
      out.append(d);
    }
    return out;
  });
  m.def("run_claim", [](const std::string& claim_id, const std::optional<std::string>& family,
                        int p, int r, int n, std::size_t budget) {
    fv::ClaimPoint pt{std::nullopt, p, r, n};
    if (family) pt.family = fc::parse_family(*family);
    fv::ClaimCheck c;
    {
      py::gil_scoped_release release;
      c = fv::run_claim(claim_id, pt, budget);
    }
    return to_python(fv::to_json(c, false));
  }, py::arg("claim_id"), py::arg("family"), py::arg("p"), py::arg("r"), py::arg("n"),
     py::arg("budget") = 20'000);
  m.def("run_grid", &run_grid, py::arg("claims") = std::vector<std::string>{},
        py::arg("families") = "OI", py::arg("p") = py::make_tuple(1, 4),
        py::arg("r") = py::make_tuple(1, 4), py::arg("n") = py::make_tuple(1, 12),
        py::arg("budget") = 20'000, py::arg("cache") = py::none());
}
