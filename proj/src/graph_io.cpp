#include "fibcube/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fibcube/errors.hpp"
#include "json.hpp"

namespace fibcube {

namespace {

template <typename Fn>
void for_each_edge(const CubeGraph& g, Fn&& fn) {
  for (Rank u = 0; u < g.order(); ++u) {
    for (Rank v : g.neighbors(u)) {
      if (u < v) fn(u, v);
    }
  }
}

std::string label(const Word& w) { return w.empty() ? "λ" : w.str(); }

}  // namespace

void write_edgelist(std::ostream& os, const CubeGraph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for_each_edge(g, [&](Rank u, Rank v) { os << u << ' ' << v << '\n'; });
}

void write_dot(std::ostream& os, const CubeGraph& g) {
  os << "graph ";
  if (g.params()) {
    const CubeParams& p = *g.params();
    os << '"' << to_string(p.family) << '_' << p.p << '_' << p.r << '_' << p.n
       << '"';
  } else {
    os << "cube";
  }
  os << " {\n";
  for (Rank v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << label(g.word(v)) << "\"];\n";
  }
  for_each_edge(g, [&](Rank u, Rank v) { os << "  " << u << " -- " << v << ";\n"; });
  os << "}\n";
}

void write_json(std::ostream& os, const CubeGraph& g) {
  nlohmann::ordered_json doc;
  if (g.params()) {
    const CubeParams& p = *g.params();
    doc["params"] = {{"family", std::string(to_string(p.family))},
                     {"p", p.p},
                     {"r", p.r},
                     {"n", p.n}};
  }
  doc["order"] = g.order();
  doc["size"] = g.size();
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (const Word& w : g.vertices()) vertices.push_back(w.str());
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for_each_edge(g, [&](Rank u, Rank v) { edges.push_back({u, v}); });
  os << doc.dump() << '\n';
}

EdgeList read_edgelist(std::istream& is) {
  EdgeList out;
  std::size_t size = 0;
  if (!(is >> out.order >> size)) {
    throw ContractError("edge list: missing 'order size' header");
  }
  out.edges.reserve(size);
  Rank u = 0;
  Rank v = 0;
  while (is >> u >> v) {
    if (u >= out.order || v >= out.order) {
      throw ContractError("edge list: rank out of range");
    }
    out.edges.emplace_back(u, v);
  }
  if (out.edges.size() != size) {
    std::ostringstream os;
    os << "edge list: header promises " << size << " edges, found "
       << out.edges.size();
    throw ContractError(os.str());
  }
  return out;
}

}  // namespace fibcube
