#pragma once

// Text exports of a cube graph. All formats list vertices by rank and edges
// as (u, v) with u < v in lexicographic order, so output is byte-stable.

#include <iosfwd>
#include <utility>
#include <vector>

#include "fibcube/cubegraph.hpp"

namespace fibcube {

// Header "order size", then one "u v" line per edge.
void write_edgelist(std::ostream& os, const CubeGraph& g);
// Undirected DOT; nodes are ranks labelled by their words.
void write_dot(std::ostream& os, const CubeGraph& g);
// {"params":..., "vertices":[words], "edges":[[u,v],...]}
void write_json(std::ostream& os, const CubeGraph& g);

// Reads the edge-list format back (vertex labels are not part of it).
struct EdgeList {
  std::size_t order = 0;
  std::vector<std::pair<Rank, Rank>> edges;
};
EdgeList read_edgelist(std::istream& is);

}  // namespace fibcube
