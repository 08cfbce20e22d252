// Vertex connectivity by unit-capacity max-flow on the vertex-split network.

#include <algorithm>
#include <bit>

#include "fibcube/cubegraph.hpp"
#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

// Node 2v is the entry copy of vertex v, node 2v+1 its exit copy. The arc
// entry(v) -> exit(v) carries capacity 1, so a flow decomposes into
// internally vertex-disjoint paths.
class SplitNetwork {
 public:
  explicit SplitNetwork(const CubeGraph& g) : g_(g) {
    const std::size_t nodes = 2 * g.order();
    std::vector<std::size_t> count(nodes + 1, 0);
    for (Rank v = 0; v < g.order(); ++v) {
      const auto d = static_cast<std::size_t>(g.degree(v));
      count[2 * v] += 1 + d;
      count[2 * v + 1] += 1 + d;
    }
    first_.assign(nodes + 1, 0);
    for (std::size_t i = 0; i < nodes; ++i) first_[i + 1] = first_[i] + count[i];
    head_.resize(first_.back());
    rev_.resize(first_.back());
    cap_.assign(first_.back(), 0);

    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    auto add_arc = [&](std::size_t from, std::size_t to) {
      const std::size_t a = fill[from]++;
      const std::size_t b = fill[to]++;
      head_[a] = static_cast<Rank>(to);
      head_[b] = static_cast<Rank>(from);
      rev_[a] = b;
      rev_[b] = a;
      cap_[a] = 1;
    };
    for (Rank v = 0; v < g.order(); ++v) {
      add_arc(2 * v, 2 * v + 1);
      for (Rank w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w);
    }
    original_ = cap_;
    stamp_.assign(nodes, 0);
    parent_.assign(nodes, 0);
  }

  int max_flow(Rank s, Rank t, int limit) {
    for (std::size_t a : touched_) cap_[a] = original_[a];
    touched_.clear();
    int flow = 0;
    while (flow < limit && augment(2 * s + 1, 2 * t, g_.word(t).bits())) ++flow;
    return flow;
  }

 private:
  struct Frame {
    Rank node;
    int pass;
    std::size_t pos;
  };

  int remaining(Rank node, std::uint64_t target) const {
    return std::popcount(g_.word(node / 2).bits() ^ target);
  }

  // Depth-first search for an augmenting path, trying arcs that move closer
  // (in Hamming distance) to the sink's word before all others.
  bool augment(Rank source, Rank sink, std::uint64_t target) {
    ++epoch_;
    stamp_[source] = epoch_;
    stack_.clear();
    stack_.push_back({source, 0, first_[source]});
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const int here = remaining(f.node, target);
      bool advanced = false;
      while (f.pass < 2 && !advanced) {
        if (f.pos == first_[f.node + 1]) {
          ++f.pass;
          f.pos = first_[f.node];
          continue;
        }
        const std::size_t arc = f.pos++;
        if (cap_[arc] == 0) continue;
        const Rank next = head_[arc];
        if (stamp_[next] == epoch_) continue;
        const bool internal = next / 2 == f.node / 2;
        const bool closer = internal || remaining(next, target) < here;
        if (closer != (f.pass == 0)) continue;
        stamp_[next] = epoch_;
        parent_[next] = arc;
        if (next == sink) {
          for (Rank node = sink; node != source;) {
            const std::size_t a = parent_[node];
            --cap_[a];
            ++cap_[rev_[a]];
            touched_.push_back(a);
            touched_.push_back(rev_[a]);
            node = head_[rev_[a]];
          }
          return true;
        }
        stack_.push_back({next, 0, first_[next]});
        advanced = true;
      }
      if (!advanced) stack_.pop_back();
    }
    return false;
  }

  const CubeGraph& g_;
  std::vector<std::size_t> first_;
  std::vector<Rank> head_;
  std::vector<std::size_t> rev_;
  std::vector<std::int8_t> cap_;
  std::vector<std::int8_t> original_;
  std::vector<std::size_t> touched_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::size_t> parent_;
  std::vector<Frame> stack_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

int local_connectivity(const CubeGraph& g, Rank s, Rank t, int limit) {
  if (s == t || g.adjacent(s, t)) {
    throw ContractError("local connectivity needs distinct non-adjacent ends");
  }
  SplitNetwork net(g);
  return net.max_flow(s, t, limit);
}

// Esfahanian-Hakimi: with v of minimum degree, every minimum cut either
// misses v (separating v from some non-neighbor) or contains v, in which case
// it separates two non-adjacent neighbors of v.
int vertex_connectivity(const CubeGraph& g) {
  const std::size_t order = g.order();
  if (order <= 1) return 0;
  if (g.size() == order * (order - 1) / 2) return static_cast<int>(order - 1);

  Rank v = 0;
  for (Rank u = 1; u < order; ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  int best = g.degree(v);
  SplitNetwork net(g);
  for (Rank w = 0; w < order && best > 0; ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::min(best, net.max_flow(v, w, best));
  }
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < nb.size() && best > 0; ++j) {
      if (g.adjacent(nb[i], nb[j])) continue;
      best = std::min(best, net.max_flow(nb[i], nb[j], best));
    }
  }
  return best;
}

}  // namespace fibcube
