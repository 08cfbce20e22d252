#include "fibcube/cubegraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

#include "fibcube/errors.hpp"

namespace fibcube {

CubeGraph CubeGraph::from_words(std::vector<Word> words, int length) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  CubeGraph g;
  g.length_ = length;
  g.keys_.reserve(words.size());
  for (const Word& w : words) {
    if (w.length() != length) {
      throw ContractError("word '" + w.str() + "' has length " +
                          std::to_string(w.length()) + ", expected " +
                          std::to_string(length));
    }
    g.keys_.push_back(w.bits());
  }
  g.vertices_ = std::move(words);

  g.offsets_.assign(1, 0);
  g.offsets_.reserve(g.vertices_.size() + 1);
  for (Rank v = 0; v < g.vertices_.size(); ++v) {
    const std::uint64_t key = g.keys_[v];
    const std::size_t first = g.neighbors_.size();
    for (int bit = 0; bit < length; ++bit) {
      const std::uint64_t other = key ^ (std::uint64_t{1} << bit);
      auto it = std::lower_bound(g.keys_.begin(), g.keys_.end(), other);
      if (it != g.keys_.end() && *it == other) {
        g.neighbors_.push_back(static_cast<Rank>(it - g.keys_.begin()));
      }
    }
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(first),
              g.neighbors_.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

std::optional<Rank> CubeGraph::rank_of(const Word& w) const {
  if (w.length() != length_) return std::nullopt;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), w.bits());
  if (it == keys_.end() || *it != w.bits()) return std::nullopt;
  return static_cast<Rank>(it - keys_.begin());
}

bool CubeGraph::adjacent(Rank u, Rank v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool CubeGraph::is_connected() const {
  if (vertices_.empty()) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

CubeGraph build_graph(const CubeParams& params, std::size_t vertex_budget) {
  params.validate();
  const std::uint64_t order = count_vertices(params);
  if (order > vertex_budget) {
    std::ostringstream os;
    os << params.str() << " has " << order
       << " vertices, above the vertex budget of " << vertex_budget;
    throw ResourceError(os.str());
  }
  CubeGraph g = CubeGraph::from_words(enumerate_vertices(params), params.n);
  g.params_ = params;
  if (!g.is_connected()) {
    // Every codeword reaches 0^n by clearing its 1s one at a time, so this
    // can only mean the enumeration is broken.
    throw ContractError("internal: " + params.str() + " is disconnected");
  }
  return g;
}

// ---------------------------------------------------------------- distances

std::vector<int> bfs_distances(const CubeGraph& g, Rank source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Rank> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Rank u = queue[head];
    for (Rank v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int distance(const CubeGraph& g, const Word& u, const Word& v) {
  const auto ru = g.rank_of(u);
  const auto rv = g.rank_of(v);
  if (!ru || !rv) {
    throw ContractError("distance query on a non-vertex ('" + u.str() +
                        "', '" + v.str() + "')");
  }
  return bfs_distances(g, *ru)[*rv];
}

std::vector<int> eccentricities(const CubeGraph& g) {
  const std::size_t order = g.order();
  std::vector<int> ecc(order, 0);
  std::vector<std::uint64_t> seen(order);
  std::vector<std::uint64_t> frontier(order);
  std::vector<std::uint64_t> next(order);

  for (std::size_t base = 0; base < order; base += 64) {
    const std::size_t width = std::min<std::size_t>(64, order - base);
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::size_t k = 0; k < width; ++k) {
      seen[base + k] = frontier[base + k] = std::uint64_t{1} << k;
    }
    for (int level = 1;; ++level) {
      std::uint64_t reached = 0;
      for (Rank v = 0; v < order; ++v) {
        std::uint64_t acc = 0;
        for (Rank u : g.neighbors(v)) acc |= frontier[u];
        acc &= ~seen[v];
        next[v] = acc;
        reached |= acc;
      }
      if (reached == 0) break;
      for (Rank v = 0; v < order; ++v) seen[v] |= next[v];
      while (reached != 0) {
        ecc[base + static_cast<std::size_t>(std::countr_zero(reached))] = level;
        reached &= reached - 1;
      }
      frontier.swap(next);
    }
  }
  return ecc;
}

InvariantBundle invariants(const CubeGraph& g, bool with_connectivity) {
  if (!g.is_connected()) {
    throw ContractError("invariants require a connected graph");
  }
  InvariantBundle b;
  b.order = g.order();
  b.size = g.size();
  const auto ecc = eccentricities(g);
  b.radius = *std::min_element(ecc.begin(), ecc.end());
  b.diameter = *std::max_element(ecc.begin(), ecc.end());
  for (Rank v = 0; v < g.order(); ++v) {
    if (ecc[v] == b.radius) b.center.push_back(g.word(v));
  }
  b.degree_sequence.reserve(g.order());
  for (Rank v = 0; v < g.order(); ++v) b.degree_sequence.push_back(g.degree(v));
  std::sort(b.degree_sequence.begin(), b.degree_sequence.end());
  b.min_degree = b.degree_sequence.front();
  b.max_degree = b.degree_sequence.back();
  for (Rank v = 0; v < g.order(); ++v) {
    if (g.degree(v) == b.max_degree) b.max_degree_witnesses.push_back(g.word(v));
  }
  if (b.diameter < b.radius || b.diameter > 2 * b.radius) {
    throw ContractError("internal: radius/diameter out of order");
  }
  if (with_connectivity) b.connectivity = vertex_connectivity(g);
  return b;
}

// ---------------------------------------------------------------- barriers

int DistanceBarrier::contribution() const {
  int sum = 0;
  int largest = 0;
  for (int a : ones) {
    sum += a;
    largest = std::max(largest, a);
  }
  return sum - 2 * largest;
}

namespace {

// Scans maximal 1-blocks of `full`; inside each, the first..last 1 of
// `split` forms a barrier when it contains at least one 0.
void scan_barriers(const Word& split, const Word& full, int split_index,
                   std::vector<DistanceBarrier>& out) {
  const int n = full.length();
  int pos = 0;
  while (pos < n) {
    if (!full.at(pos)) {
      ++pos;
      continue;
    }
    int block_end = pos;
    while (block_end < n && full.at(block_end)) ++block_end;

    int first = -1;
    int last = -1;
    for (int i = pos; i < block_end; ++i) {
      if (split.at(i)) {
        if (first < 0) first = i;
        last = i;
      }
    }
    if (first >= 0) {
      DistanceBarrier b;
      b.begin = first;
      b.end = last + 1;
      b.split_word = split_index;
      int i = first;
      while (i <= last) {
        const bool symbol = split.at(i);
        int j = i;
        while (j <= last && split.at(j) == symbol) ++j;
        (symbol ? b.ones : b.zeros).push_back(j - i);
        i = j;
      }
      if (!b.zeros.empty()) out.push_back(std::move(b));
    }
    pos = block_end;
  }
}

}  // namespace

std::vector<DistanceBarrier> find_distance_barriers(const Word& u,
                                                    const Word& v, int p,
                                                    int r) {
  if (u.length() != v.length()) {
    throw ContractError("barrier search on words of different lengths");
  }
  for (const Word* w : {&u, &v}) {
    if (!is_valid_code(Family::I, p, r, *w)) {
      std::ostringstream os;
      os << "'" << w->str() << "' is not an I-codeword for p=" << p
         << ", r=" << r;
      throw ValidityError(os.str());
    }
  }
  std::vector<DistanceBarrier> out;
  // With p = 1 a 0-block can be filled one symbol at a time, so nothing
  // forces a detour.
  if (p < 2) return out;
  scan_barriers(u, v, 0, out);
  scan_barriers(v, u, 1, out);
  std::sort(out.begin(), out.end(),
            [](const DistanceBarrier& a, const DistanceBarrier& b) {
              return std::tie(a.begin, a.split_word) <
                     std::tie(b.begin, b.split_word);
            });
  return out;
}

}  // namespace fibcube
