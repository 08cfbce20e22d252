// Exact isomorphism test for small graphs: joint colour refinement seeded
// with (degree, eccentricity), then backtracking along a BFS order.

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "fibcube/cubegraph.hpp"
#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

constexpr Rank kUnmapped = std::numeric_limits<Rank>::max();
constexpr std::uint64_t kStepBudget = 50'000'000;

// Refines colours of both graphs together so equal colours mean equal
// refinement history. Returns false as soon as the colour histograms differ.
bool refine(const CubeGraph& g1, const CubeGraph& g2,
            std::vector<std::uint32_t>& c1, std::vector<std::uint32_t>& c2) {
  const std::size_t n = g1.order();
  const auto e1 = eccentricities(g1);
  const auto e2 = eccentricities(g2);
  using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;

  auto relabel = [&](const std::vector<Key>& k1, const std::vector<Key>& k2,
                     std::size_t& classes) {
    std::map<Key, std::uint32_t> ids;
    for (const auto& k : k1) ids.emplace(k, 0);
    for (const auto& k : k2) ids.emplace(k, 0);
    std::uint32_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    classes = ids.size();
    std::vector<std::size_t> hist1(classes, 0);
    std::vector<std::size_t> hist2(classes, 0);
    for (std::size_t v = 0; v < n; ++v) {
      c1[v] = ids[k1[v]];
      c2[v] = ids[k2[v]];
      ++hist1[c1[v]];
      ++hist2[c2[v]];
    }
    return hist1 == hist2;
  };

  std::vector<Key> k1(n);
  std::vector<Key> k2(n);
  for (Rank v = 0; v < n; ++v) {
    k1[v] = {static_cast<std::uint32_t>(g1.degree(v)),
             {static_cast<std::uint32_t>(e1[v])}};
    k2[v] = {static_cast<std::uint32_t>(g2.degree(v)),
             {static_cast<std::uint32_t>(e2[v])}};
  }
  c1.assign(n, 0);
  c2.assign(n, 0);
  std::size_t classes = 0;
  if (!relabel(k1, k2, classes)) return false;

  for (;;) {
    for (Rank v = 0; v < n; ++v) {
      k1[v].first = c1[v];
      k1[v].second.clear();
      for (Rank u : g1.neighbors(v)) k1[v].second.push_back(c1[u]);
      std::sort(k1[v].second.begin(), k1[v].second.end());
      k2[v].first = c2[v];
      k2[v].second.clear();
      for (Rank u : g2.neighbors(v)) k2[v].second.push_back(c2[u]);
      std::sort(k2[v].second.begin(), k2[v].second.end());
    }
    std::size_t refined = 0;
    if (!relabel(k1, k2, refined)) return false;
    if (refined == classes) return true;
    classes = refined;
  }
}

}  // namespace

std::optional<std::vector<Rank>> find_isomorphism(const CubeGraph& g1,
                                                  const CubeGraph& g2,
                                                  std::size_t max_order) {
  if (g1.order() > max_order || g2.order() > max_order) {
    std::ostringstream os;
    os << "isomorphism test on graphs of order " << g1.order() << " and "
       << g2.order() << " exceeds the budget of " << max_order;
    throw ResourceError(os.str());
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  const std::size_t n = g1.order();
  if (n == 0) return std::vector<Rank>{};

  std::vector<std::uint32_t> c1;
  std::vector<std::uint32_t> c2;
  if (!refine(g1, g2, c1, c2)) return std::nullopt;

  // Class sizes pick the start vertex: the rarest colour first.
  std::map<std::uint32_t, std::size_t> class_size;
  for (auto c : c1) ++class_size[c];

  std::vector<Rank> order;
  std::vector<Rank> parent(n, kUnmapped);
  std::vector<char> queued(n, 0);
  order.reserve(n);
  while (order.size() < n) {
    Rank start = kUnmapped;
    for (Rank v = 0; v < n; ++v) {
      if (queued[v]) continue;
      if (start == kUnmapped || class_size[c1[v]] < class_size[c1[start]]) {
        start = v;
      }
    }
    queued[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    for (; head < order.size(); ++head) {
      for (Rank w : g1.neighbors(order[head])) {
        if (!queued[w]) {
          queued[w] = 1;
          parent[w] = order[head];
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Rank> forward(n, kUnmapped);
  std::vector<Rank> backward(n, kUnmapped);
  std::vector<std::vector<Rank>> candidates(n);
  std::vector<std::size_t> cursor(n, 0);
  std::uint64_t steps = 0;

  auto fill_candidates = [&](std::size_t level) {
    const Rank v = order[level];
    auto& out = candidates[level];
    out.clear();
    if (parent[v] != kUnmapped) {
      for (Rank w : g2.neighbors(forward[parent[v]])) {
        if (backward[w] == kUnmapped && c2[w] == c1[v]) out.push_back(w);
      }
    } else {
      for (Rank w = 0; w < n; ++w) {
        if (backward[w] == kUnmapped && c2[w] == c1[v]) out.push_back(w);
      }
    }
    cursor[level] = 0;
  };

  auto consistent = [&](Rank v, Rank w) {
    int mapped1 = 0;
    for (Rank u : g1.neighbors(v)) {
      if (forward[u] == kUnmapped) continue;
      ++mapped1;
      if (!g2.adjacent(forward[u], w)) return false;
    }
    int mapped2 = 0;
    for (Rank x : g2.neighbors(w)) {
      if (backward[x] != kUnmapped) ++mapped2;
    }
    return mapped1 == mapped2;
  };

  std::size_t level = 0;
  fill_candidates(0);
  for (;;) {
    const Rank v = order[level];
    if (forward[v] != kUnmapped) {
      backward[forward[v]] = kUnmapped;
      forward[v] = kUnmapped;
    }
    bool placed = false;
    while (cursor[level] < candidates[level].size()) {
      const Rank w = candidates[level][cursor[level]++];
      if (++steps > kStepBudget) {
        throw ResourceError("isomorphism search exceeded its step budget");
      }
      if (backward[w] != kUnmapped || !consistent(v, w)) continue;
      forward[v] = w;
      backward[w] = v;
      placed = true;
      break;
    }
    if (placed) {
      if (level + 1 == n) return forward;
      fill_candidates(++level);
      continue;
    }
    if (level == 0) return std::nullopt;
    --level;
  }
}

bool are_isomorphic(const CubeGraph& g1, const CubeGraph& g2,
                    std::size_t max_order) {
  return find_isomorphism(g1, g2, max_order).has_value();
}

}  // namespace fibcube
