#pragma once

// Cube graphs as induced subgraphs of the hypercube, plus the exact
// brute-force invariants used as the verification oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fibcube/numsys.hpp"

namespace fibcube {

using Rank = std::uint32_t;

inline constexpr std::size_t kDefaultVertexBudget = 200'000;
inline constexpr std::size_t kDefaultIsoBudget = 5'000;

/// Immutable graph on a sorted set of equal-length words; two words are
/// adjacent iff they differ in exactly one position. Vertex ranks follow the
/// sorted word order. Neighbor lists are sorted ascending.
class CubeGraph {
 public:
  CubeGraph() = default;

  // Induced subgraph of Q_length on `words` (sorted and de-duplicated here).
  static CubeGraph from_words(std::vector<Word> words, int length);

  const std::optional<CubeParams>& params() const noexcept { return params_; }
  int word_length() const noexcept { return length_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return neighbors_.size() / 2; }

  const std::vector<Word>& vertices() const noexcept { return vertices_; }
  const Word& word(Rank v) const { return vertices_[v]; }
  std::span<const Rank> neighbors(Rank v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  int degree(Rank v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  std::optional<Rank> rank_of(const Word& w) const;
  bool adjacent(Rank u, Rank v) const;
  bool is_connected() const;

 private:
  friend CubeGraph build_graph(const CubeParams&, std::size_t);

  std::optional<CubeParams> params_;
  int length_ = 0;
  std::vector<Word> vertices_;
  std::vector<std::uint64_t> keys_;  // vertices_[i].bits(), for rank lookup
  std::vector<std::size_t> offsets_{0};
  std::vector<Rank> neighbors_;
};

// Throws ResourceError naming the exact order when it exceeds the budget.
CubeGraph build_graph(const CubeParams& params,
                      std::size_t vertex_budget = kDefaultVertexBudget);

// Single-source BFS; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const CubeGraph& g, Rank source);
// Throws ContractError when either word is not a vertex.
int distance(const CubeGraph& g, const Word& u, const Word& v);
// All-source eccentricities, 64 sources per sweep.
std::vector<int> eccentricities(const CubeGraph& g);

struct InvariantBundle {
  std::size_t order = 0;
  std::size_t size = 0;
  int radius = 0;
  int diameter = 0;
  std::vector<Word> center;
  std::vector<int> degree_sequence;  // ascending
  int min_degree = 0;
  int max_degree = 0;
  std::vector<Word> max_degree_witnesses;
  std::optional<int> connectivity;
};

InvariantBundle invariants(const CubeGraph& g, bool with_connectivity = false);

// Vertex connectivity (minimum vertex cut; order - 1 for complete graphs).
int vertex_connectivity(const CubeGraph& g);
// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`.
// s and t must be distinct and non-adjacent.
int local_connectivity(const CubeGraph& g, Rank s, Rank t, int limit);

// Exact isomorphism search. Returns the bijection g1 -> g2 (indexed by rank
// in g1) on success. Throws ResourceError above `max_order` vertices or when
// the search exceeds its internal step budget.
std::optional<std::vector<Rank>> find_isomorphism(
    const CubeGraph& g1, const CubeGraph& g2,
    std::size_t max_order = kDefaultIsoBudget);
bool are_isomorphic(const CubeGraph& g1, const CubeGraph& g2,
                    std::size_t max_order = kDefaultIsoBudget);

/// Aligned segment where one word reads 1^{a_1} 0^{b_1} ... 0^{b_s} 1^{a_{s+1}}
/// and the other reads only 1s.
struct DistanceBarrier {
  int begin = 0;           // first position of the segment
  int end = 0;             // one past the last position
  int split_word = 0;      // 0: first argument carries the 0-blocks, 1: second
  std::vector<int> ones;   // a_1 .. a_{s+1}
  std::vector<int> zeros;  // b_1 .. b_s

  int order() const noexcept { return static_cast<int>(zeros.size()); }
  int length() const noexcept { return end - begin; }
  // Extra distance over Hamming forced by this segment: the 1-blocks other
  // than the largest are cleared and refilled, costing sum(a) - 2 max(a).
  int contribution() const;

  friend bool operator==(const DistanceBarrier&, const DistanceBarrier&) = default;
};

// Both words must be valid family-I codewords of equal length (else
// ValidityError). Barriers are listed by begin position.
std::vector<DistanceBarrier> find_distance_barriers(const Word& u,
                                                    const Word& v, int p,
                                                    int r);

}  // namespace fibcube
