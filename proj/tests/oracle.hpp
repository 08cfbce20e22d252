#pragma once

// Test-side reference implementations. Words are plain strings and graphs
// are built by brute force over all 2^n strings; nothing here calls into the
// library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace oracle {

// phi(i) straight from the recurrence, phi(0) = 1, phi(i < 0) = 0.
inline std::uint64_t phi(int p, int r, int i) {
  static std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  if (i < 0) return 0;
  if (i == 0) return 1;
  auto key = std::make_tuple(p, r, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t sum = 0;
  for (int j = 0; j <= r; ++j) sum += phi(p, r, i - p * j - 1);
  return memo[key] = sum;
}

// Greedy code of k with weights phi(m+p-1), ..., phi(p) for length m.
inline std::string greedy_code(int p, int r, int m, std::uint64_t k) {
  std::string out;
  for (int j = 0; j < m; ++j) {
    const std::uint64_t w = phi(p, r, m + p - 1 - j);
    if (k >= w) {
      out += '1';
      k -= w;
    } else {
      out += '0';
    }
  }
  return out;
}

// I-codewords: 1-blocks of length at most r, 0-blocks between two 1s of
// length at least p.
inline bool valid_I(const std::string& s, int p, int r) {
  std::size_t i = 0;
  bool seen_one = false;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    const auto len = static_cast<int>(j - i);
    if (s[i] == '1') {
      if (len > r) return false;
      seen_one = true;
    } else if (seen_one && j < s.size() && len < p) {
      return false;
    }
    i = j;
  }
  return true;
}

inline std::string bits(std::uint64_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// Sorted vertex words. O comes from Definition-style greedy codes of
// 0 .. phi(n+p)-1, I from the forbidden-block rule over all 2^n strings.
inline std::vector<std::string> vertices(char family, int p, int r, int n) {
  std::vector<std::string> out;
  if (family == 'O') {
    const std::uint64_t count = phi(p, r, n + p);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(greedy_code(p, r, n, k));
  } else {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      std::string s = bits(x, n);
      if (valid_I(s, p, r)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Graph {
  std::vector<std::string> words;
  std::vector<std::vector<int>> adj;

  std::size_t edges() const {
    std::size_t sum = 0;
    for (const auto& a : adj) sum += a.size();
    return sum / 2;
  }
};

inline Graph graph(std::vector<std::string> words) {
  Graph g;
  g.words = std::move(words);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < g.words.size(); ++i) index[g.words[i]] = static_cast<int>(i);
  g.adj.resize(g.words.size());
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    std::string w = g.words[i];
    for (auto& ch : w) {
      ch = ch == '0' ? '1' : '0';
      if (auto it = index.find(w); it != index.end()) g.adj[i].push_back(it->second);
      ch = ch == '0' ? '1' : '0';
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

inline std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> dist(g.words.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.words.size());
  for (std::size_t s = 0; s < g.words.size(); ++s) {
    const auto d = bfs(g, static_cast<int>(s));
    ecc[s] = *std::max_element(d.begin(), d.end());
  }
  return ecc;
}

inline int diameter(const Graph& g) {
  const auto e = eccentricities(g);
  return *std::max_element(e.begin(), e.end());
}

inline int index_of(const Graph& g, const std::string& w) {
  auto it = std::lower_bound(g.words.begin(), g.words.end(), w);
  return it != g.words.end() && *it == w ? static_cast<int>(it - g.words.begin()) : -1;
}

}  // namespace oracle
