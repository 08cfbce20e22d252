#include "claims.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "fibcube/errors.hpp"
#include "fibcube/formulas.hpp"

namespace fibcube::verify::detail {

// ---------------------------------------------------------------- oracle

const CubeGraph& Oracle::graph(const CubeParams& params) {
  auto it = graphs_.find(params);
  if (it != graphs_.end()) return *it->second;
  if (graphs_.size() >= 8) graphs_.clear();
  auto g = std::make_unique<CubeGraph>(
      build_graph(params, std::numeric_limits<std::size_t>::max()));
  return *graphs_.emplace(params, std::move(g)).first->second;
}

Json Oracle::cached(const ClaimPoint& point, const std::string& name,
                    const std::function<Json()>& compute) {
  const std::string key = Cache::key(point, name);
  if (auto it = local_.find(key); it != local_.end()) return it->second;
  if (cache_ != nullptr) {
    if (auto hit = cache_->get(key)) return local_[key] = *hit;
  }
  Json value = compute();
  if (cache_ != nullptr) cache_->put(key, value);
  return local_[key] = std::move(value);
}

namespace {

ClaimPoint point_of(const CubeParams& c) { return {c.family, c.p, c.r, c.n}; }
CubeParams cube_of(const ClaimPoint& pt) {
  return {pt.family.value_or(Family::O), pt.p, pt.r, pt.n};
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

Json Oracle::bundle(const CubeParams& params) {
  return cached(point_of(params), "bundle", [&] {
    const CubeGraph& g = graph(params);
    const InvariantBundle b = invariants(g);
    const auto zero = *g.rank_of(Word::zeros(params.n));
    const auto dist = bfs_distances(g, zero);
    Json j;
    j["order"] = b.order;
    j["size"] = b.size;
    j["radius"] = b.radius;
    j["diameter"] = b.diameter;
    j["center"] = words_json(b.center);
    j["min_degree"] = b.min_degree;
    j["max_degree"] = b.max_degree;
    j["max_degree_count"] = b.max_degree_witnesses.size();
    j["zero_eccentricity"] = *std::max_element(dist.begin(), dist.end());
    return j;
  });
}

namespace {

// ---------------------------------------------------------------- helpers

void settle(ClaimCheck& c, Json expected, Json observed) {
  c.verdict = expected == observed ? Verdict::kMatch : Verdict::kMismatch;
  c.expected = std::move(expected);
  c.observed = std::move(observed);
}

std::vector<CubeParams> own_cube(const ClaimPoint& pt) { return {cube_of(pt)}; }

std::vector<CubeParams> both_cubes(const ClaimPoint& pt) {
  return {{Family::O, pt.p, pt.r, pt.n}, {Family::I, pt.p, pt.r, pt.n}};
}

std::uint64_t order_of(Family f, int p, int r, int n) {
  if (n < 0) return 0;
  return enumerate_vertices({f, p, r, n}).size();
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    out.emplace_back(bits, n);
  }
  return out;
}

// Forbidden-factor test on the printed string, independent of CodeScanner.
bool has_forbidden_factor(Family f, int p, int r, const std::string& s) {
  auto contains = [&](const std::string& factor) {
    return s.find(factor) != std::string::npos;
  };
  const std::string ones(static_cast<std::size_t>(r + 1), '1');
  if (f == Family::I) {
    if (contains(ones)) return true;
    for (int k = 1; k <= p - 1; ++k) {
      if (contains("1" + std::string(static_cast<std::size_t>(k), '0') + "1")) {
        return true;
      }
    }
    return false;
  }
  if (p == 1) return contains(ones);
  std::string chain;
  for (int i = 0; i < r; ++i) {
    chain += "1" + std::string(static_cast<std::size_t>(p - 1), '0');
  }
  if (contains(chain + "1")) return true;
  for (int k = 0; k <= p - 2; ++k) {
    if (contains("1" + std::string(static_cast<std::size_t>(k), '0') + "1")) {
      return true;
    }
  }
  return false;
}

// Postal network PN_q(n): 0 PN_q(n-1) u 10^{q-1} PN_q(n-q) for n > q, and
// words of weight at most 1 for n <= q.
std::vector<std::string> postal_words(int q, int n) {
  if (n <= q) {
    std::vector<std::string> out{std::string(static_cast<std::size_t>(n), '0')};
    for (int i = 0; i < n; ++i) {
      std::string w(static_cast<std::size_t>(n), '0');
      w[static_cast<std::size_t>(i)] = '1';
      out.push_back(w);
    }
    return out;
  }
  std::vector<std::string> out;
  for (const auto& w : postal_words(q, n - 1)) out.push_back("0" + w);
  const std::string head = "1" + std::string(static_cast<std::size_t>(q - 1), '0');
  for (const auto& w : postal_words(q, n - q)) out.push_back(head + w);
  return out;
}

CubeGraph graph_from_strings(const std::vector<std::string>& words, int n) {
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& w : words) parsed.push_back(Word::parse(w));
  return CubeGraph::from_words(std::move(parsed), n);
}

Json iso_json(const CubeGraph& a, const CubeGraph& b) {
  const auto map = find_isomorphism(a, b);
  Json j;
  j["isomorphic"] = map.has_value();
  if (map) {
    Json pairs = Json::array();
    for (Rank v = 0; v < a.order(); ++v) {
      pairs.push_back({a.word(v).str(), b.word((*map)[v]).str()});
    }
    j["bijection"] = std::move(pairs);
  }
  return j;
}

const std::map<std::pair<int, int>, std::vector<std::uint64_t>>& printed_table() {
  static const std::map<std::pair<int, int>, std::vector<std::uint64_t>> t{
      {{1, 1}, {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233}},
      {{1, 3}, {1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490}},
      {{2, 1}, {1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60}},
      {{2, 2}, {1, 1, 1, 2, 3, 5, 8, 12, 19, 30, 47, 85, 116}},
  };
  return t;
}

// All-pairs comparison of BFS distance with Hamming distance and barriers.
Json pair_statistics(const CubeGraph& g, int p, int r) {
  std::uint64_t pairs = 0;
  std::uint64_t below_hamming = 0;
  std::uint64_t criterion_failures = 0;
  std::uint64_t additivity_failures = 0;
  Json first_criterion;
  Json first_additivity;
  for (Rank u = 0; u < g.order(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Rank v = u + 1; v < g.order(); ++v) {
      ++pairs;
      const int h = hamming(g.word(u), g.word(v));
      const int d = dist[v];
      const auto barriers = find_distance_barriers(g.word(u), g.word(v), p, r);
      int extra = 0;
      for (const auto& b : barriers) {
        int sum = 0;
        int largest = 0;
        for (int a : b.ones) {
          sum += a;
          largest = std::max(largest, a);
        }
        extra += 2 * (sum - largest);
      }
      const Json pair = {g.word(u).str(), g.word(v).str(), d, h};
      if (d < h) ++below_hamming;
      if ((d == h) != barriers.empty() || d < h) {
        if (criterion_failures++ == 0) first_criterion = pair;
      }
      if (d - h != extra) {
        if (additivity_failures++ == 0) first_additivity = pair;
      }
    }
  }
  Json j;
  j["pairs"] = pairs;
  j["below_hamming"] = below_hamming;
  j["criterion_failures"] = criterion_failures;
  j["additivity_failures"] = additivity_failures;
  j["first_criterion_failure"] = first_criterion;
  j["first_additivity_failure"] = first_additivity;
  return j;
}

// ---------------------------------------------------------------- claims

std::vector<ClaimDef> build_defs() {
  std::vector<ClaimDef> defs;
  auto add = [&](std::string id, ClaimKind kind, std::string statement,
                 Scope scope) -> ClaimDef& {
    ClaimDef& d = defs.emplace_back();
    d.info = {std::move(id), kind, std::move(statement)};
    d.scope = scope;
    d.cubes = own_cube;
    return d;
  };
  const auto T = ClaimKind::kTheorem;
  const auto P = ClaimKind::kProbe;

  // --- numbering system
  {
    auto& d = add("table1-phi", T, "printed Fibonacci (p,r)-numbers equal the recurrence", Scope::kFixed);
    for (const auto& [pr, row] : printed_table()) {
      for (int i = 0; i < static_cast<int>(row.size()); ++i) {
        d.fixed.push_back({std::nullopt, pr.first, pr.second, i});
      }
    }
    d.cubes = nullptr;
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      const auto printed = printed_table().at({pt.p, pt.r})[static_cast<std::size_t>(pt.n)];
      const auto value = phi(pt.p, pt.r, pt.n);
      settle(c, printed, value);
      if (c.verdict == Verdict::kMismatch) {
        Json terms = Json::array();
        for (int j = 0; j <= pt.r; ++j) {
          const int idx = pt.n - pt.p * j - 1;
          terms.push_back({{"index", idx}, {"value", phi(pt.p, pt.r, idx)}});
        }
        c.witness = {{"recurrence_terms", terms}, {"sum", value}};
      }
    };
  }
  {
    auto& d = add("defn1-order-phi", T, "|V(O)| = phi(p, r, n + p)", Scope::kCube);
    d.families = {Family::O};
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, phi(pt.p, pt.r, pt.n + pt.p), order_of(Family::O, pt.p, pt.r, pt.n));
    };
  }
  {
    auto& d = add("defn1-code-bijection", T,
                  "decode maps codewords bijectively onto 0..phi(p,r,n+p)-1 and encode inverts it",
                  Scope::kCube);
    d.families = {Family::O};
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      const CubeParams cp = cube_of(pt);
      const std::uint64_t range = phi(pt.p, pt.r, pt.n + pt.p);
      std::set<std::uint64_t> seen;
      std::uint64_t good = 0;
      Json first_bad;
      for (const Word& w : enumerate_vertices(cp)) {
        const std::uint64_t k = decode(cp, w);
        bool ok = k < range && seen.insert(k).second;
        if (ok) {
          try {
            ok = encode(cp, k) == w;
          } catch (const Error&) {
            ok = false;
          }
        }
        if (ok) {
          ++good;
        } else if (first_bad.is_null()) {
          first_bad = {{"word", w.str()}, {"decoded", k}};
        }
      }
      settle(c, range, good);
      if (!first_bad.is_null()) c.witness = {{"first_failure", first_bad}};
    };
  }
  {
    auto& d = add("eq2.4-order-recursion", T,
                  "|V_n| = sum_{t=0..r} |V_{n-tp-1}| for the O-cube, n > pr", Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.n > pt.p * pt.r; };
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      std::uint64_t sum = 0;
      for (int t = 0; t <= pt.r; ++t) {
        sum += order_of(Family::O, pt.p, pt.r, pt.n - t * pt.p - 1);
      }
      settle(c, sum, order_of(Family::O, pt.p, pt.r, pt.n));
    };
  }
  {
    auto& d = add("eq2.6-order-recursion", T,
                  "|V_n| = |V_{n-1}| + sum_{t=1..r} |V_{n-p-t}| for the I-cube, n >= p + r",
                  Scope::kCube);
    d.families = {Family::I};
    d.applies = [](const ClaimPoint& pt) { return pt.n >= pt.p + pt.r; };
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      std::uint64_t sum = order_of(Family::I, pt.p, pt.r, pt.n - 1);
      for (int t = 1; t <= pt.r; ++t) {
        sum += order_of(Family::I, pt.p, pt.r, pt.n - pt.p - t);
      }
      settle(c, sum, order_of(Family::I, pt.p, pt.r, pt.n));
    };
  }
  auto recursive_set = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
    const CubeParams cp = cube_of(pt);
    const auto rec = recursive_vertex_set(cp);
    const auto direct = enumerate_vertices(cp);
    const std::set<Word> direct_set(direct.begin(), direct.end());
    settle(c, rec.size(), direct.size());
    if (rec != direct_set) {
      c.verdict = Verdict::kMismatch;
      std::vector<Word> diff;
      std::set_symmetric_difference(rec.begin(), rec.end(), direct_set.begin(),
                                    direct_set.end(), std::back_inserter(diff));
      c.witness = {{"first_difference", diff.front().str()}};
    }
  };
  {
    auto& d = add("eq2.3-vertex-recursion", T,
                  "prefix decomposition (1 0^{p-1})^t 0 rebuilds the O vertex set", Scope::kCube);
    d.families = {Family::O};
    d.evaluate = recursive_set;
  }
  {
    auto& d = add("eq2.5-vertex-recursion", T,
                  "prefix decomposition 0 | 1^t 0^p rebuilds the I vertex set", Scope::kCube);
    d.families = {Family::I};
    d.evaluate = recursive_set;
  }

  // --- structure propositions
  {
    auto& d = add("prop2.1-vertex-sets", T,
                  "O vertex sets coincide for all r, r' with n <= pr and n <= pr'", Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.n <= pt.p * pt.r; };
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      const auto base = enumerate_vertices(cube_of(pt));
      const int lo = std::max(1, (pt.n + pt.p - 1) / pt.p);
      const int hi = std::max(pt.r, pt.n);
      std::optional<int> differs;
      for (int r2 = lo; r2 <= hi && !differs; ++r2) {
        if (enumerate_vertices({Family::O, pt.p, r2, pt.n}) != base) differs = r2;
      }
      settle(c, true, !differs.has_value());
      if (differs) c.witness = {{"other_r", *differs}};
    };
  }
  {
    auto& d = add("prop2.3-hypercube", T, "p = 1, r >= n: the cube is isomorphic to Q_n", Scope::kCube);
    d.applies = [](const ClaimPoint& pt) { return pt.p == 1 && pt.r >= pt.n; };
    d.order_cap = kDefaultIsoBudget;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "iso-hypercube", [&] {
        return iso_json(o.graph(cube_of(pt)), CubeGraph::from_words(all_words(pt.n), pt.n));
      });
      settle(c, true, j["isomorphic"]);
    };
  }
  {
    auto& d = add("prop2.3-fibonacci", T, "p = r = 1: the cube is isomorphic to the Fibonacci cube", Scope::kCube);
    d.applies = [](const ClaimPoint& pt) { return pt.p == 1 && pt.r == 1; };
    d.order_cap = kDefaultIsoBudget;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "iso-fibonacci", [&] {
        std::vector<std::string> words;
        for (const Word& w : all_words(pt.n)) {
          if (w.str().find("11") == std::string::npos) words.push_back(w.str());
        }
        return iso_json(o.graph(cube_of(pt)), graph_from_strings(words, pt.n));
      });
      settle(c, true, j["isomorphic"]);
    };
  }
  {
    auto& d = add("prop2.3-postal", T, "r = 1: the cube is isomorphic to the postal network PN_{p+1}(n)", Scope::kCube);
    d.applies = [](const ClaimPoint& pt) { return pt.r == 1; };
    d.order_cap = kDefaultIsoBudget;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "iso-postal", [&] {
        return iso_json(o.graph(cube_of(pt)),
                        graph_from_strings(postal_words(pt.p + 1, pt.n), pt.n));
      });
      settle(c, true, j["isomorphic"]);
    };
  }
  {
    auto& d = add("prop2.4-order-comparison", T,
                  "p, r > 1: |V(O)| = |V(I)| for n <= p + 1 and |V(O)| < |V(I)| beyond", Scope::kPair);
    d.applies = [](const ClaimPoint& pt) { return pt.p > 1 && pt.r > 1; };
    d.cubes = both_cubes;
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      const auto o = order_of(Family::O, pt.p, pt.r, pt.n);
      const auto i = order_of(Family::I, pt.p, pt.r, pt.n);
      const char* observed = o == i ? "equal" : (o < i ? "less" : "greater");
      settle(c, pt.n <= pt.p + 1 ? "equal" : "less", observed);
      c.witness = {{"order_O", o}, {"order_I", i}};
    };
  }
  {
    auto& d = add("prop2.5-forbidden-factors", T,
                  "codewords are exactly the words avoiding the forbidden factors", Scope::kCube);
    d.applies = [](const ClaimPoint& pt) { return pt.n <= 20; };
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      const Family f = *pt.family;
      std::uint64_t by_factor = 0;
      std::uint64_t by_scanner = 0;
      Json first;
      for (const Word& w : all_words(pt.n)) {
        const bool a = !has_forbidden_factor(f, pt.p, pt.r, w.str());
        const bool b = is_valid_code(f, pt.p, pt.r, w);
        by_factor += a;
        by_scanner += b;
        if (a != b && first.is_null()) first = w.str();
      }
      settle(c, by_factor, by_scanner);
      if (!first.is_null()) {
        c.verdict = Verdict::kMismatch;
        c.witness = {{"first_disagreement", first}};
      }
    };
  }
  {
    auto& d = add("prop2.6-reversal", T, "the reversal of a codeword is a codeword", Scope::kCube);
    d.evaluate = [](Oracle&, const ClaimPoint& pt, ClaimCheck& c) {
      std::uint64_t bad = 0;
      Json first;
      for (const Word& w : enumerate_vertices(cube_of(pt))) {
        if (!is_valid_code(*pt.family, pt.p, pt.r, w.reversed())) {
          if (bad++ == 0) first = w.str();
        }
      }
      settle(c, 0, bad);
      if (bad > 0) c.witness = {{"first_violation", first}};
    };
  }
  {
    auto& d = add("prop2.7-iff", T, "the O- and I-cube are isomorphic iff p = 1 or r = 1", Scope::kPair);
    d.cubes = both_cubes;
    d.order_cap = kDefaultIsoBudget;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "iso-O-I", [&] {
        const CubeParams a{Family::O, pt.p, pt.r, pt.n};
        const CubeParams b{Family::I, pt.p, pt.r, pt.n};
        const auto va = enumerate_vertices(a);
        const auto vb = enumerate_vertices(b);
        Json r;
        r["order_O"] = va.size();
        r["order_I"] = vb.size();
        if (va == vb) {
          r["relation"] = "identical";
        } else if (va.size() != vb.size()) {
          r["relation"] = "not-isomorphic";
        } else {
          r["relation"] = are_isomorphic(o.graph(a), o.graph(b)) ? "isomorphic" : "not-isomorphic";
        }
        return r;
      });
      const std::string rel = j["relation"];
      settle(c, pt.p == 1 || pt.r == 1, rel != "not-isomorphic");
      c.witness = j;
    };
  }
  {
    auto& d = add("prop2.8-size-recursion", T,
                  "|E_n| = sum_{t=0..r} (|E_{n-tp-1}| + t |V_{n-tp-1}|) for the O-cube, n > pr",
                  Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.n > pt.p * pt.r; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      std::uint64_t sum = 0;
      for (int t = 0; t <= pt.r; ++t) {
        const Json b = o.bundle({Family::O, pt.p, pt.r, pt.n - t * pt.p - 1});
        sum += b["size"].get<std::uint64_t>() + static_cast<std::uint64_t>(t) * b["order"].get<std::uint64_t>();
      }
      settle(c, sum, o.bundle(cube_of(pt))["size"]);
    };
  }
  {
    auto& d = add("prop2.9-size-recursion", T,
                  "|E_n| = |E_{n-1}| + sum_{t=1..r} (|E_{n-p-t}| + 2|V_{n-p-t}|) - |V_{n-p-1}| for the I-cube, n > p + r",
                  Scope::kCube);
    d.families = {Family::I};
    d.applies = [](const ClaimPoint& pt) { return pt.n > pt.p + pt.r; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      auto at = [&](int n) { return o.bundle({Family::I, pt.p, pt.r, n}); };
      std::int64_t sum = at(pt.n - 1)["size"].get<std::int64_t>();
      for (int t = 1; t <= pt.r; ++t) {
        const Json b = at(pt.n - pt.p - t);
        sum += b["size"].get<std::int64_t>() + 2 * b["order"].get<std::int64_t>();
      }
      sum -= at(pt.n - pt.p - 1)["order"].get<std::int64_t>();
      settle(c, sum, o.bundle(cube_of(pt))["size"]);
      if (c.verdict != Verdict::kMatch) {
        // Edges 1^t 0 1^k ... ~ 1^{t+1+k} ... join parts t and t+1+k of the
        // first-block decomposition; the recursion has no term for them.
        const CubeGraph& g = o.graph(cube_of(pt));
        std::int64_t merges = 0;
        for (Rank v = 0; v < g.order(); ++v) {
          const Word& w = g.word(v);
          int t = 0;
          while (t < w.length() && w.at(t)) ++t;
          if (t == 0 || t + 1 >= w.length() || !w.at(t + 1)) continue;
          if (g.rank_of(w.flipped(t))) ++merges;
        }
        c.witness = {{"uncounted_merge_edges", merges}};
      }
    };
  }

  // --- radius, center, diameter
  auto radius = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
    settle(c, radius_O(pt.p, pt.r, pt.n), o.bundle(cube_of(pt))["radius"]);
  };
  auto center = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
    const Json b = o.bundle(cube_of(pt));
    Json observed = {{"center", b["center"]}, {"count", b["center"].size()}};
    try {
      const CenterResult z = center_O(pt.p, pt.r, pt.n);
      Json expected = {{"center", words_json(z.center)}, {"count", z.count}};
      settle(c, std::move(expected), std::move(observed));
      c.witness = {{"count_method", std::string(to_string(z.count_method))}};
    } catch (const FormulaViolation& e) {
      c.verdict = Verdict::kMismatch;
      c.observed = std::move(observed);
      c.witness = {{"constructed", e.constructed()},
                   {"closed_form", e.closed_form()},
                   {"message", e.what()}};
    }
  };
  {
    auto& d = add("thm4.1-radius", T, "p = 1: rad(O) = ceil(nr/(r+1))", Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.p == 1; };
    d.evaluate = radius;
  }
  {
    auto& d = add("thm4.1-center", T,
                  "p = 1: the center is {0^n} or built by 0^{r+1} insertion; its size fits the polynomial count",
                  Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.p == 1; };
    d.evaluate = center;
  }
  {
    auto& d = add("thm4.2-radius", T, "p >= 2: rad(O) = ceil(nr/(pr+1))", Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.p >= 2; };
    d.evaluate = radius;
  }
  {
    auto& d = add("thm4.2-center", T,
                  "p >= 2: the center comes from two-sided 0^{pr+1} padding; count (floor(n/(pr+1))+1)(k+1)+1",
                  Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.p >= 2; };
    d.evaluate = center;
  }
  {
    auto& d = add("thm4.4-diameter", T,
                  "diam(O) from the closed form evaluated at the numbering index n + p", Scope::kCube);
    d.families = {Family::O};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, diameter_O(pt.p, pt.r, pt.n), o.bundle(cube_of(pt))["diameter"]);
    };
  }
  {
    auto& d = add("thm4.4-diameter-as-printed", T,
                  "p >= 2: diam(O) = floor(nr/(pr+1)) + floor((n-1)r/(pr+1)) at the codeword length n",
                  Scope::kCube);
    d.families = {Family::O};
    d.applies = [](const ClaimPoint& pt) { return pt.p >= 2; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, diameter_O_as_printed(pt.p, pt.r, pt.n), o.bundle(cube_of(pt))["diameter"]);
    };
  }
  {
    auto& d = add("thm4.5-diameter", T,
                  "diam(I): exact in the p = 1, r < p, p <= r <= 2p+2 and short-word cases; bounded otherwise",
                  Scope::kCube);
    d.families = {Family::I};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const DiameterResult dr = diameter_I(pt.p, pt.r, pt.n);
      const Json observed = o.bundle(cube_of(pt))["diameter"];
      c.witness = {{"case", std::string(to_string(dr.which))}};
      if (dr.kind == DiameterResult::Kind::kExact) {
        settle(c, dr.value, observed);
        return;
      }
      const int diam = observed.get<int>();
      c.expected = {{"lower", dr.lower_printed}, {"upper", dr.upper}};
      c.observed = observed;
      c.verdict = dr.lower_printed <= diam && diam <= dr.upper ? Verdict::kBoundsHold
                                                               : Verdict::kBoundsViolated;
      c.witness["barrier"] = dr.barrier->str();
      c.witness["c"] = dr.barrier->c;
      c.witness["r_prime"] = dr.barrier->r_prime;
    };
  }
  {
    auto& d = add("thm4.5-diameter-as-printed", T,
                  "r < p: diam(I) = 2r ceil(n/(p+r)) + min(n mod (p+r), 2r)", Scope::kCube);
    d.families = {Family::I};
    d.applies = [](const ClaimPoint& pt) { return pt.p >= 2 && pt.r < pt.p; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, diameter_I_short_blocks_as_printed(pt.p, pt.r, pt.n),
             o.bundle(cube_of(pt))["diameter"]);
    };
  }
  {
    auto& d = add("thm4.5-claim2", T, "diam(I) > n iff p >= 2, r >= 2p+3 and n >= 2p+3", Scope::kCube);
    d.families = {Family::I};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const bool predicted = pt.p >= 2 && pt.r >= 2 * pt.p + 3 && pt.n >= 2 * pt.p + 3;
      const int diam = o.bundle(cube_of(pt))["diameter"].get<int>();
      settle(c, predicted, diam > pt.n);
      c.witness = {{"diameter", diam}};
    };
  }
  {
    auto& d = add("thm4.5-barrier-criterion", T,
                  "d(u,v) >= H(u,v), with equality iff no distance barrier separates u and v",
                  Scope::kCube);
    d.families = {Family::I};
    d.order_cap = 2000;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json s = o.cached(pt, "pairs", [&] {
        return pair_statistics(o.graph(cube_of(pt)), pt.p, pt.r);
      });
      settle(c, 0, s["criterion_failures"]);
      c.witness = {{"pairs", s["pairs"]}};
      if (c.verdict == Verdict::kMismatch) c.witness["first_failure"] = s["first_criterion_failure"];
    };
  }
  {
    auto& d = add("thm4.5-worked-examples", T,
                  "p = 2: r = 7, n = 16 has diameter 17 (lower bound); r = 9, n = 14 has diameter 16 (upper bound)",
                  Scope::kFixed);
    d.fixed = {{Family::I, 2, 7, 16}, {Family::I, 2, 9, 14}};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const DiameterResult dr = diameter_I(pt.p, pt.r, pt.n);
      const bool lower = pt.r == 7;
      const int claimed = lower ? dr.lower_printed : dr.upper;
      settle(c, claimed, o.bundle(cube_of(pt))["diameter"]);
      // The pair the example exhibits, with its BFS distance.
      const Word a = lower ? Word::parse("100100111") + Word::parse("1001001")
                           : Word::parse("10010011111111");
      const Word b = lower ? Word::parse("111111100") + Word::parse("1111111")
                           : Word::parse("11111111001001");
      const int dist = distance(o.graph(cube_of(pt)), a, b);
      c.witness = {{"bounds", {dr.lower_printed, dr.upper}},
                   {"pair", {a.str(), b.str()}},
                   {"pair_distance", dist}};
    };
  }

  // --- degrees
  {
    auto& d = add("thm5.1-max-degree", T,
                  "Delta = n, and 0^n is the unique vertex of degree n exactly in the listed cases",
                  Scope::kCube);
    d.applies = [](const ClaimPoint& pt) { return pt.n >= 2; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const MaxDegree m = max_degree(*pt.family, pt.p, pt.r, pt.n);
      const Json b = o.bundle(cube_of(pt));
      settle(c, {{"delta", m.delta}, {"unique", m.unique_zero_witness}},
             {{"delta", b["max_degree"]}, {"unique", b["max_degree_count"] == 1}});
    };
  }
  {
    auto& d = add("thm5.4-min-degree", T, "delta(I) closed form", Scope::kCube);
    d.families = {Family::I};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, min_degree_I(pt.p, pt.r, pt.n), o.bundle(cube_of(pt))["min_degree"]);
    };
  }
  {
    auto& d = add("thm5.6-min-degree", T, "delta(O) closed form", Scope::kCube);
    d.families = {Family::O};
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      settle(c, min_degree_O(pt.p, pt.r, pt.n), o.bundle(cube_of(pt))["min_degree"]);
    };
  }
  {
    auto& d = add("min-degree-witness", T,
                  "the periodic witness word is a vertex whose degree is the predicted minimum", Scope::kCube);
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Word w = min_degree_witness(*pt.family, pt.p, pt.r, pt.n);
      const CubeGraph& g = o.graph(cube_of(pt));
      const auto rank = g.rank_of(w);
      const Json observed = rank ? Json(g.degree(*rank)) : Json("not a vertex");
      settle(c, min_degree(*pt.family, pt.p, pt.r, pt.n), observed);
      c.witness = {{"word", w.str()}};
    };
  }
  {
    auto& d = add("lemma5.2-down-flips", T,
                  "some minimum-degree vertex has only neighbours obtained by 1 -> 0 flips", Scope::kCube);
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "lemma5.2", [&] {
        const CubeGraph& g = o.graph(cube_of(pt));
        int delta = g.degree(0);
        for (Rank v = 1; v < g.order(); ++v) delta = std::min(delta, g.degree(v));
        for (Rank v = 0; v < g.order(); ++v) {
          if (g.degree(v) != delta) continue;
          const int weight = g.word(v).weight();
          const auto nb = g.neighbors(v);
          if (std::all_of(nb.begin(), nb.end(),
                          [&](Rank u) { return g.word(u).weight() < weight; })) {
            return Json{{"found", true}, {"vertex", g.word(v).str()}};
          }
        }
        return Json{{"found", false}};
      });
      settle(c, true, j["found"]);
      if (j.contains("vertex")) c.witness = {{"vertex", j["vertex"]}};
    };
  }
  {
    auto& d = add("fig3-isomorphism", T, "O(p=2,r=2,n=4) is isomorphic to I(p=3,r=2,n=4)", Scope::kFixed);
    d.fixed = {{std::nullopt, 2, 2, 4}};
    d.cubes = [](const ClaimPoint&) {
      return std::vector<CubeParams>{{Family::O, 2, 2, 4}, {Family::I, 3, 2, 4}};
    };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json j = o.cached(pt, "iso-fig3", [&] {
        return iso_json(o.graph({Family::O, 2, 2, 4}), o.graph({Family::I, 3, 2, 4}));
      });
      settle(c, true, j["isomorphic"]);
      if (j.contains("bijection")) c.witness = {{"bijection", j["bijection"]}};
    };
  }

  // --- probes
  {
    auto& d = add("conj-connectivity", P, "vertex connectivity equals minimum degree", Scope::kCube);
    d.order_cap = 5000;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json kappa = o.cached(pt, "connectivity", [&] {
        return Json(vertex_connectivity(o.graph(cube_of(pt))));
      });
      settle(c, o.bundle(cube_of(pt))["min_degree"], kappa);
    };
  }
  {
    auto& d = add("conj-i-radius", P,
                  "p, r >= 2: rad(I) = r ceil(n/(p+r)) and 0^n is a center", Scope::kCube);
    d.families = {Family::I};
    d.applies = [](const ClaimPoint& pt) { return pt.p >= 2 && pt.r >= 2; };
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json b = o.bundle(cube_of(pt));
      const int q = pt.p + pt.r;
      settle(c, pt.r * ((pt.n + q - 1) / q), b["radius"]);
      c.witness = {{"residue", pt.n % q},
                   {"zero_eccentricity", b["zero_eccentricity"]},
                   {"zero_central", b["zero_eccentricity"] == b["radius"]}};
    };
  }
  {
    auto& d = add("probe-barrier-additivity", P,
                  "d(u,v) - H(u,v) = sum over barriers of 2 (sum r_i - max r_i)", Scope::kCube);
    d.families = {Family::I};
    d.order_cap = 2000;
    d.evaluate = [](Oracle& o, const ClaimPoint& pt, ClaimCheck& c) {
      const Json s = o.cached(pt, "pairs", [&] {
        return pair_statistics(o.graph(cube_of(pt)), pt.p, pt.r);
      });
      settle(c, 0, s["additivity_failures"]);
      c.witness = {{"pairs", s["pairs"]}};
      if (c.verdict == Verdict::kMismatch) c.witness["first_failure"] = s["first_additivity_failure"];
    };
  }
  return defs;
}

}  // namespace

const std::vector<ClaimDef>& claim_defs() {
  static const std::vector<ClaimDef> defs = build_defs();
  return defs;
}

const ClaimDef& find_def(std::string_view id) {
  for (const auto& d : claim_defs()) {
    if (d.info.id == id) return d;
  }
  std::ostringstream os;
  os << "unknown claim '" << id << "'; registered claims:";
  for (const auto& d : claim_defs()) os << ' ' << d.info.id;
  throw UsageError(os.str());
}

}  // namespace fibcube::verify::detail
