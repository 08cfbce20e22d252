#pragma once

// Internal: claim definitions and the per-worker oracle they draw from.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fibcube/cubegraph.hpp"
#include "fibcube/verify.hpp"

namespace fibcube::verify::detail {

// Per-worker oracle: memoizes graphs and routes named invariants through the
// shared cache.
class Oracle {
 public:
  explicit Oracle(Cache* cache) : cache_(cache) {}

  const CubeGraph& graph(const CubeParams& params);
  Json cached(const ClaimPoint& point, const std::string& name,
              const std::function<Json()>& compute);

  // {order, size, radius, diameter, center, min_degree, max_degree,
  //  max_degree_count, zero_eccentricity}
  Json bundle(const CubeParams& params);

 private:
  Cache* cache_;
  std::map<CubeParams, std::unique_ptr<CubeGraph>> graphs_;
  std::map<std::string, Json> local_;
};

enum class Scope : std::uint8_t {
  kCube,   // one cube per family in the grid
  kPair,   // compares the O- and I-cube of the same (p, r, n)
  kFixed,  // a fixed list of points, independent of the grid ranges
};

struct ClaimDef {
  ClaimInfo info;
  Scope scope = Scope::kCube;
  std::vector<Family> families{Family::O, Family::I};
  std::function<bool(const ClaimPoint&)> applies;  // null: always
  std::vector<ClaimPoint> fixed;
  // Cubes the check builds; their orders are checked against the budget.
  std::function<std::vector<CubeParams>(const ClaimPoint&)> cubes;
  std::size_t order_cap = 0;  // extra per-claim cap on those orders; 0: none
  std::function<void(Oracle&, const ClaimPoint&, ClaimCheck&)> evaluate;
};

const std::vector<ClaimDef>& claim_defs();
const ClaimDef& find_def(std::string_view id);

}  // namespace fibcube::verify::detail
