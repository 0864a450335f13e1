#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weldpath/types.hpp"

namespace weldpath {

struct FuzzConfig {
  std::string family = "transposition";  // transposition, kmm-weld, mixed
  std::size_t instances = 1000;
  std::uint64_t seed = 1;
  int max_rank = 5;
  int min_rank = 2;
};

struct FuzzFailure {
  std::size_t index = 0;
  std::string graph;  // generator description
  PairSpec pairs;
  std::string reason;
};

struct FuzzReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t counting_violations = 0;
  std::map<std::string, std::size_t> histogram;  // "routine:case" of the top node
  std::vector<FuzzFailure> failures;

  nlohmann::json to_json() const;
};

// Instance i draws its rank, graph and pairs from a generator seeded with
// (seed, i), so results do not depend on evaluation order. Graphs:
// transposition -> Γ(S_r); kmm-weld -> K_{m,m} welds with m in 1..3, r or
// r + 1 layers and one of 8 matching seeds. Pairs are r - 1 distinct black
// sources and white targets drawn uniformly. Throws InputError on a bad
// family or rank range.
FuzzReport run_fuzz(const FuzzConfig& cfg);

}  // namespace weldpath
