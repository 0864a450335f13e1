#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "weldpath/graph.hpp"
#include "weldpath/oracle.hpp"
#include "weldpath/types.hpp"
#include "weldpath/weld.hpp"

namespace weldpath {

struct Violation {
  std::optional<std::size_t> pair;
  std::optional<std::size_t> position;
  std::string reason;
};

struct Verdict {
  bool accepted = false;
  std::optional<Violation> violation;

  nlohmann::json to_json() const;
};

// Accepts iff path i runs s_i -> t_i along edges of g and the paths partition
// V(g). Never throws; malformed input yields a reject carrying the first
// violation found (paths in order, then uncovered vertices).
Verdict verify_pdpc(const AssembledGraph& g, std::span<const Pair> pairs, const PathCover& cover);

struct HypothesisCheck {
  std::string path;   // "$", "$.children[2]", ...
  std::string check;  // short name such as "layer-count" or "leaf-certified"
  bool passed = false;
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;

  bool ok() const;
  nlohmann::json to_json() const;
  // One line per failed check, or "all checks passed".
  std::string summary() const;
};

// Per node: layer count >= rank, child ranks, equal child sizes, complete
// color-respecting matchings. Per leaf: parity (single vertex or even) and
// certification through the oracle. For the whole tree: bipartite and
// equitable assembly. Identical leaves are certified once.
HypothesisReport check_theorem_hypotheses(const WeldTree& tree, const OracleConfig& cfg = {},
                                          bool trust_leaves = false);

}  // namespace weldpath
