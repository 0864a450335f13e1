#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "weldpath/graph.hpp"
#include "weldpath/types.hpp"
#include "weldpath/weld.hpp"

namespace weldpath {

struct OracleConfig {
  // Largest graph brute_pdpc and certify_leaf will search exhaustively.
  std::size_t bound = 16;
};

// Reads WELDPATH_ORACLE_BOUND, falling back to the default bound.
OracleConfig oracle_config_from_env();

// Hamiltonian path s -> t by backtracking (ascending neighbor order), or
// nullopt if none exists. s == t yields [s] only on a one-vertex graph.
std::optional<Path> ham_path_between(const AssembledGraph& g, Vertex s, Vertex t);

// Same search restricted to the subgraph induced by `range`.
std::optional<Path> ham_path_in_range(const AssembledGraph& g, VertexRange range, Vertex s,
                                      Vertex t);

// Exhaustive search for a paired disjoint path cover. Endpoints may have any
// colors; they must be in range and pairwise distinct across pairs (s == t
// within one pair asks for a trivial path). Absence proves non-existence.
// Throws OracleRefusal above cfg.bound vertices.
std::optional<PathCover> brute_pdpc(const AssembledGraph& g, std::span<const Pair> pairs,
                                    const OracleConfig& cfg = {});

// Laceable: a Hamiltonian path joins every black/white pair. Connected: every
// pair of distinct vertices. One-vertex leaves certify trivially. Above the
// bound, throws OracleRefusal unless `trust` is set (then returns true).
bool certify_leaf(const LeafGraph& leaf, const OracleConfig& cfg = {}, bool trust = false);

}  // namespace weldpath
