#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "weldpath/graph.hpp"
#include "weldpath/types.hpp"

namespace weldpath {

enum class LaceMode : std::uint8_t { HamiltonianConnected, HamiltonianLaceable };

// A rank-1 building block given explicitly. Vertex ids are local (0..n-1).
struct LeafGraph {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  LaceMode mode = LaceMode::HamiltonianLaceable;

  std::size_t num_vertices() const noexcept { return colors.size(); }
  friend bool operator==(const LeafGraph&, const LeafGraph&) = default;
};

// Perfect matchings between every pair of layers of one weld node.
//
// Each unordered pair {i, j} is stored once, oriented i < j, as a forward
// array (local vertex of layer i -> local vertex of layer j) together with
// its inverse, so lookups from either side read the same data.
class MatchingMap {
 public:
  MatchingMap() = default;

  // Stores the bijection from layer `from` to layer `to`. If from > to the
  // array is inverted before storing. Throws ConstructionError if `forward`
  // is not a permutation of 0..n-1 or from == to.
  void set(std::size_t from, std::size_t to, std::vector<Vertex> forward);

  bool contains(std::size_t i, std::size_t j) const;

  // Local id in layer `to` matched with local vertex `local` of layer `from`.
  Vertex partner(std::size_t from, std::size_t to, Vertex local) const;

  // Forward arrays keyed by (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> forward_arrays() const;

  std::size_t size() const noexcept { return pairs_.size(); }

  friend bool operator==(const MatchingMap& a, const MatchingMap& b);

 private:
  struct Entry {
    std::vector<Vertex> forward;
    std::vector<Vertex> inverse;
  };
  std::map<std::pair<std::size_t, std::size_t>, Entry> pairs_;
};

struct WeldTree;

struct WeldNode {
  int rank = 2;
  std::vector<WeldTree> children;
  MatchingMap matchings;
};

// Recursive description of a transposition-like graph: a leaf is an explicit
// rank-1 graph, a node welds rank-1-lower children with pairwise matchings.
struct WeldTree {
  std::variant<LeafGraph, WeldNode> body;

  bool is_leaf() const noexcept { return std::holds_alternative<LeafGraph>(body); }
  int rank() const noexcept;
  std::size_t num_vertices() const noexcept;
  const LeafGraph& leaf() const { return std::get<LeafGraph>(body); }
  const WeldNode& node() const { return std::get<WeldNode>(body); }

  friend bool operator==(const WeldTree& a, const WeldTree& b);
};

WeldTree make_leaf(LeafGraph leaf);
WeldTree make_node(int rank, std::vector<WeldTree> children, MatchingMap matchings);
WeldTree single_vertex_leaf(Color color);

// Vertex colors in canonical (child-order, depth-first) labeling.
std::vector<Color> flatten_colors(const WeldTree& tree);

// Flattens the tree. Layers of the result are the top-level children (a leaf
// is a single layer). Throws ConstructionError naming the offending layer pair
// and vertex if a matching joins equal colors or is not a bijection, and if
// children differ in size or rank.
AssembledGraph assemble(const WeldTree& tree);

// Γ(S_n, T_n) with vertices = permutations in lexicographic one-line order and
// color = parity (even is black). The rank-r node fixing positions 1..n-r has
// child c = {π : π(n-r+1) = c-th smallest free value}. Requires 1 <= n <= 7.
WeldTree transposition_graph(int n);

// K_{m,m} as a laceable leaf: vertices 0..m-1 black, m..2m-1 white.
WeldTree complete_bipartite_leaf(int m);

// A uniformly random color-respecting bijection for every layer pair,
// reproducible from the seed. Requires black(i) == white(j) for all pairs.
MatchingMap random_matchings(std::span<const WeldTree> children, std::uint64_t seed);

// Recursive weld of `layers` copies per level, K_{m,m} leaves, random
// matchings at every node. Requires layers >= rank >= 1.
WeldTree kmm_weld(int rank, int m, int layers, std::uint64_t seed);

// Structural checks that parse_weld_spec enforces: child ranks, layer count
// >= rank, equal child sizes, leaf parity, leaf edges, complete bijective and
// color-respecting matchings. Throws ConstructionError with a JSON-path-like
// location such as "$.children[1].matchings[\"0-2\"]".
void validate_weld(const WeldTree& tree);

nlohmann::json serialize_weld_spec(const WeldTree& tree);
// Schema errors always throw ParseError. With `validate` the structural checks
// of validate_weld run too; without it hypothesis problems are left for
// check_theorem_hypotheses to report.
WeldTree parse_weld_spec(const nlohmann::json& doc, bool validate = true);

}  // namespace weldpath
