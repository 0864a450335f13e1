#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "weldpath/types.hpp"

namespace weldpath {

struct Coloring {
  std::size_t black_count = 0;
  std::size_t white_count = 0;
};

/// Half-open range of vertex ids [first, last).
struct VertexRange {
  Vertex first = 0;
  Vertex last = 0;
  Vertex size() const noexcept { return last - first; }
  bool contains(Vertex v) const noexcept { return v >= first && v < last; }
};

// Flattened undirected graph with dense ids, an explicit two-coloring and a
// vertex -> layer index. Immutable once built.
//
// Invariants: adjacency lists are sorted, symmetric and loop-free; every
// vertex belongs to exactly one layer and layers occupy contiguous id ranges.
class AssembledGraph {
 public:
  AssembledGraph() = default;

  // Builds a graph from an edge list. Duplicate edges collapse; loops and
  // out-of-range endpoints throw InputError. An empty layer_of puts every
  // vertex in layer 0. Coloring is stored as given and not checked here.
  static AssembledGraph from_edges(std::vector<Color> colors,
                                   std::span<const Edge> edges,
                                   std::vector<std::uint32_t> layer_of = {});

  std::size_t num_vertices() const noexcept { return colors_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  // Sorted ascending. Throws InputError if v is out of range.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  Color color(Vertex v) const;

  std::uint32_t layer_of(Vertex v) const;
  std::size_t num_layers() const noexcept { return layer_ranges_.size(); }
  VertexRange layer_range(std::size_t layer) const;

  const std::vector<Color>& colors() const noexcept { return colors_; }
  const std::vector<std::uint32_t>& layers() const noexcept { return layer_of_; }
  Coloring coloring() const noexcept;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

 private:
  void check(Vertex v) const;

  std::vector<Color> colors_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size n + 1
  std::vector<Vertex> targets_;
  std::vector<std::uint32_t> layer_of_;
  std::vector<VertexRange> layer_ranges_;
  std::size_t num_edges_ = 0;
};

bool is_bipartite_properly_colored(const AssembledGraph& g);

// Equal black and white counts. Meaningful only for properly colored graphs.
bool is_equitable(const AssembledGraph& g);

// Evaluates |(S∪T)∩Black| - |(S∪T)∩White| == 2(|Black| - |White|).
// Throws InputError on duplicate or out-of-range endpoints.
bool is_balanced(const AssembledGraph& g, std::span<const Pair> pairs);

// Checks ids, distinctness and the black-source / white-target convention.
// Throws InputError describing the first problem found.
void validate_pairs(const AssembledGraph& g, std::span<const Pair> pairs);

std::string to_dot(const AssembledGraph& g);
nlohmann::json to_json(const AssembledGraph& g);

}  // namespace weldpath
