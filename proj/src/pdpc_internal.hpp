#pragma once

// Shared machinery of the constructive solver. Not installed.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "weldpath/pdpc.hpp"

namespace weldpath {

// Vertex range and children of one weld-tree node in assembled ids.
struct NodeInfo {
  int rank = 1;
  VertexRange range;
  Vertex layer_size = 0;
  std::vector<NodeInfo> children;

  std::size_t num_layers() const noexcept { return children.size(); }
  VertexRange layer(std::size_t j) const { return children[j].range; }
  std::size_t layer_of(Vertex v) const { return (v - range.first) / layer_size; }

  static NodeInfo build(const WeldTree& tree, Vertex base);
};

namespace detail {

[[noreturn]] void fail(const std::string& what);
inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

// The unique neighbor of v inside `range`.
Vertex cross_partner(const AssembledGraph& g, Vertex v, VertexRange range);

std::size_t index_of(const Path& p, Vertex v);
bool contains(const Path& p, Vertex v);
Vertex pred(const Path& p, Vertex v);
Vertex succ(const Path& p, Vertex v);
// Subpath from a to b inclusive, reversed when b precedes a.
Path seg(const Path& p, Vertex a, Vertex b);
Path reversed(Path p);
// Index of the path in `cover` containing v.
std::size_t path_containing(const PathCover& cover, Vertex v);

class Engine;

// One pair as seen by a construction, in proof order.
struct Slot {
  Vertex s = kNoVertex;
  Vertex t = kNoVertex;
  std::size_t caller = 0;
  Vertex v = kNoVertex;  // connector leaving the layer of s
  Vertex u = kNoVertex;  // its cross partner
};

// Working state of a single construction at one weld node.
class Frame {
 public:
  Frame(Engine& eng, const NodeInfo& node, std::span<const Pair> pairs, SolveTrace& trace);

  Engine& eng;
  const NodeInfo& node;
  SolveTrace& trace;
  std::vector<Slot> sl;
  Color src = Color::Black;
  bool swapped = false;
  std::vector<char> used;

  std::size_t n() const noexcept { return sl.size(); }
  std::size_t num_layers() const noexcept { return node.num_layers(); }
  std::size_t layer(Vertex v) const { return node.layer_of(v); }
  Vertex partner(Vertex v, std::size_t j) const;
  Color dst() const noexcept { return opposite(src); }
  Color color(Vertex v) const;
  LayerStats stats() const;

  // Sources become targets and vice versa; colors of picks flip with them.
  void role_swap();
  // Exchanges proof indices a and b.
  void swap_slots(std::size_t a, std::size_t b);
  // Moves the slot at `from` to position `to`, shifting the others.
  void move_slot(std::size_t from, std::size_t to);
  void name_layer(const std::string& name, std::size_t j);
  void set_case(const std::string& label) { trace.case_label = label; }
  void set_branch(const std::string& b);

  // Lowest layer index outside `taken`.
  std::size_t free_layer(std::initializer_list<std::size_t> taken) const;

  PathCover cover(std::size_t j, const PairSpec& pairs);
  Path ham(std::size_t j, Vertex a, Vertex b);
  void mark(std::size_t j) { used[j] = 1; }
  Vertex pick(std::size_t j, Color c, std::vector<Vertex> forbidden, std::size_t bound);
  void record_connector(Vertex v, Vertex u) { trace.connectors.push_back({v, u}); }

  // Concatenates pieces, checking that joins are edges. Empty pieces skip.
  Path chain(std::initializer_list<Path> pieces) const;

  // Checks endpoints, extends path 0 through unused layers, verifies the
  // node-level cover and returns it in caller order and orientation.
  PathCover finish(PathCover proof_paths);
};

class Engine {
 public:
  Engine(const AssembledGraph& g, bool record) : g_(g), record_(record) {}

  const AssembledGraph& graph() const noexcept { return g_; }

  // Cover of `node` for any number of pairs up to rank - 1. Pairs may come in
  // either orientation; each is flipped to black -> white and back.
  PathCover cover(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace);

  bool recording() const noexcept { return record_; }

 private:
  PathCover dispatch(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace);
  PathCover leaf_path(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace);

  const AssembledGraph& g_;
  bool record_;
};

// Constructions. Each receives pairs with black sources.
PathCover base_rank2(Frame& f);
PathCover base_rank3(Frame& f);
PathCover base_rank4_small(Frame& f);
PathCover induction_step(Frame& f);

// s- and t-side pieces of each pair outside the layer a case works in.
struct Pieces {
  explicit Pieces(std::size_t n) : s(n), t(n) {}
  std::vector<Path> s, t;
};

bool all_pairs(std::size_t);
std::vector<Vertex> sources_in(const Frame& f, const LayerEntry& e);
std::vector<Vertex> targets_in(const Frame& f, const LayerEntry& e);
// The `which`-th layer (ascending) touched by all n pairs.
std::size_t full_layer(const LayerStats& st, std::size_t n, std::size_t which);

// Picks v in the layer of s and u = its partner in the layer of t for each
// wanted split pair, avoiding targets and earlier picks there and partners of
// sources and earlier u's on the other side.
void connect_split(Frame& f, const LayerStats& st, std::size_t bound,
                   const std::function<bool(std::size_t)>& want);
// Covers every layer outside `skip` holding endpoints of wanted pairs, with
// (s, t), (s, v) or (u, t) per pair, and files the pieces.
void cover_layers(Frame& f, std::initializer_list<std::size_t> skip,
                  const std::function<bool(std::size_t)>& want, Pieces& pc);

// Cases of the inductive step shared with the small ranks.
PathCover prop_case1(Frame& f);
PathCover prop_case2(Frame& f);
PathCover prop_case3(Frame& f);
PathCover prop_case4(Frame& f);

}  // namespace detail
}  // namespace weldpath
