#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weldpath/graph.hpp"
#include "weldpath/oracle.hpp"
#include "weldpath/types.hpp"
#include "weldpath/verify.hpp"
#include "weldpath/weld.hpp"

namespace weldpath {

// Per-layer endpoint bookkeeping. Sets hold pair indices.
struct LayerEntry {
  std::vector<std::size_t> S, T;
  std::vector<std::size_t> S_split;  // s_i here, t_i elsewhere
  std::vector<std::size_t> S_inner;  // s_i and t_i both here
  std::vector<std::size_t> T_split;
  std::vector<std::size_t> T_inner;
  std::size_t w = 0;  // pairs touching the layer
};

struct LayerStats {
  std::vector<LayerEntry> layers;
};

LayerStats compute_layer_stats(std::size_t num_layers, std::span<const Pair> pairs,
                               const std::function<std::size_t(Vertex)>& layer_of);
LayerStats compute_layer_stats(const AssembledGraph& g, std::span<const Pair> pairs);

// Case 1..6 of the inductive construction for n pairs. Counts the layers with
// w_j = n (at most two are possible) and refines by subset tests. Throws
// SolveError if the stats admit no case, which valid input never produces.
int classify_case(const LayerStats& stats, std::size_t n);

// Recursion tree of one solve. Every renaming is explicit: pair_perm maps
// proof index -> caller index, role_swap says sources and targets traded
// places, layer_map names the layers the construction picked.
struct SolveTrace {
  std::string routine;  // rank2, rank3, rank4-small, induction, reduce, leaf
  int rank = 0;
  std::string case_label;
  std::string branch;
  std::vector<std::pair<std::string, std::size_t>> layer_map;
  std::vector<std::size_t> pair_perm;
  bool role_swap = false;
  PairSpec proof_pairs;
  std::vector<Edge> connectors;  // (v, u): v picked, u its cross partner
  std::vector<SolveTrace> children;

  nlohmann::json to_json() const;
};

class SolveError : public Error {
 public:
  using Error::Error;
  const SolveTrace* trace() const noexcept { return trace_.get(); }
  void attach(SolveTrace trace) { trace_ = std::make_shared<SolveTrace>(std::move(trace)); }

 private:
  std::shared_ptr<const SolveTrace> trace_;
};

// A connector selection found no admissible vertex, or its forbidden set
// outgrew the counting bound the construction relies on.
class CountingViolation : public SolveError {
 public:
  using SolveError::SolveError;
};

class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, HypothesisReport report)
      : Error(what), report_(std::move(report)) {}
  const HypothesisReport& report() const noexcept { return report_; }

 private:
  HypothesisReport report_;
};

struct SolveOptions {
  OracleConfig oracle;
  bool trust_leaves = false;
  // Child calls are recorded only when set; the top node is always kept.
  bool record_trace = true;
};

struct NodeInfo;

// Solves many instances on one weld. Construction checks the hypotheses once
// and throws HypothesisError with the report when they fail.
class Solver {
 public:
  explicit Solver(const WeldTree& tree, SolveOptions opts = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  const AssembledGraph& graph() const noexcept { return graph_; }
  int rank() const noexcept { return rank_; }

  struct Result {
    PathCover cover;
    SolveTrace trace;
  };

  // Requires rank - 1 pairs, s_i black, t_i white, distinct in-range ids.
  // InputError on bad ids, HypothesisError on count or color, SolveError
  // (with the trace so far) if a construction step fails.
  Result solve(std::span<const Pair> pairs) const;

 private:
  AssembledGraph graph_;
  int rank_ = 0;
  SolveOptions opts_;
  std::unique_ptr<NodeInfo> root_;
};

Solver::Result solve(const WeldTree& tree, std::span<const Pair> pairs, SolveOptions opts = {});

// Pads `pairs` (fewer than k) to k pairs inside `range` and splices the k-cover
// back. Each step replaces the last pair (s, t) by (s, t') and (s', t) where
// s' black and t' white are adjacent free vertices, lowest ids first.
// Throws SolveError if no free adjacent pair exists.
PathCover reduce_pair_count(const AssembledGraph& g, VertexRange range, const PairSpec& pairs,
                            std::size_t k,
                            const std::function<PathCover(const PairSpec&)>& k_solver);

// Lowest-id vertex of `color` in `layer` outside `forbidden`. Throws
// CountingViolation if the deduplicated forbidden set exceeds `bound`, if the
// layer has no more than `bound` vertices of that color, or if none is free.
Vertex select_connector(const AssembledGraph& g, VertexRange layer, Color color,
                        std::span<const Vertex> forbidden, std::size_t bound);

// Threads path `path_index` of `cover` through every layer of `unused`: the
// first edge (a, b) of the path gets a Hamiltonian path of the layer between
// the cross partners of a and b inserted, and the next layer uses the first
// edge of the inserted piece. `ham` returns a Hamiltonian path of a layer
// between two of its vertices.
PathCover extend_through_empty_layers(
    const AssembledGraph& g, PathCover cover, std::size_t path_index,
    std::span<const VertexRange> unused,
    const std::function<Path(std::size_t, Vertex, Vertex)>& ham);

}  // namespace weldpath
