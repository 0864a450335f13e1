#include "weldpath/oracle.hpp"

#include <cstdlib>
#include <string>
#include <unordered_set>

namespace weldpath {

OracleConfig oracle_config_from_env() {
  OracleConfig cfg;
  if (const char* env = std::getenv("WELDPATH_ORACLE_BOUND")) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
      cfg.bound = value;
    } catch (const std::logic_error&) {
      throw InputError(std::string("WELDPATH_ORACLE_BOUND must be a positive integer, got \"") +
                       env + "\"");
    }
  }
  return cfg;
}

namespace {

// Depth-first search building path 0, then path 1, ... inside `range`.
class PathSearch {
 public:
  PathSearch(const AssembledGraph& g, VertexRange range, std::span<const Pair> pairs)
      : g_(g), range_(range), pairs_(pairs.begin(), pairs.end()) {
    const std::size_t n = range.size();
    used_.assign(n, 0);
    owner_.assign(n, -1);
    comp_.assign(n, -1);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      owner_[local(pairs_[i].s)] = static_cast<int>(i);
      owner_[local(pairs_[i].t)] = static_cast<int>(i);
    }
    paths_.resize(pairs_.size());
  }

  std::optional<PathCover> run() {
    if (pairs_.empty()) {
      if (range_.size() == 0) return PathCover{};
      return std::nullopt;
    }
    remaining_ = range_.size();
    if (open_path(0)) return paths_;
    return std::nullopt;
  }

 private:
  std::size_t local(Vertex v) const { return v - range_.first; }

  void take(std::size_t i, Vertex v) {
    used_[local(v)] = 1;
    paths_[i].push_back(v);
    --remaining_;
  }

  void untake(std::size_t i, Vertex v) {
    used_[local(v)] = 0;
    paths_[i].pop_back();
    ++remaining_;
  }

  // Starts path i at s_i.
  bool open_path(std::size_t i) {
    const Pair& p = pairs_[i];
    take(i, p.s);
    bool ok = false;
    if (p.s == p.t) {
      ok = close_path(i);
    } else if (feasible(i, p.s)) {
      ok = extend(i, p.s);
    }
    if (!ok) untake(i, p.s);
    return ok;
  }

  bool close_path(std::size_t i) {
    if (i + 1 == pairs_.size()) return remaining_ == 0;
    if (!feasible(i + 1, kNoVertex)) return false;
    return open_path(i + 1);
  }

  bool extend(std::size_t i, Vertex cur) {
    const Vertex target = pairs_[i].t;
    for (Vertex w : g_.neighbors(cur)) {
      if (!range_.contains(w) || used_[local(w)]) continue;
      if (owner_[local(w)] != -1 && w != target) continue;
      take(i, w);
      bool ok = false;
      if (w == target) {
        ok = close_path(i);
      } else if (feasible(i, w)) {
        ok = extend(i, w);
      }
      if (ok) return true;
      untake(i, w);
    }
    return false;
  }

  // Necessary conditions: every unused vertex lies in a component of the
  // unused subgraph that the open head or a later source can reach, and each
  // pending target shares a component with its source.
  bool feasible(std::size_t i, Vertex head) {
    const std::size_t n = range_.size();
    std::fill(comp_.begin(), comp_.end(), -1);
    int comps = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (used_[x] || comp_[x] != -1) continue;
      stack_.clear();
      stack_.push_back(static_cast<Vertex>(x));
      comp_[x] = comps;
      while (!stack_.empty()) {
        const Vertex y = stack_.back();
        stack_.pop_back();
        for (Vertex w : g_.neighbors(range_.first + y)) {
          if (!range_.contains(w)) continue;
          const std::size_t lw = local(w);
          if (used_[lw] || comp_[lw] != -1) continue;
          comp_[lw] = comps;
          stack_.push_back(static_cast<Vertex>(lw));
        }
      }
      ++comps;
    }
    if (comps == 0) return true;
    reached_.assign(static_cast<std::size_t>(comps), 0);
    if (head != kNoVertex) {
      bool target_reached = false;
      for (Vertex w : g_.neighbors(head)) {
        if (!range_.contains(w) || used_[local(w)]) continue;
        reached_[comp_[local(w)]] = 1;
      }
      const Vertex t = pairs_[i].t;
      target_reached = reached_[comp_[local(t)]] != 0;
      if (!target_reached) return false;
    }
    for (std::size_t j = (head != kNoVertex ? i + 1 : i); j < pairs_.size(); ++j) {
      const int cs = comp_[local(pairs_[j].s)];
      if (cs != comp_[local(pairs_[j].t)]) return false;
      reached_[cs] = 1;
    }
    for (int c = 0; c < comps; ++c) {
      if (!reached_[c]) return false;
    }
    return true;
  }

  const AssembledGraph& g_;
  VertexRange range_;
  std::vector<Pair> pairs_;
  std::vector<char> used_;
  std::vector<int> owner_;
  std::vector<int> comp_;
  std::vector<char> reached_;
  std::vector<Vertex> stack_;
  PathCover paths_;
  std::size_t remaining_ = 0;
};

void check_endpoints(VertexRange range, std::span<const Pair> pairs) {
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex v : {pairs[i].s, pairs[i].t}) {
      if (!range.contains(v)) {
        throw InputError("pair " + std::to_string(i) + ": vertex " + std::to_string(v) +
                         " out of range");
      }
    }
    if (!seen.insert(pairs[i].s).second ||
        (pairs[i].t != pairs[i].s && !seen.insert(pairs[i].t).second)) {
      throw InputError("pair " + std::to_string(i) + ": endpoint shared with another pair");
    }
  }
}

}  // namespace

std::optional<Path> ham_path_in_range(const AssembledGraph& g, VertexRange range, Vertex s,
                                      Vertex t) {
  const Pair p{s, t};
  check_endpoints(range, std::span<const Pair>(&p, 1));
  auto cover = PathSearch(g, range, std::span<const Pair>(&p, 1)).run();
  if (!cover) return std::nullopt;
  return std::move((*cover)[0]);
}

std::optional<Path> ham_path_between(const AssembledGraph& g, Vertex s, Vertex t) {
  return ham_path_in_range(g, {0, static_cast<Vertex>(g.num_vertices())}, s, t);
}

std::optional<PathCover> brute_pdpc(const AssembledGraph& g, std::span<const Pair> pairs,
                                    const OracleConfig& cfg) {
  if (g.num_vertices() > cfg.bound) {
    throw OracleRefusal("oracle refuses a " + std::to_string(g.num_vertices()) +
                        "-vertex graph (bound " + std::to_string(cfg.bound) + ")");
  }
  const VertexRange all{0, static_cast<Vertex>(g.num_vertices())};
  check_endpoints(all, pairs);
  return PathSearch(g, all, pairs).run();
}

bool certify_leaf(const LeafGraph& leaf, const OracleConfig& cfg, bool trust) {
  const std::size_t n = leaf.num_vertices();
  if (n == 1) return true;
  if (n == 0) return false;
  if (n > cfg.bound) {
    if (trust) return true;
    throw OracleRefusal("leaf with " + std::to_string(n) + " vertices exceeds oracle bound " +
                        std::to_string(cfg.bound) + "; pass the trust flag to skip");
  }
  const AssembledGraph g = AssembledGraph::from_edges(leaf.colors, leaf.edges);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const bool mixed = leaf.colors[a] != leaf.colors[b];
      if (leaf.mode == LaceMode::HamiltonianLaceable && !mixed) continue;
      if (!ham_path_between(g, a, b)) return false;
    }
  }
  return true;
}

}  // namespace weldpath
