#include <algorithm>
#include <sstream>

#include "pdpc_internal.hpp"

namespace weldpath {

NodeInfo NodeInfo::build(const WeldTree& tree, Vertex base) {
  NodeInfo info;
  info.rank = tree.rank();
  info.range = {base, base + static_cast<Vertex>(tree.num_vertices())};
  if (!tree.is_leaf()) {
    const auto& children = tree.node().children;
    info.layer_size = static_cast<Vertex>(children.front().num_vertices());
    Vertex at = base;
    for (const auto& c : children) {
      info.children.push_back(build(c, at));
      at += info.layer_size;
    }
  }
  return info;
}

// ---------------------------------------------------------------------------
// Trace and stats

nlohmann::json SolveTrace::to_json() const {
  nlohmann::json j;
  j["routine"] = routine;
  j["rank"] = rank;
  j["case"] = case_label;
  if (!branch.empty()) j["branch"] = branch;
  nlohmann::json layers = nlohmann::json::object();
  for (const auto& [name, idx] : layer_map) layers[name] = idx;
  j["layers"] = std::move(layers);
  j["pair_perm"] = pair_perm;
  j["role_swap"] = role_swap;
  nlohmann::json pp = nlohmann::json::array();
  for (const Pair& p : proof_pairs) pp.push_back({p.s, p.t});
  j["proof_pairs"] = std::move(pp);
  nlohmann::json cs = nlohmann::json::array();
  for (const Edge& e : connectors) cs.push_back({e.u, e.v});
  j["connectors"] = std::move(cs);
  nlohmann::json ch = nlohmann::json::array();
  for (const auto& c : children) ch.push_back(c.to_json());
  j["children"] = std::move(ch);
  return j;
}

LayerStats compute_layer_stats(std::size_t num_layers, std::span<const Pair> pairs,
                               const std::function<std::size_t(Vertex)>& layer_of) {
  LayerStats st;
  st.layers.resize(num_layers);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::size_t js = layer_of(pairs[i].s);
    const std::size_t jt = layer_of(pairs[i].t);
    if (js >= num_layers || jt >= num_layers) throw InputError("layer index out of range");
    auto& a = st.layers[js];
    auto& b = st.layers[jt];
    a.S.push_back(i);
    b.T.push_back(i);
    if (js == jt) {
      a.S_inner.push_back(i);
      a.T_inner.push_back(i);
      ++a.w;
    } else {
      a.S_split.push_back(i);
      b.T_split.push_back(i);
      ++a.w;
      ++b.w;
    }
  }
  return st;
}

LayerStats compute_layer_stats(const AssembledGraph& g, std::span<const Pair> pairs) {
  return compute_layer_stats(g.num_layers(), pairs, [&](Vertex v) { return g.layer_of(v); });
}

int classify_case(const LayerStats& stats, std::size_t n) {
  std::vector<std::size_t> full;
  for (std::size_t j = 0; j < stats.layers.size(); ++j) {
    if (stats.layers[j].w == n) full.push_back(j);
  }
  if (full.empty()) return 1;
  if (full.size() == 1) {
    const auto& l = stats.layers[full[0]];
    const bool s_in = l.S.size() == n;
    const bool t_in = l.T.size() == n;
    if (s_in && t_in) return 2;
    if (s_in || t_in) return 4;
    return 5;
  }
  if (full.size() == 2) {
    const auto& a = stats.layers[full[0]];
    const auto& b = stats.layers[full[1]];
    if ((a.S.size() == n && b.T.size() == n) || (b.S.size() == n && a.T.size() == n)) return 3;
    return 6;
  }
  throw SolveError("case dispatch: " + std::to_string(full.size()) + " layers touch all " +
                   std::to_string(n) + " pairs");
}

// ---------------------------------------------------------------------------
// Public building blocks

Vertex select_connector(const AssembledGraph& g, VertexRange layer, Color color,
                        std::span<const Vertex> forbidden, std::size_t bound) {
  std::vector<Vertex> f(forbidden.begin(), forbidden.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  std::size_t available = 0;
  for (Vertex x = layer.first; x < layer.last; ++x) {
    if (g.color(x) == color) ++available;
  }
  auto describe = [&] {
    return std::string(" (layer [") + std::to_string(layer.first) + "," +
           std::to_string(layer.last) + "), " + to_string(color) + " vertices " +
           std::to_string(available) + ", forbidden " + std::to_string(f.size()) + ", bound " +
           std::to_string(bound) + ")";
  };
  if (f.size() > bound) throw CountingViolation("forbidden set exceeds its bound" + describe());
  if (available <= bound) throw CountingViolation("bound leaves no room in the layer" + describe());
  for (Vertex x = layer.first; x < layer.last; ++x) {
    if (g.color(x) == color && !std::binary_search(f.begin(), f.end(), x)) return x;
  }
  throw CountingViolation("no admissible vertex" + describe());
}

PathCover reduce_pair_count(const AssembledGraph& g, VertexRange range, const PairSpec& pairs,
                            std::size_t k,
                            const std::function<PathCover(const PairSpec&)>& k_solver) {
  if (pairs.empty()) throw InputError("reduce_pair_count needs at least one pair");
  if (pairs.size() > k) {
    throw InputError("cannot reduce " + std::to_string(pairs.size()) + " pairs to " +
                     std::to_string(k));
  }
  std::vector<char> taken(range.size(), 0);
  for (const Pair& p : pairs) {
    if (!range.contains(p.s) || !range.contains(p.t)) throw InputError("pair outside range");
    taken[p.s - range.first] = 1;
    taken[p.t - range.first] = 1;
  }
  PairSpec cur = pairs;
  while (cur.size() < k) {
    Vertex sbar = kNoVertex;
    Vertex tbar = kNoVertex;
    for (Vertex x = range.first; x < range.last && sbar == kNoVertex; ++x) {
      if (taken[x - range.first] || g.color(x) != Color::Black) continue;
      for (Vertex y : g.neighbors(x)) {
        if (range.contains(y) && !taken[y - range.first] && g.color(y) == Color::White) {
          sbar = x;
          tbar = y;
          break;
        }
      }
    }
    if (sbar == kNoVertex) {
      throw SolveError("padding: no free adjacent black/white pair left in [" +
                       std::to_string(range.first) + "," + std::to_string(range.last) + ")");
    }
    taken[sbar - range.first] = 1;
    taken[tbar - range.first] = 1;
    const Pair last = cur.back();
    cur.back() = {last.s, tbar};
    cur.push_back({sbar, last.t});
  }
  PathCover c = k_solver(cur);
  if (c.size() != k) throw SolveError("padded solver returned the wrong number of paths");
  while (c.size() > pairs.size()) {
    Path tail = std::move(c.back());
    c.pop_back();
    if (c.back().empty() || tail.empty() || !g.adjacent(c.back().back(), tail.front())) {
      throw SolveError("padding splice: padded endpoints are not joined");
    }
    c.back().insert(c.back().end(), tail.begin(), tail.end());
  }
  return c;
}

PathCover extend_through_empty_layers(
    const AssembledGraph& g, PathCover cover, std::size_t path_index,
    std::span<const VertexRange> unused,
    const std::function<Path(std::size_t, Vertex, Vertex)>& ham) {
  if (unused.empty()) return cover;
  if (path_index >= cover.size() || cover[path_index].size() < 2) {
    throw SolveError("extension: path " + std::to_string(path_index) + " has no edge to detach");
  }
  Path& p = cover[path_index];
  std::size_t pos = 0;
  for (std::size_t k = 0; k < unused.size(); ++k) {
    const Vertex a = detail::cross_partner(g, p[pos], unused[k]);
    const Vertex b = detail::cross_partner(g, p[pos + 1], unused[k]);
    Path h = ham(k, a, b);
    if (h.size() < 2 || h.front() != a || h.back() != b) {
      throw SolveError("extension: layer path has wrong endpoints");
    }
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(pos + 1), h.begin(), h.end());
    ++pos;
  }
  return cover;
}

namespace detail {

void fail(const std::string& what) { throw SolveError(what); }

Vertex cross_partner(const AssembledGraph& g, Vertex v, VertexRange range) {
  auto nb = g.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), range.first);
  if (it == nb.end() || *it >= range.last || (it + 1 != nb.end() && *(it + 1) < range.last)) {
    fail("vertex " + std::to_string(v) + " lacks a unique neighbor in [" +
         std::to_string(range.first) + "," + std::to_string(range.last) + ")");
  }
  return *it;
}

std::size_t index_of(const Path& p, Vertex v) {
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) fail("vertex " + std::to_string(v) + " is not on the path");
  return static_cast<std::size_t>(it - p.begin());
}

bool contains(const Path& p, Vertex v) { return std::find(p.begin(), p.end(), v) != p.end(); }

Vertex pred(const Path& p, Vertex v) {
  const std::size_t i = index_of(p, v);
  if (i == 0) fail("vertex " + std::to_string(v) + " starts its path");
  return p[i - 1];
}

Vertex succ(const Path& p, Vertex v) {
  const std::size_t i = index_of(p, v);
  if (i + 1 == p.size()) fail("vertex " + std::to_string(v) + " ends its path");
  return p[i + 1];
}

Path seg(const Path& p, Vertex a, Vertex b) {
  const std::size_t i = index_of(p, a);
  const std::size_t j = index_of(p, b);
  if (i <= j) return Path(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(j + 1));
  Path out(p.begin() + static_cast<std::ptrdiff_t>(j), p.begin() + static_cast<std::ptrdiff_t>(i + 1));
  std::reverse(out.begin(), out.end());
  return out;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::size_t path_containing(const PathCover& cover, Vertex v) {
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (contains(cover[i], v)) return i;
  }
  fail("vertex " + std::to_string(v) + " is on no path");
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(Engine& e, const NodeInfo& nd, std::span<const Pair> pairs, SolveTrace& tr)
    : eng(e), node(nd), trace(tr), used(nd.num_layers(), 0) {
  trace.rank = nd.rank;
  for (std::size_t i = 0; i < pairs.size(); ++i) sl.push_back({pairs[i].s, pairs[i].t, i});
}

Vertex Frame::partner(Vertex v, std::size_t j) const {
  return cross_partner(eng.graph(), v, node.layer(j));
}

Color Frame::color(Vertex v) const { return eng.graph().color(v); }

LayerStats Frame::stats() const {
  PairSpec ps;
  for (const Slot& s : sl) ps.push_back({s.s, s.t});
  return compute_layer_stats(num_layers(), ps, [&](Vertex v) { return layer(v); });
}

void Frame::role_swap() {
  for (Slot& s : sl) {
    std::swap(s.s, s.t);
    s.v = s.u = kNoVertex;
  }
  src = opposite(src);
  swapped = !swapped;
  trace.role_swap = swapped;
}

void Frame::swap_slots(std::size_t a, std::size_t b) {
  if (a != b) std::swap(sl[a], sl[b]);
}

void Frame::move_slot(std::size_t from, std::size_t to) {
  const Slot s = sl[from];
  sl.erase(sl.begin() + static_cast<std::ptrdiff_t>(from));
  sl.insert(sl.begin() + static_cast<std::ptrdiff_t>(to), s);
}

void Frame::name_layer(const std::string& name, std::size_t j) {
  trace.layer_map.emplace_back(name, j);
}

void Frame::set_branch(const std::string& b) {
  trace.branch = trace.branch.empty() ? b : trace.branch + "/" + b;
}

std::size_t Frame::free_layer(std::initializer_list<std::size_t> taken) const {
  for (std::size_t j = 0; j < num_layers(); ++j) {
    if (std::find(taken.begin(), taken.end(), j) == taken.end()) return j;
  }
  fail("no free layer left");
}

PathCover Frame::cover(std::size_t j, const PairSpec& pairs) {
  require(j < num_layers(), "layer index out of range");
  for (const Pair& p : pairs) {
    require(node.layer(j).contains(p.s) && node.layer(j).contains(p.t),
            "child pair (" + std::to_string(p.s) + "," + std::to_string(p.t) +
                ") leaves layer " + std::to_string(j));
  }
  mark(j);
  SolveTrace scratch;
  SolveTrace& child = eng.recording() ? trace.children.emplace_back() : scratch;
  return eng.cover(node.children[j], pairs, child);
}

Path Frame::ham(std::size_t j, Vertex a, Vertex b) {
  PathCover c = cover(j, {{a, b}});
  return std::move(c[0]);
}

Vertex Frame::pick(std::size_t j, Color c, std::vector<Vertex> forbidden, std::size_t bound) {
  return select_connector(eng.graph(), node.layer(j), c, forbidden, bound);
}

Path Frame::chain(std::initializer_list<Path> pieces) const {
  Path out;
  for (const Path& piece : pieces) {
    if (piece.empty()) continue;
    if (!out.empty()) {
      require(eng.graph().adjacent(out.back(), piece.front()),
              "splice joins non-adjacent " + std::to_string(out.back()) + " and " +
                  std::to_string(piece.front()));
      require(color(out.back()) != color(piece.front()), "splice joins equal colors");
    }
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

PathCover Frame::finish(PathCover proof_paths) {
  require(proof_paths.size() == n(), "construction produced the wrong number of paths");
  for (std::size_t p = 0; p < n(); ++p) {
    require(!proof_paths[p].empty() && proof_paths[p].front() == sl[p].s &&
                proof_paths[p].back() == sl[p].t,
            "path " + std::to_string(p) + " has wrong endpoints");
  }
  std::vector<std::size_t> idx;
  std::vector<VertexRange> ranges;
  for (std::size_t j = 0; j < num_layers(); ++j) {
    if (!used[j]) {
      idx.push_back(j);
      ranges.push_back(node.layer(j));
    }
  }
  if (!idx.empty()) {
    trace.layer_map.emplace_back("extended", idx.size());
    proof_paths = extend_through_empty_layers(
        eng.graph(), std::move(proof_paths), 0, ranges,
        [&](std::size_t k, Vertex a, Vertex b) { return ham(idx[k], a, b); });
  }

  // Node-level check so a broken splice fails here, with its trace.
  const AssembledGraph& g = eng.graph();
  std::vector<char> seen(node.range.size(), 0);
  std::size_t count = 0;
  for (const Path& p : proof_paths) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      require(node.range.contains(p[k]), "path leaves the node");
      require(!seen[p[k] - node.range.first], "vertex " + std::to_string(p[k]) + " used twice");
      seen[p[k] - node.range.first] = 1;
      ++count;
      if (k > 0) require(g.adjacent(p[k - 1], p[k]), "path steps along a non-edge");
    }
  }
  require(count == node.range.size(), "cover misses vertices of the node");

  trace.pair_perm.clear();
  trace.proof_pairs.clear();
  PathCover out(n());
  for (std::size_t p = 0; p < n(); ++p) {
    trace.pair_perm.push_back(sl[p].caller);
    trace.proof_pairs.push_back({sl[p].s, sl[p].t});
    out[sl[p].caller] = swapped ? reversed(std::move(proof_paths[p])) : std::move(proof_paths[p]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine

PathCover Engine::cover(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace) {
  trace.rank = node.rank;
  if (pairs.empty()) fail("empty pair list for a rank-" + std::to_string(node.rank) + " cover");
  PairSpec norm = pairs;
  std::vector<char> flipped(pairs.size(), 0);
  for (std::size_t i = 0; i < norm.size(); ++i) {
    const Color cs = g_.color(norm[i].s);
    const Color ct = g_.color(norm[i].t);
    if (cs == ct && !(node.rank == 1 && norm[i].s == norm[i].t)) {
      fail("pair (" + std::to_string(norm[i].s) + "," + std::to_string(norm[i].t) +
           ") has equal colors");
    }
    if (cs == Color::White && norm[i].s != norm[i].t) {
      std::swap(norm[i].s, norm[i].t);
      flipped[i] = 1;
    }
  }
  const std::size_t k = norm.size();
  const std::size_t full = static_cast<std::size_t>(node.rank - 1);
  PathCover out;
  if (node.rank == 1) {
    out = leaf_path(node, norm, trace);
  } else if (k < full) {
    trace.routine = "reduce";
    out = reduce_pair_count(g_, node.range, norm, full, [&](const PairSpec& padded) {
      SolveTrace scratch;
      SolveTrace& child = record_ ? trace.children.emplace_back() : scratch;
      return dispatch(node, padded, child);
    });
  } else if (k == full) {
    out = dispatch(node, norm, trace);
  } else {
    fail(std::to_string(k) + " pairs requested from a rank-" + std::to_string(node.rank) +
         " graph");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (flipped[i]) std::reverse(out[i].begin(), out[i].end());
  }
  return out;
}

PathCover Engine::leaf_path(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace) {
  trace.routine = "leaf";
  require(pairs.size() == 1, "a leaf takes exactly one pair");
  const Pair p = pairs[0];
  if (node.range.size() == 1) {
    require(p.s == p.t && p.s == node.range.first, "single-vertex leaf needs s = t");
    return {{p.s}};
  }
  auto path = ham_path_in_range(g_, node.range, p.s, p.t);
  if (!path) {
    fail("leaf [" + std::to_string(node.range.first) + "," + std::to_string(node.range.last) +
         ") has no Hamiltonian path " + std::to_string(p.s) + " -> " + std::to_string(p.t) +
         "; it is not laceable");
  }
  return {std::move(*path)};
}

PathCover Engine::dispatch(const NodeInfo& node, const PairSpec& pairs, SolveTrace& trace) {
  Frame f(*this, node, pairs, trace);
  if (node.rank == 2) return base_rank2(f);
  if (node.rank == 3) return base_rank3(f);
  if (node.rank == 4 && node.layer_size <= 8) return base_rank4_small(f);
  return induction_step(f);
}

// ---------------------------------------------------------------------------
// Rank 2: one pair, layers are rank-1 graphs.

PathCover base_rank2(Frame& f) {
  f.trace.routine = "rank2";
  require(f.n() == 1, "rank 2 takes one pair");
  const Vertex s = f.sl[0].s;
  const Vertex t = f.sl[0].t;
  const std::size_t js = f.layer(s);
  const std::size_t jt = f.layer(t);
  if (f.node.layer_size == 1) {
    f.set_case("1");
    require(f.num_layers() == 2, "a weld of single vertices is bipartite only as K2");
    f.mark(0);
    f.mark(1);
    return f.finish({f.chain({{s}, {t}})});
  }
  f.set_case("2");
  f.name_layer("G1", js);
  if (js == jt) {
    f.set_branch("same-layer");
    return f.finish({f.ham(js, s, t)});
  }
  f.set_branch("split");
  f.name_layer("G2", jt);
  const Vertex v = f.pick(js, f.dst(), {}, 0);
  const Vertex u = f.partner(v, jt);
  f.record_connector(v, u);
  return f.finish({f.chain({f.ham(js, s, v), f.ham(jt, u, t)})});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Solver

Solver::Solver(const WeldTree& tree, SolveOptions opts) : opts_(opts) {
  HypothesisReport report = check_theorem_hypotheses(tree, opts_.oracle, opts_.trust_leaves);
  if (tree.rank() < 2) {
    report.checks.push_back({"$", "rank", false, "rank must be at least 2"});
  }
  if (!report.ok()) {
    const std::string what = "weld violates the theorem hypotheses:\n" + report.summary();
    throw HypothesisError(what, std::move(report));
  }
  graph_ = assemble(tree);
  rank_ = tree.rank();
  root_ = std::make_unique<NodeInfo>(NodeInfo::build(tree, 0));
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

Solver::Result Solver::solve(std::span<const Pair> pairs) const {
  const std::size_t n = graph_.num_vertices();
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex v : {pairs[i].s, pairs[i].t}) {
      if (v >= n) {
        throw InputError("pair " + std::to_string(i) + ": vertex " + std::to_string(v) +
                         " out of range");
      }
      if (seen[v]) {
        throw InputError("pair " + std::to_string(i) + ": vertex " + std::to_string(v) +
                         " used by two endpoints");
      }
      seen[v] = 1;
    }
  }
  auto hypothesis = [](const std::string& check, const std::string& detail) {
    HypothesisReport r;
    r.checks.push_back({"pairs", check, false, detail});
    return HypothesisError(detail, std::move(r));
  };
  if (pairs.size() != static_cast<std::size_t>(rank_ - 1)) {
    throw hypothesis("pair-count", "a rank-" + std::to_string(rank_) + " graph needs " +
                                       std::to_string(rank_ - 1) + " pairs, got " +
                                       std::to_string(pairs.size()));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (graph_.color(pairs[i].s) != Color::Black || graph_.color(pairs[i].t) != Color::White) {
      throw hypothesis("pair-colors", "pair " + std::to_string(i) +
                                          ": sources must be black and targets white");
    }
  }
  detail::Engine eng(graph_, opts_.record_trace);
  Result r;
  try {
    r.cover = eng.cover(*root_, PairSpec(pairs.begin(), pairs.end()), r.trace);
  } catch (SolveError& e) {
    e.attach(r.trace);
    throw;
  } catch (const Error& e) {
    SolveError wrapped(std::string("internal: ") + e.what());
    wrapped.attach(r.trace);
    throw wrapped;
  }
  return r;
}

Solver::Result solve(const WeldTree& tree, std::span<const Pair> pairs, SolveOptions opts) {
  return Solver(tree, opts).solve(pairs);
}

}  // namespace weldpath
