#include "weldpath/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace weldpath {

const char* to_string(Color c) noexcept {
  return c == Color::Black ? "black" : "white";
}

AssembledGraph AssembledGraph::from_edges(std::vector<Color> colors,
                                          std::span<const Edge> edges,
                                          std::vector<std::uint32_t> layer_of) {
  AssembledGraph g;
  const std::size_t n = colors.size();
  g.colors_ = std::move(colors);

  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (e.u == e.v) {
      throw InputError("loop at vertex " + std::to_string(e.u));
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  g.num_edges_ = g.targets_.size() / 2;

  if (layer_of.empty()) layer_of.assign(n, 0);
  if (layer_of.size() != n) throw InputError("layer_of size does not match vertex count");
  g.layer_of_ = std::move(layer_of);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t layer = g.layer_of_[v];
    if (layer == g.layer_ranges_.size()) {
      g.layer_ranges_.push_back({v, v + 1});
    } else if (layer + 1 == g.layer_ranges_.size() && g.layer_ranges_.back().last == v) {
      g.layer_ranges_.back().last = v + 1;
    } else {
      throw InputError("layers must occupy contiguous id ranges in order (vertex " +
                       std::to_string(v) + ")");
    }
  }
  return g;
}

void AssembledGraph::check(Vertex v) const {
  if (v >= colors_.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (graph has " +
                     std::to_string(colors_.size()) + " vertices)");
  }
}

std::span<const Vertex> AssembledGraph::neighbors(Vertex v) const {
  check(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool AssembledGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Color AssembledGraph::color(Vertex v) const {
  check(v);
  return colors_[v];
}

std::uint32_t AssembledGraph::layer_of(Vertex v) const {
  check(v);
  return layer_of_[v];
}

VertexRange AssembledGraph::layer_range(std::size_t layer) const {
  if (layer >= layer_ranges_.size()) throw InputError("layer index out of range");
  return layer_ranges_[layer];
}

Coloring AssembledGraph::coloring() const noexcept {
  Coloring c;
  for (Color col : colors_) (col == Color::Black ? c.black_count : c.white_count)++;
  return c;
}

std::vector<Edge> AssembledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < colors_.size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool is_bipartite_properly_colored(const AssembledGraph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (g.color(u) == g.color(v)) return false;
    }
  }
  return true;
}

bool is_equitable(const AssembledGraph& g) {
  const Coloring c = g.coloring();
  return c.black_count == c.white_count;
}

namespace {

void check_distinct_endpoints(const AssembledGraph& g, std::span<const Pair> pairs) {
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex v : {pairs[i].s, pairs[i].t}) {
      if (v >= g.num_vertices()) {
        throw InputError("pair " + std::to_string(i) + ": vertex " + std::to_string(v) +
                         " out of range");
      }
      if (!seen.insert(v).second) {
        throw InputError("pair " + std::to_string(i) + ": duplicate endpoint " +
                         std::to_string(v));
      }
    }
  }
}

}  // namespace

bool is_balanced(const AssembledGraph& g, std::span<const Pair> pairs) {
  check_distinct_endpoints(g, pairs);
  long long diff = 0;
  for (const Pair& p : pairs) {
    for (Vertex v : {p.s, p.t}) diff += g.color(v) == Color::Black ? 1 : -1;
  }
  const Coloring c = g.coloring();
  const long long rhs = 2 * (static_cast<long long>(c.black_count) -
                             static_cast<long long>(c.white_count));
  return diff == rhs;
}

void validate_pairs(const AssembledGraph& g, std::span<const Pair> pairs) {
  check_distinct_endpoints(g, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (g.color(pairs[i].s) != Color::Black) {
      throw InputError("pair " + std::to_string(i) + ": source " +
                       std::to_string(pairs[i].s) + " is not black");
    }
    if (g.color(pairs[i].t) != Color::White) {
      throw InputError("pair " + std::to_string(i) + ": target " +
                       std::to_string(pairs[i].t) + " is not white");
    }
  }
}

std::string to_dot(const AssembledGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [color=" << to_string(g.color(v)) << ", layer=" << g.layer_of(v)
        << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const AssembledGraph& g) {
  nlohmann::json colors = nlohmann::json::array();
  for (Color c : g.colors()) colors.push_back(to_string(c));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"num_vertices", g.num_vertices()},
          {"colors", colors},
          {"edges", edges},
          {"layer_of", g.layers()}};
}

}  // namespace weldpath
