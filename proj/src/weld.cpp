#include "weldpath/weld.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace weldpath {

// ---------------------------------------------------------------------------
// MatchingMap

void MatchingMap::set(std::size_t from, std::size_t to, std::vector<Vertex> forward) {
  if (from == to) throw ConstructionError("matching of a layer with itself");
  std::vector<Vertex> inverse(forward.size(), kNoVertex);
  for (Vertex x = 0; x < forward.size(); ++x) {
    const Vertex y = forward[x];
    if (y >= forward.size() || inverse[y] != kNoVertex) {
      throw ConstructionError("matching " + std::to_string(from) + "-" + std::to_string(to) +
                              " is not a bijection at vertex " + std::to_string(x));
    }
    inverse[y] = x;
  }
  if (from > to) {
    std::swap(from, to);
    std::swap(forward, inverse);
  }
  pairs_[{from, to}] = Entry{std::move(forward), std::move(inverse)};
}

bool MatchingMap::contains(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return pairs_.count({i, j}) != 0;
}

Vertex MatchingMap::partner(std::size_t from, std::size_t to, Vertex local) const {
  const bool forward = from < to;
  auto it = pairs_.find(forward ? std::pair{from, to} : std::pair{to, from});
  if (it == pairs_.end()) {
    throw ConstructionError("no matching between layers " + std::to_string(from) + " and " +
                            std::to_string(to));
  }
  const auto& arr = forward ? it->second.forward : it->second.inverse;
  if (local >= arr.size()) throw InputError("local vertex out of range in matching lookup");
  return arr[local];
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> MatchingMap::forward_arrays()
    const {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> out;
  for (const auto& [key, entry] : pairs_) out.emplace(key, entry.forward);
  return out;
}

bool operator==(const MatchingMap& a, const MatchingMap& b) {
  if (a.pairs_.size() != b.pairs_.size()) return false;
  for (auto ia = a.pairs_.begin(), ib = b.pairs_.begin(); ia != a.pairs_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.forward != ib->second.forward) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// WeldTree

int WeldTree::rank() const noexcept {
  return is_leaf() ? 1 : node().rank;
}

std::size_t WeldTree::num_vertices() const noexcept {
  if (is_leaf()) return leaf().num_vertices();
  std::size_t n = 0;
  for (const auto& c : node().children) n += c.num_vertices();
  return n;
}

bool operator==(const WeldTree& a, const WeldTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf() == b.leaf();
  const WeldNode& x = a.node();
  const WeldNode& y = b.node();
  return x.rank == y.rank && x.children == y.children && x.matchings == y.matchings;
}

WeldTree make_leaf(LeafGraph leaf) {
  return WeldTree{std::move(leaf)};
}

WeldTree make_node(int rank, std::vector<WeldTree> children, MatchingMap matchings) {
  return WeldTree{WeldNode{rank, std::move(children), std::move(matchings)}};
}

WeldTree single_vertex_leaf(Color color) {
  return make_leaf(LeafGraph{{color}, {}, LaceMode::HamiltonianConnected});
}

namespace {

void collect_colors(const WeldTree& t, std::vector<Color>& out) {
  if (t.is_leaf()) {
    out.insert(out.end(), t.leaf().colors.begin(), t.leaf().colors.end());
    return;
  }
  for (const auto& c : t.node().children) collect_colors(c, out);
}

std::string child_path(const std::string& path, std::size_t i) {
  return path + ".children[" + std::to_string(i) + "]";
}

std::string matching_path(const std::string& path, std::size_t i, std::size_t j) {
  return path + ".matchings[\"" + std::to_string(i) + "-" + std::to_string(j) + "\"]";
}

// Emits colors and edges of `t` with ids offset by colors.size() on entry.
// `strict` adds the hypotheses that parse_weld_spec enforces.
void flatten(const WeldTree& t, std::vector<Color>& colors, std::vector<Edge>& edges,
             const std::string& path, bool strict) {
  const Vertex base = static_cast<Vertex>(colors.size());
  if (t.is_leaf()) {
    const LeafGraph& leaf = t.leaf();
    const std::size_t n = leaf.num_vertices();
    if (n == 0) throw ConstructionError(path + ": leaf has no vertices");
    if (strict && n > 1 && n % 2 != 0) {
      throw ConstructionError(path + ": leaf has an odd number (" + std::to_string(n) +
                              ") of vertices; rank-1 graphs must be a single vertex or even");
    }
    colors.insert(colors.end(), leaf.colors.begin(), leaf.colors.end());
    for (const Edge& e : leaf.edges) {
      if (e.u >= n || e.v >= n || e.u == e.v) {
        throw ConstructionError(path + ": invalid leaf edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
      }
      if (strict && leaf.colors[e.u] == leaf.colors[e.v]) {
        throw ConstructionError(path + ": leaf edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") joins equal colors");
      }
      edges.push_back({base + e.u, base + e.v});
    }
    return;
  }

  const WeldNode& node = t.node();
  const std::size_t layers = node.children.size();
  if (node.rank < 2) throw ConstructionError(path + ": node rank must be at least 2");
  if (layers < 2) throw ConstructionError(path + ": a weld needs at least two layers");
  if (strict && layers < static_cast<std::size_t>(node.rank)) {
    throw ConstructionError(path + ": rank-" + std::to_string(node.rank) + " node welds only " +
                            std::to_string(layers) +
                            " layers; a transposition-like graph of rank n needs at least n");
  }
  std::vector<Vertex> starts;
  for (std::size_t i = 0; i < layers; ++i) {
    const WeldTree& child = node.children[i];
    if (child.rank() != node.rank - 1) {
      throw ConstructionError(child_path(path, i) + ": rank " + std::to_string(child.rank()) +
                              " under a rank-" + std::to_string(node.rank) + " node");
    }
    starts.push_back(static_cast<Vertex>(colors.size()));
    flatten(child, colors, edges, child_path(path, i), strict);
  }
  const Vertex layer_size = static_cast<Vertex>(node.children[0].num_vertices());
  for (std::size_t i = 1; i < layers; ++i) {
    if (node.children[i].num_vertices() != layer_size) {
      throw ConstructionError(child_path(path, i) + ": has " +
                              std::to_string(node.children[i].num_vertices()) +
                              " vertices, layer 0 has " + std::to_string(layer_size));
    }
  }
  if (node.matchings.size() != layers * (layers - 1) / 2) {
    for (std::size_t i = 0; i < layers; ++i) {
      for (std::size_t j = i + 1; j < layers; ++j) {
        if (!node.matchings.contains(i, j)) {
          throw ConstructionError(matching_path(path, i, j) + ": matching missing");
        }
      }
    }
    throw ConstructionError(path + ": matchings reference layers that do not exist");
  }
  for (const auto& [key, forward] : node.matchings.forward_arrays()) {
    const auto [i, j] = key;
    if (j >= layers) throw ConstructionError(matching_path(path, i, j) + ": no such layer");
    if (forward.size() != layer_size) {
      throw ConstructionError(matching_path(path, i, j) + ": has " +
                              std::to_string(forward.size()) + " entries, expected " +
                              std::to_string(layer_size));
    }
    for (Vertex x = 0; x < layer_size; ++x) {
      const Vertex a = starts[i] + x;
      const Vertex b = starts[j] + forward[x];
      if (colors[a] == colors[b]) {
        throw ConstructionError(matching_path(path, i, j) + ": vertex " + std::to_string(x) +
                                " of layer " + std::to_string(i) + " and vertex " +
                                std::to_string(forward[x]) + " of layer " + std::to_string(j) +
                                " are both " + to_string(colors[a]));
      }
      edges.push_back({a, b});
    }
  }
}

}  // namespace

std::vector<Color> flatten_colors(const WeldTree& tree) {
  std::vector<Color> out;
  out.reserve(tree.num_vertices());
  collect_colors(tree, out);
  return out;
}

AssembledGraph assemble(const WeldTree& tree) {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  flatten(tree, colors, edges, "$", false);
  std::vector<std::uint32_t> layer_of(colors.size(), 0);
  if (!tree.is_leaf()) {
    const auto& children = tree.node().children;
    const std::size_t size = children[0].num_vertices();
    for (std::size_t v = 0; v < colors.size(); ++v) {
      layer_of[v] = static_cast<std::uint32_t>(v / size);
    }
  }
  AssembledGraph g = AssembledGraph::from_edges(std::move(colors), edges, std::move(layer_of));
  if (!is_bipartite_properly_colored(g)) {
    throw ConstructionError("assembled graph is not properly two-colored");
  }
  return g;
}

void validate_weld(const WeldTree& tree) {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  flatten(tree, colors, edges, "$", true);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

bool is_even_permutation(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0;
}

// Position of `perm` in lexicographic order of all permutations of 0..n-1.
Vertex lex_rank(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  Vertex rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    Vertex fact = 1;
    for (std::size_t k = 2; k < n - i; ++k) fact *= static_cast<Vertex>(k);
    rank += smaller * fact;
  }
  return rank;
}

WeldTree build_transposition(const std::vector<std::vector<int>>& perms, Vertex base,
                             std::size_t fixed) {
  const std::size_t n = perms[base].size();
  const int rank = static_cast<int>(n - fixed);
  if (rank == 1) {
    return single_vertex_leaf(is_even_permutation(perms[base]) ? Color::Black : Color::White);
  }
  Vertex child_size = 1;
  for (int k = 2; k < rank; ++k) child_size *= static_cast<Vertex>(k);

  std::vector<WeldTree> children;
  children.reserve(rank);
  for (int c = 0; c < rank; ++c) {
    children.push_back(build_transposition(perms, base + c * child_size, fixed + 1));
  }

  // Value at position `fixed` selects the child; free values in ascending order.
  std::vector<int> free_values(perms[base].begin() + static_cast<long>(fixed),
                               perms[base].end());
  std::sort(free_values.begin(), free_values.end());

  MatchingMap matchings;
  for (int a = 0; a < rank; ++a) {
    for (int b = a + 1; b < rank; ++b) {
      std::vector<Vertex> forward(child_size);
      for (Vertex x = 0; x < child_size; ++x) {
        std::vector<int> perm = perms[base + a * child_size + x];
        if (perm[fixed] != free_values[a]) {
          throw ConstructionError("transposition layer " + std::to_string(a) +
                                  " is not contiguous");
        }
        auto pos = std::find(perm.begin() + static_cast<long>(fixed) + 1, perm.end(),
                             free_values[b]);
        std::iter_swap(perm.begin() + static_cast<long>(fixed), pos);
        const Vertex id = lex_rank(perm);
        const Vertex lo = base + b * child_size;
        if (id < lo || id >= lo + child_size) {
          throw ConstructionError("Cayley cross edge from layer " + std::to_string(a) +
                                  " leaves layer " + std::to_string(b));
        }
        forward[x] = id - lo;
      }
      // set() rejects anything that is not a perfect matching.
      matchings.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                    std::move(forward));
    }
  }
  return make_node(rank, std::move(children), std::move(matchings));
}

}  // namespace

WeldTree transposition_graph(int n) {
  if (n < 1 || n > 7) {
    throw InputError("transposition graph rank must be in [1, 7], got " + std::to_string(n));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return build_transposition(perms, 0, 0);
}

WeldTree complete_bipartite_leaf(int m) {
  if (m < 1) throw InputError("K_{m,m} needs m >= 1");
  const auto mm = static_cast<Vertex>(m);
  LeafGraph leaf;
  leaf.colors.assign(mm, Color::Black);
  leaf.colors.resize(2 * mm, Color::White);
  for (Vertex b = 0; b < mm; ++b) {
    for (Vertex w = 0; w < mm; ++w) leaf.edges.push_back({b, mm + w});
  }
  leaf.mode = LaceMode::HamiltonianLaceable;
  return make_leaf(std::move(leaf));
}

MatchingMap random_matchings(std::span<const WeldTree> children, std::uint64_t seed) {
  std::vector<std::vector<Color>> colors;
  for (const auto& c : children) colors.push_back(flatten_colors(c));
  for (std::size_t i = 1; i < colors.size(); ++i) {
    if (colors[i].size() != colors[0].size()) {
      throw ConstructionError("children differ in size (layer " + std::to_string(i) + ")");
    }
  }
  auto by_color = [](const std::vector<Color>& cs, Color want) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < cs.size(); ++v) {
      if (cs[v] == want) out.push_back(v);
    }
    return out;
  };

  std::mt19937_64 rng(seed);
  MatchingMap out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      std::vector<Vertex> forward(colors[i].size(), kNoVertex);
      for (Color c : {Color::Black, Color::White}) {
        const auto from = by_color(colors[i], c);
        auto to = by_color(colors[j], opposite(c));
        if (from.size() != to.size()) {
          throw ConstructionError("layers " + std::to_string(i) + " and " + std::to_string(j) +
                                  " cannot be matched: " + std::to_string(from.size()) + " " +
                                  to_string(c) + " vs " + std::to_string(to.size()) + " " +
                                  to_string(opposite(c)));
        }
        std::shuffle(to.begin(), to.end(), rng);
        for (std::size_t k = 0; k < from.size(); ++k) forward[from[k]] = to[k];
      }
      out.set(i, j, std::move(forward));
    }
  }
  return out;
}

WeldTree kmm_weld(int rank, int m, int layers, std::uint64_t seed) {
  if (rank < 1) throw InputError("rank must be at least 1");
  if (rank == 1) return complete_bipartite_leaf(m);
  if (layers < rank) {
    throw InputError("a rank-" + std::to_string(rank) + " weld needs at least " +
                     std::to_string(rank) + " layers, got " + std::to_string(layers));
  }
  std::mt19937_64 rng(seed);
  std::vector<WeldTree> children;
  for (int i = 0; i < layers; ++i) children.push_back(kmm_weld(rank - 1, m, layers, rng()));
  MatchingMap matchings = random_matchings(children, rng());
  return make_node(rank, std::move(children), std::move(matchings));
}

// ---------------------------------------------------------------------------
// Weld-spec JSON

nlohmann::json serialize_weld_spec(const WeldTree& tree) {
  using nlohmann::json;
  if (tree.is_leaf()) {
    const LeafGraph& leaf = tree.leaf();
    json colors = json::array();
    for (Color c : leaf.colors) colors.push_back(to_string(c));
    json edges = json::array();
    for (const Edge& e : leaf.edges) edges.push_back({e.u, e.v});
    return {{"rank", 1},
            {"colors", colors},
            {"edges", edges},
            {"mode", leaf.mode == LaceMode::HamiltonianLaceable ? "laceable" : "connected"}};
  }
  const WeldNode& node = tree.node();
  json children = json::array();
  for (const auto& c : node.children) children.push_back(serialize_weld_spec(c));
  json matchings = json::object();
  for (const auto& [key, forward] : node.matchings.forward_arrays()) {
    matchings[std::to_string(key.first) + "-" + std::to_string(key.second)] = forward;
  }
  return {{"rank", node.rank}, {"children", children}, {"matchings", matchings}};
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

Vertex read_vertex(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() >= static_cast<std::int64_t>(kNoVertex)) {
    schema_error(path, "expected a non-negative integer");
  }
  return j.get<Vertex>();
}

WeldTree parse_tree(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object()) schema_error(path, "expected an object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    schema_error(path, "missing integer \"rank\"");
  }
  const int rank = doc["rank"].get<int>();
  if (rank < 1) schema_error(path, "rank must be at least 1");

  if (rank == 1) {
    LeafGraph leaf;
    if (!doc.contains("colors") || !doc["colors"].is_array()) {
      schema_error(path, "leaf needs a \"colors\" array");
    }
    for (std::size_t i = 0; i < doc["colors"].size(); ++i) {
      const auto& c = doc["colors"][i];
      const std::string cpath = path + ".colors[" + std::to_string(i) + "]";
      if (!c.is_string()) schema_error(cpath, "expected \"black\" or \"white\"");
      const auto s = c.get<std::string>();
      if (s == "black") {
        leaf.colors.push_back(Color::Black);
      } else if (s == "white") {
        leaf.colors.push_back(Color::White);
      } else {
        schema_error(cpath, "expected \"black\" or \"white\", got \"" + s + "\"");
      }
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
      schema_error(path, "leaf needs an \"edges\" array");
    }
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string epath = path + ".edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2) schema_error(epath, "expected [u, v]");
      leaf.edges.push_back({read_vertex(e[0], epath), read_vertex(e[1], epath)});
    }
    const std::string mode = doc.value("mode", std::string{});
    if (mode == "laceable") {
      leaf.mode = LaceMode::HamiltonianLaceable;
    } else if (mode == "connected") {
      leaf.mode = LaceMode::HamiltonianConnected;
    } else {
      schema_error(path, "\"mode\" must be \"laceable\" or \"connected\"");
    }
    return make_leaf(std::move(leaf));
  }

  if (!doc.contains("children") || !doc["children"].is_array()) {
    schema_error(path, "node needs a \"children\" array");
  }
  std::vector<WeldTree> children;
  for (std::size_t i = 0; i < doc["children"].size(); ++i) {
    children.push_back(parse_tree(doc["children"][i], child_path(path, i)));
  }
  if (!doc.contains("matchings") || !doc["matchings"].is_object()) {
    schema_error(path, "node needs a \"matchings\" object");
  }
  MatchingMap matchings;
  for (const auto& [key, value] : doc["matchings"].items()) {
    const std::string mpath = path + ".matchings[\"" + key + "\"]";
    const auto dash = key.find('-');
    std::size_t i = 0;
    std::size_t j = 0;
    try {
      if (dash == std::string::npos) throw std::invalid_argument("no dash");
      std::size_t used = 0;
      i = std::stoul(key.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument("trailing");
      j = std::stoul(key.substr(dash + 1), &used);
      if (used != key.size() - dash - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      schema_error(mpath, "key must have the form \"i-j\"");
    }
    if (i == j || i >= children.size() || j >= children.size()) {
      schema_error(mpath, "layer indices out of range");
    }
    if (matchings.contains(i, j)) schema_error(mpath, "duplicate matching for this layer pair");
    if (!value.is_array()) schema_error(mpath, "expected an array of partner ids");
    std::vector<Vertex> forward;
    for (std::size_t k = 0; k < value.size(); ++k) {
      forward.push_back(read_vertex(value[k], mpath + "[" + std::to_string(k) + "]"));
    }
    try {
      matchings.set(i, j, std::move(forward));
    } catch (const ConstructionError& e) {
      schema_error(mpath, e.what());
    }
  }
  return make_node(rank, std::move(children), std::move(matchings));
}

}  // namespace

WeldTree parse_weld_spec(const nlohmann::json& doc, bool validate) {
  WeldTree tree = parse_tree(doc, "$");
  if (!validate) return tree;
  try {
    validate_weld(tree);
  } catch (const ConstructionError& e) {
    throw ParseError(e.what());
  }
  return tree;
}

}  // namespace weldpath
