#pragma once

// Test-side helpers. Nothing here calls into the solver; the transposition
// graph is rebuilt from permutations so generator output can be compared
// against it.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "weldpath/graph.hpp"
#include "weldpath/types.hpp"

namespace testsupport {

using weldpath::Color;
using weldpath::Pair;
using weldpath::PairSpec;
using weldpath::Path;
using weldpath::PathCover;
using weldpath::Vertex;

// Γ(S_n, T_n) from scratch: lexicographic permutations, edges by swapping
// two positions, black = even parity.
struct PermGraph {
  std::vector<std::vector<int>> perms;
  std::vector<Color> colors;
  std::vector<std::vector<Vertex>> adj;  // sorted
};

inline PermGraph perm_graph(int n) {
  PermGraph g;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    g.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Vertex> index;
  for (Vertex i = 0; i < g.perms.size(); ++i) index[g.perms[i]] = i;
  for (const auto& q : g.perms) {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += q[a] > q[b];
    }
    g.colors.push_back(inversions % 2 == 0 ? Color::Black : Color::White);
    std::vector<Vertex> nb;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        auto r = q;
        std::swap(r[a], r[b]);
        nb.push_back(index.at(r));
      }
    }
    std::sort(nb.begin(), nb.end());
    g.adj.push_back(nb);
  }
  return g;
}

inline std::vector<Vertex> of_color(const weldpath::AssembledGraph& g, Color c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.color(v) == c) out.push_back(v);
  }
  return out;
}

// Every choice of k black sources (as a set, ascending) and k distinct
// white targets (ordered), i.e. C(|B|, k) * |W|! / (|W| - k)! specs.
inline void for_each_pair_spec(const weldpath::AssembledGraph& g, std::size_t k,
                               const std::function<void(const PairSpec&)>& fn) {
  const auto black = of_color(g, Color::Black);
  const auto white = of_color(g, Color::White);
  PairSpec spec(k);
  std::vector<char> used(white.size(), 0);
  std::function<void(std::size_t)> targets = [&](std::size_t i) {
    if (i == k) {
      fn(spec);
      return;
    }
    for (std::size_t w = 0; w < white.size(); ++w) {
      if (used[w]) continue;
      used[w] = 1;
      spec[i].t = white[w];
      targets(i + 1);
      used[w] = 0;
    }
  };
  std::function<void(std::size_t, std::size_t)> sources = [&](std::size_t i, std::size_t from) {
    if (i == k) {
      targets(0);
      return;
    }
    for (std::size_t b = from; b < black.size(); ++b) {
      spec[i].s = black[b];
      sources(i + 1, b + 1);
    }
  };
  sources(0, 0);
}

inline PairSpec random_pair_spec(const weldpath::AssembledGraph& g, std::size_t k,
                                 std::mt19937_64& rng) {
  auto black = of_color(g, Color::Black);
  auto white = of_color(g, Color::White);
  std::shuffle(black.begin(), black.end(), rng);
  std::shuffle(white.begin(), white.end(), rng);
  PairSpec out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({black[i], white[i]});
  return out;
}

// Random spec whose endpoints all sit in layers [0, max_layer). Crowding
// endpoints into few layers is what reaches the rarer construction cases.
inline PairSpec layered_pair_spec(const weldpath::AssembledGraph& g, std::size_t k,
                                  std::size_t max_layer, std::mt19937_64& rng) {
  std::vector<char> used(g.num_vertices(), 0);
  auto pick = [&](Color c) {
    for (;;) {
      const auto r = g.layer_range(rng() % max_layer);
      const Vertex v = r.first + static_cast<Vertex>(rng() % r.size());
      if (!used[v] && g.color(v) == c) {
        used[v] = 1;
        return v;
      }
    }
  };
  PairSpec out;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex s = pick(Color::Black);
    out.push_back({s, pick(Color::White)});
  }
  return out;
}

// Single-point mutations of a valid cover. Each returns false when the cover
// has no place to apply it.

// Exchanges two interior vertices of the longest path that are not adjacent
// in a way that keeps the walk valid.
inline bool mutate_swap(const weldpath::AssembledGraph& g, PathCover& c, std::mt19937_64& rng) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].size() > c[best].size()) best = i;
  }
  Path& p = c[best];
  if (p.size() < 4) return false;
  std::vector<std::pair<std::size_t, std::size_t>> options;
  for (std::size_t a = 1; a + 1 < p.size(); ++a) {
    for (std::size_t b = a + 1; b + 1 < p.size(); ++b) {
      Path q = p;
      std::swap(q[a], q[b]);
      bool walk = true;
      for (std::size_t k = 1; k < q.size() && walk; ++k) walk = g.adjacent(q[k - 1], q[k]);
      if (!walk) options.emplace_back(a, b);
    }
  }
  if (options.empty()) return false;
  const auto [a, b] = options[rng() % options.size()];
  std::swap(p[a], p[b]);
  return true;
}

// Removes one vertex from some path (interior if possible).
inline bool mutate_drop(PathCover& c, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> options;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = 0; k < c[i].size(); ++k) options.emplace_back(i, k);
  }
  if (options.empty()) return false;
  const auto [i, k] = options[rng() % options.size()];
  c[i].erase(c[i].begin() + static_cast<std::ptrdiff_t>(k));
  return true;
}

// Moves a vertex inside a path so that it lands next to a non-neighbor.
inline bool mutate_non_edge(const weldpath::AssembledGraph& g, PathCover& c,
                            std::mt19937_64& rng) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> options;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Path& p = c[i];
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      for (std::size_t to = 1; to + 1 < p.size(); ++to) {
        if (to == k) continue;
        Path q = p;
        const Vertex v = q[k];
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(k));
        q.insert(q.begin() + static_cast<std::ptrdiff_t>(to), v);
        if (!g.adjacent(q[to - 1], q[to]) || !g.adjacent(q[to], q[to + 1])) {
          options.emplace_back(i, k, to);
        }
      }
    }
  }
  if (options.empty()) return false;
  const auto [i, k, to] = options[rng() % options.size()];
  Path& p = c[i];
  const Vertex v = p[k];
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(k));
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(to), v);
  return true;
}

}  // namespace testsupport
