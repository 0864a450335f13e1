#include <gtest/gtest.h>

#include "weldpath/graph.hpp"

using namespace weldpath;

namespace {

const Color B = Color::Black;
const Color W = Color::White;

AssembledGraph cycle(std::size_t n) {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    colors.push_back(v % 2 ? W : B);
    edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  }
  return AssembledGraph::from_edges(colors, edges);
}

}  // namespace

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  const std::vector<Edge> edges{{0, 3}, {2, 1}, {0, 1}, {3, 2}, {1, 0}};
  const auto g = AssembledGraph::from_edges({B, W, B, W}, edges);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 4u);
  const auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(n0.begin(), n0.end()), (std::vector<Vertex>{1, 3}));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
  EXPECT_FALSE(g.adjacent(0, 2));
  const auto es = g.edges();
  ASSERT_EQ(es.size(), 4u);
  EXPECT_EQ(es.front(), (Edge{0, 1}));
  EXPECT_EQ(es.back(), (Edge{2, 3}));
}

TEST(Graph, RejectsLoopsAndBadIds) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(AssembledGraph::from_edges({B, W}, loop), InputError);
  const std::vector<Edge> out{{0, 5}};
  EXPECT_THROW(AssembledGraph::from_edges({B, W}, out), InputError);
  const auto g = cycle(4);
  EXPECT_THROW(g.neighbors(9), InputError);
  EXPECT_THROW(g.color(4), InputError);
}

TEST(Graph, LayersMustBeContiguous) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const auto g = AssembledGraph::from_edges({B, W, W, B}, edges, {0, 0, 1, 1});
  EXPECT_EQ(g.num_layers(), 2u);
  EXPECT_EQ(g.layer_range(1).first, 2u);
  EXPECT_EQ(g.layer_range(1).last, 4u);
  EXPECT_EQ(g.layer_of(3), 1u);
  EXPECT_THROW(AssembledGraph::from_edges({B, W, W, B}, edges, {0, 1, 0, 1}), InputError);
  EXPECT_THROW(AssembledGraph::from_edges({B, W, W, B}, edges, {0, 0, 1}), InputError);
}

TEST(Graph, ColoringPredicates) {
  EXPECT_TRUE(is_bipartite_properly_colored(cycle(6)));
  EXPECT_TRUE(is_equitable(cycle(6)));
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
  const auto odd = AssembledGraph::from_edges({B, W, B}, tri);
  EXPECT_FALSE(is_bipartite_properly_colored(odd));
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto p3 = AssembledGraph::from_edges({B, W, B}, path);
  EXPECT_TRUE(is_bipartite_properly_colored(p3));
  EXPECT_FALSE(is_equitable(p3));
  EXPECT_EQ(p3.coloring().black_count, 2u);
  EXPECT_EQ(p3.coloring().white_count, 1u);
}

TEST(Graph, Balance) {
  const auto c6 = cycle(6);
  // Equitable graph: each pair must contribute one black and one white.
  const PairSpec ok{{0, 1}};
  const PairSpec bad{{0, 2}};
  EXPECT_TRUE(is_balanced(c6, ok));
  EXPECT_FALSE(is_balanced(c6, bad));
  // P3 has one extra black, so the endpoints must carry two more blacks.
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto p3 = AssembledGraph::from_edges({B, W, B}, path);
  const PairSpec ends{{0, 2}};
  EXPECT_TRUE(is_balanced(p3, ends));
  const PairSpec dup{{0, 1}, {1, 2}};
  EXPECT_THROW(is_balanced(p3, dup), InputError);
}

TEST(Graph, ValidatePairs) {
  const auto c6 = cycle(6);
  const PairSpec good{{0, 1}, {2, 5}};
  EXPECT_NO_THROW(validate_pairs(c6, good));
  const PairSpec white_source{{1, 0}};
  EXPECT_THROW(validate_pairs(c6, white_source), InputError);
  const PairSpec out_of_range{{0, 7}};
  EXPECT_THROW(validate_pairs(c6, out_of_range), InputError);
  const PairSpec shared{{0, 1}, {2, 1}};
  EXPECT_THROW(validate_pairs(c6, shared), InputError);
}

TEST(Graph, Exports) {
  const auto g = cycle(4);
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  const auto j = to_json(g);
  EXPECT_EQ(j["colors"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 4u);
}
