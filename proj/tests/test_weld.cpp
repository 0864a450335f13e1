#include <gtest/gtest.h>

#include "support.hpp"
#include "weldpath/weld.hpp"

using namespace weldpath;

namespace {

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

WeldTree k11() { return complete_bipartite_leaf(1); }

}  // namespace

class TranspositionOracle : public ::testing::TestWithParam<int> {};

TEST_P(TranspositionOracle, MatchesPermutationConstruction) {
  const int n = GetParam();
  const WeldTree t = transposition_graph(n);
  EXPECT_EQ(t.rank(), n);
  const AssembledGraph g = assemble(t);
  const auto ref = testsupport::perm_graph(n);
  ASSERT_EQ(g.num_vertices(), factorial(n));
  EXPECT_EQ(g.num_edges(), factorial(n) * n * (n - 1) / 4);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.color(v), ref.colors[v]) << "vertex " << v;
    const auto nb = g.neighbors(v);
    EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), ref.adj[v]) << "vertex " << v;
  }
  if (n >= 2) {
    // Layers split on the first position: layer j holds permutations starting with j+1.
    ASSERT_EQ(g.num_layers(), static_cast<std::size_t>(n));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(static_cast<int>(g.layer_of(v)), ref.perms[v][0] - 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, TranspositionOracle, ::testing::Values(1, 2, 3, 4, 5));

TEST(Weld, TranspositionSmallCases) {
  const WeldTree t1 = transposition_graph(1);
  EXPECT_TRUE(t1.is_leaf());
  EXPECT_EQ(t1.num_vertices(), 1u);
  const AssembledGraph k2 = assemble(transposition_graph(2));
  EXPECT_EQ(k2.num_vertices(), 2u);
  EXPECT_TRUE(k2.adjacent(0, 1));
  // Γ(S_3) is K_{3,3}.
  const AssembledGraph g3 = assemble(transposition_graph(3));
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g3.adjacent(u, v), g3.color(u) != g3.color(v));
  }
  EXPECT_THROW(transposition_graph(0), InputError);
  EXPECT_THROW(transposition_graph(8), InputError);
}

TEST(Weld, CompleteBipartiteLeaf) {
  const WeldTree t = complete_bipartite_leaf(3);
  const AssembledGraph g = assemble(t);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 9u);
  EXPECT_TRUE(is_equitable(g));
  EXPECT_THROW(complete_bipartite_leaf(0), InputError);
}

TEST(Weld, MatchingMapLookupsBothWays) {
  MatchingMap m;
  m.set(2, 0, {1, 2, 0});  // layer 2 -> layer 0
  EXPECT_TRUE(m.contains(0, 2));
  EXPECT_TRUE(m.contains(2, 0));
  EXPECT_EQ(m.partner(2, 0, 0), 1u);
  EXPECT_EQ(m.partner(0, 2, 1), 0u);
  for (Vertex x = 0; x < 3; ++x) EXPECT_EQ(m.partner(0, 2, m.partner(2, 0, x)), x);
  EXPECT_THROW(m.set(1, 1, {0}), ConstructionError);
  EXPECT_THROW(m.set(0, 1, {0, 0, 1}), ConstructionError);
  EXPECT_THROW(m.partner(0, 1, 0), ConstructionError);
}

TEST(Weld, RandomMatchingsRespectColors) {
  std::vector<WeldTree> kids{complete_bipartite_leaf(2), complete_bipartite_leaf(2),
                             complete_bipartite_leaf(2)};
  const MatchingMap m = random_matchings(kids, 11);
  EXPECT_EQ(m.size(), 3u);
  const auto colors = flatten_colors(kids[0]);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      for (Vertex x = 0; x < 4; ++x) EXPECT_NE(colors[x], colors[m.partner(i, j, x)]);
    }
  }
  EXPECT_EQ(m, random_matchings(kids, 11));
  // A single black vertex has no white counterpart in another single black vertex.
  std::vector<WeldTree> blacks{single_vertex_leaf(Color::Black), single_vertex_leaf(Color::Black)};
  EXPECT_THROW(random_matchings(blacks, 1), ConstructionError);
}

TEST(Weld, KmmWeldIsDeterministicAndSized) {
  const WeldTree a = kmm_weld(3, 1, 3, 7);
  const WeldTree b = kmm_weld(3, 1, 3, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(serialize_weld_spec(a).dump(), serialize_weld_spec(b).dump());
  EXPECT_EQ(a.num_vertices(), 2u * 3 * 3);
  EXPECT_NE(serialize_weld_spec(kmm_weld(3, 1, 3, 8)).dump(), serialize_weld_spec(a).dump());
  EXPECT_EQ(kmm_weld(4, 2, 5, 1).num_vertices(), 4u * 125);
  EXPECT_THROW(kmm_weld(3, 1, 2, 1), InputError);
  EXPECT_THROW(kmm_weld(0, 1, 2, 1), InputError);
}

TEST(Weld, AssembleKeepsLayersAndMatchings) {
  std::vector<WeldTree> kids{k11(), k11(), k11(), k11()};
  const WeldTree t = make_node(2, kids, random_matchings(kids, 3));
  const AssembledGraph g = assemble(t);
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_EQ(g.num_layers(), 4u);
  // Each vertex: one leaf edge plus one matching edge per other layer.
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.neighbors(v).size(), 4u);
  EXPECT_TRUE(is_bipartite_properly_colored(g));
  EXPECT_TRUE(is_equitable(g));
}

TEST(Weld, SpecRoundTrip) {
  for (const WeldTree& t : {transposition_graph(4), kmm_weld(3, 2, 3, 5), complete_bipartite_leaf(2)}) {
    const auto doc = serialize_weld_spec(t);
    const WeldTree back = parse_weld_spec(doc);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_weld_spec(back), doc);
  }
}

TEST(Weld, SpecSchemaErrors) {
  using nlohmann::json;
  EXPECT_THROW(parse_weld_spec(json::array()), ParseError);
  EXPECT_THROW(parse_weld_spec(json{{"rank", 1}, {"colors", {"red"}}, {"edges", json::array()}}),
               ParseError);
  // A three-vertex leaf fails the parity rule.
  const json odd = {{"rank", 1},
                    {"colors", {"black", "white", "black"}},
                    {"edges", {{0, 1}, {1, 2}}},
                    {"mode", "laceable"}};
  EXPECT_THROW(parse_weld_spec(odd), ParseError);
  EXPECT_NO_THROW(parse_weld_spec(odd, false));
  auto doc = serialize_weld_spec(transposition_graph(3));
  doc["matchings"].erase("0-2");
  try {
    parse_weld_spec(doc);
    FAIL() << "missing matching accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("0-2"), std::string::npos) << e.what();
  }
}

TEST(Weld, ValidateRejectsTooFewLayers) {
  std::vector<WeldTree> kids{transposition_graph(2), transposition_graph(2)};
  const WeldTree t = make_node(3, kids, random_matchings(kids, 1));
  EXPECT_THROW(validate_weld(t), ConstructionError);
}
