#include <gtest/gtest.h>

#include "support.hpp"
#include "weldpath/oracle.hpp"
#include "weldpath/verify.hpp"

using namespace weldpath;

namespace {

const Color B = Color::Black;
const Color W = Color::White;

AssembledGraph c4() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return AssembledGraph::from_edges({B, W, B, W}, e);
}

bool has_failed(const HypothesisReport& r, const std::string& check) {
  for (const auto& c : r.checks) {
    if (c.check == check && !c.passed) return true;
  }
  return false;
}

}  // namespace

TEST(VerifyPdpc, Examples) {
  const std::vector<Edge> e{{0, 1}};
  const auto k2 = AssembledGraph::from_edges({B, W}, e);
  const PairSpec p01{{0, 1}};
  EXPECT_TRUE(verify_pdpc(k2, p01, {{0, 1}}).accepted);

  const auto g = c4();
  const Verdict partial = verify_pdpc(g, p01, {{0, 1}});
  EXPECT_FALSE(partial.accepted);
  ASSERT_TRUE(partial.violation);
  EXPECT_EQ(partial.violation->reason, "vertices {2,3} uncovered");
  EXPECT_FALSE(partial.violation->pair.has_value());

  const PairSpec p03{{0, 3}};
  EXPECT_TRUE(verify_pdpc(g, p03, {{0, 1, 2, 3}}).accepted);
}

TEST(VerifyPdpc, FirstViolationIsLocated) {
  const auto g = c4();
  const PairSpec p03{{0, 3}};
  auto v = verify_pdpc(g, p03, {{0, 2, 1, 3}});
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.violation->pair, 0u);
  EXPECT_EQ(v.violation->position, 1u);

  v = verify_pdpc(g, p03, {{0, 1, 2, 3, 0}});
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.violation->position, 4u);

  v = verify_pdpc(g, p03, {{3, 2, 1, 0}});
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.violation->position, 0u);

  v = verify_pdpc(g, p03, {{0, 1, 2, 9}});
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.violation->position, 3u);

  EXPECT_FALSE(verify_pdpc(g, p03, {}).accepted);
  EXPECT_FALSE(verify_pdpc(g, p03, {{}}).accepted);
  const PairSpec two{{0, 1}, {2, 3}};
  EXPECT_FALSE(verify_pdpc(g, two, {{0, 1, 2, 3}}).accepted);
}

TEST(VerifyPdpc, VerdictJson) {
  const auto g = c4();
  const PairSpec p{{0, 1}};
  EXPECT_EQ(verify_pdpc(g, p, {{0, 1, 2, 3}}).to_json().dump().find("\"accepted\":false") !=
                std::string::npos,
            true);
  EXPECT_EQ(verify_pdpc(g, PairSpec{{0, 3}}, {{0, 1, 2, 3}}).to_json(),
            nlohmann::json({{"accepted", true}}));
}

TEST(VerifyPdpc, MutationsOfOracleCoversAreRejected) {
  // Covers from the independent oracle on K_{3,3} welds; every mutation of
  // each must be rejected.
  const auto g = assemble(transposition_graph(3));
  std::mt19937_64 rng(5);
  std::size_t mutated = 0;
  testsupport::for_each_pair_spec(g, 1, [&](const PairSpec& ps) {
    const auto cover = brute_pdpc(g, ps);
    ASSERT_TRUE(cover);
    ASSERT_TRUE(verify_pdpc(g, ps, *cover).accepted);
    PathCover a = *cover, b = *cover, c = *cover;
    if (testsupport::mutate_swap(g, a, rng)) {
      EXPECT_FALSE(verify_pdpc(g, ps, a).accepted);
      ++mutated;
    }
    ASSERT_TRUE(testsupport::mutate_drop(b, rng));
    EXPECT_FALSE(verify_pdpc(g, ps, b).accepted);
    if (testsupport::mutate_non_edge(g, c, rng)) {
      EXPECT_FALSE(verify_pdpc(g, ps, c).accepted);
      ++mutated;
    }
  });
  EXPECT_GT(mutated, 0u);
}

TEST(Hypotheses, TranspositionPasses) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = check_theorem_hypotheses(transposition_graph(n));
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_EQ(r.summary(), "all checks passed");
  }
}

TEST(Hypotheses, OddLeafFailsParity) {
  LeafGraph odd{{B, W, B}, {{0, 1}, {1, 2}}, LaceMode::HamiltonianLaceable};
  const auto r = check_theorem_hypotheses(make_leaf(odd));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_failed(r, "leaf-parity"));
}

TEST(Hypotheses, TooFewLayers) {
  std::vector<WeldTree> kids{transposition_graph(2), transposition_graph(2)};
  const WeldTree t = make_node(3, kids, random_matchings(kids, 1));
  const auto r = check_theorem_hypotheses(t);
  EXPECT_TRUE(has_failed(r, "layer-count"));
  EXPECT_FALSE(has_failed(r, "matchings"));
  const auto j = r.to_json();
  EXPECT_FALSE(j["ok"].get<bool>());
}

TEST(Hypotheses, UncertifiedLeafAndBadMatching) {
  const std::vector<Edge> ring{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  LeafGraph c6{{B, W, B, W, B, W}, ring, LaceMode::HamiltonianLaceable};
  std::vector<WeldTree> kids{make_leaf(c6), make_leaf(c6)};
  const WeldTree t = make_node(2, kids, random_matchings(kids, 2));
  EXPECT_TRUE(has_failed(check_theorem_hypotheses(t), "leaf-certified"));

  std::vector<WeldTree> k2s{complete_bipartite_leaf(1), complete_bipartite_leaf(1)};
  MatchingMap same;
  same.set(0, 1, {0, 1});  // black to black
  const auto r = check_theorem_hypotheses(make_node(2, k2s, same));
  EXPECT_TRUE(has_failed(r, "matchings"));
  EXPECT_TRUE(has_failed(r, "bipartite"));
}

TEST(Hypotheses, UnequalLayersAndLeafAboveBound) {
  std::vector<WeldTree> kids{complete_bipartite_leaf(1), complete_bipartite_leaf(2)};
  const auto r = check_theorem_hypotheses(make_node(2, kids, MatchingMap{}));
  EXPECT_TRUE(has_failed(r, "equal-sizes"));

  const WeldTree big = complete_bipartite_leaf(9);
  EXPECT_TRUE(has_failed(check_theorem_hypotheses(big), "leaf-certified"));
  EXPECT_TRUE(check_theorem_hypotheses(big, {}, true).ok());
  EXPECT_TRUE(check_theorem_hypotheses(big, OracleConfig{18}).ok());
}
