#include <gtest/gtest.h>

#include "oracle.hpp"
#include "weylgray/hamilton_search.hpp"
#include "weylgray/optimal_codes.hpp"

namespace weylgray {
namespace {

TEST(Distance2Graph, MatchesBruteForceAdjacency) {
  for (char t : {'A', 'B', 'D'}) {
    for (int n = 2; n <= 4; ++n) {
      const Distance2Graph g = distance2_graph(parse_group_type(std::string(1, t)), n);
      const auto all = testing::brute_force_involutions(t, n);
      const std::vector<testing::Word> v(all.begin(), all.end());
      ASSERT_EQ(g.size(), v.size());
      std::size_t edges = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(std::vector<int>(g.vertices[i].word().begin(), g.vertices[i].word().end()),
                  v[i]);
        for (std::size_t j = 0; j < v.size(); ++j) {
          const bool expected = testing::word_hamming(v[i], v[j]) == 2;
          EXPECT_EQ(g.adjacent(static_cast<int>(i), static_cast<int>(j)), expected);
          edges += expected;
        }
      }
      EXPECT_EQ(g.edge_count(), edges / 2);
    }
  }
}

TEST(Distance2Graph, TypeARankThreeIsAStar) {
  const Distance2Graph g = distance2_graph(GroupType::A, 3);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.adjacency[0].size(), 3u);  // 1 2 3
  for (int v = 1; v < 4; ++v) EXPECT_EQ(g.adjacency[static_cast<std::size_t>(v)].size(), 1u);
  EXPECT_EQ(find_hamilton(g, HamiltonObject::Cycle).outcome, SearchOutcome::Exhausted);
  EXPECT_EQ(find_hamilton(g, HamiltonObject::Path).outcome, SearchOutcome::Exhausted);
}

// No distance-1 cyclic code of I^B_n: an involution with a transposition has
// no neighbour at Hamming distance 1.
TEST(Distance2Graph, TypeBDistanceOneStepsKeepTheUnsignedForm) {
  for (int n = 2; n <= 4; ++n) {
    const auto all = testing::brute_force_involutions('B', n);
    for (const auto& w : all) {
      for (const auto& u : all) {
        if (testing::word_hamming(w, u) != 1) continue;
        for (int i = 0; i < n; ++i) {
          EXPECT_EQ(std::abs(w[i]), std::abs(u[i]));
          if (w[i] != u[i]) EXPECT_EQ(std::abs(w[i]), i + 1);  // only a fixed point flips
        }
      }
    }
  }
}

TEST(HamiltonSearch, RankThreeTypeD) {
  const Distance2Graph g = distance2_graph(GroupType::D, 3);
  const SearchResult cycle = find_hamilton(g, HamiltonObject::Cycle);
  EXPECT_EQ(cycle.outcome, SearchOutcome::Exhausted);
  EXPECT_FALSE(cycle.witness);

  const SearchResult path = find_hamilton(g, HamiltonObject::Path);
  ASSERT_EQ(path.outcome, SearchOutcome::Found);
  ASSERT_TRUE(path.witness);
  const Distance2Report r = verify_distance2(*path.witness, false);
  EXPECT_TRUE(r.passed());
}

TEST(HamiltonSearch, WitnessesAreValidCycles) {
  for (auto [type, n] : {std::pair{GroupType::B, 2}, std::pair{GroupType::D, 4},
                         std::pair{GroupType::B, 3}}) {
    const SearchResult r = find_hamilton(distance2_graph(type, n), HamiltonObject::Cycle);
    ASSERT_EQ(r.outcome, SearchOutcome::Found);
    EXPECT_TRUE(verify_distance2(*r.witness, true).passed());
  }
}

TEST(HamiltonSearch, ThreadCountDoesNotChangeResult) {
  for (auto object : {HamiltonObject::Cycle, HamiltonObject::Path}) {
    const Distance2Graph g = distance2_graph(GroupType::D, 3);
    SearchOptions one;
    SearchOptions four;
    four.threads = 4;
    const SearchResult a = find_hamilton(g, object, one);
    const SearchResult b = find_hamilton(g, object, four);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.nodes_expanded, b.nodes_expanded);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(HamiltonSearch, NodeBudgetStopsSearch) {
  SearchOptions tiny;
  tiny.node_budget = 5;
  const SearchResult r =
      find_hamilton(distance2_graph(GroupType::D, 3), HamiltonObject::Cycle, tiny);
  EXPECT_EQ(r.outcome, SearchOutcome::TimedOut);
  EXPECT_FALSE(r.witness);
}

TEST(HamiltonSearch, OutcomeNames) {
  EXPECT_EQ(to_string(SearchOutcome::Found), "found");
  EXPECT_EQ(to_string(SearchOutcome::Exhausted), "exhausted");
  EXPECT_EQ(to_string(SearchOutcome::TimedOut), "timed_out");
}

}  // namespace
}  // namespace weylgray
