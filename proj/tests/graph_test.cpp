#include <gtest/gtest.h>

#include "implab/implab.hpp"
#include "test_support.hpp"

using namespace implab;
using implab::testkit::profile_graph;

TEST(Graph, RejectsLoopsAndBadIds) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(local_components(g, 5), std::invalid_argument);
}

TEST(Graph, AdjacencyIsSymmetric) {
  Graph g(4, {{0, 1}, {2, 1}});
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(3), 0);
}

TEST(Graph, InducedSubgraphRelabelsDensely) {
  auto star = named::star(4);
  auto sub = induced_subgraph(star, vset::from({0, 1, 2, 3}));
  EXPECT_TRUE(isomorphic(sub.graph, named::star(3)));
  EXPECT_EQ(sub.original, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(isomorphic(induced_subgraph(named::cycle(4), vset::from({0, 1, 2})).graph, named::path(3)));
  auto g = named::spider(3, 2);
  EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
}

TEST(Graph, NamedPrimitives) {
  Graph g;
  ASSERT_TRUE(named::try_parse("K1,3", g));
  EXPECT_TRUE(isomorphic(g, named::star(3)));
  ASSERT_TRUE(named::try_parse("C5", g));
  EXPECT_EQ(g.edge_count(), 5);
  ASSERT_TRUE(named::try_parse("P4", g));
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_FALSE(named::try_parse("Q3", g));
  EXPECT_FALSE(named::try_parse("K", g));
}

TEST(LocalProfile, StarCenter) {
  auto p = local_components(named::star(3), 0);
  EXPECT_EQ(p.n_components, 3);
  EXPECT_EQ(p.n_exterior, 0);
  EXPECT_EQ(p.weight, 1);
}

TEST(LocalProfile, PathMiddle) {
  auto p = local_components(named::path(5), 2);
  EXPECT_EQ(p.n_components, 2);
  EXPECT_EQ(p.n_exterior, 2);
  EXPECT_EQ(p.weight, 0);
  EXPECT_EQ(vertex_type(named::path(5), 2), 2);
}

TEST(LocalProfile, ExteriorFlagMatchesDefinition) {
  auto g = profile_graph(2, {5, 2});
  for (const auto& c : local_components(g, 0).components)
    EXPECT_EQ(c.exterior, (c.vertices & ~g.neighbors(0)) != 0);
}

// Component orders A = B = C = 5, D = 4, F = 2; X1, X2 exterior.
struct WeightRow {
  int exterior;
  std::vector<int> orders;
  int weight;
};

class WeightTable : public ::testing::TestWithParam<WeightRow> {};

TEST_P(WeightTable, CenterWeightMatches) {
  const auto& row = GetParam();
  auto g = profile_graph(row.exterior, row.orders);
  EXPECT_EQ(weight_of_vertex(g, 0), row.weight);
  EXPECT_EQ(local_components(g, 0).n_exterior, row.exterior);
}

INSTANTIATE_TEST_SUITE_P(FirstTable, WeightTable,
                         ::testing::Values(WeightRow{2, {5, 5}, 10}, WeightRow{2, {5, 2}, 7}, WeightRow{1, {5, 5}, 5},
                                           WeightRow{1, {5, 2}, 2}, WeightRow{0, {5, 5, 5, 4, 2}, 11},
                                           WeightRow{0, {5, 4, 2}, 2}));

INSTANTIATE_TEST_SUITE_P(SecondTable, WeightTable,
                         ::testing::Values(WeightRow{2, {5, 5, 5, 4, 2}, 21}, WeightRow{2, {5, 2}, 7},
                                           WeightRow{2, {}, 0}, WeightRow{1, {5, 5, 5}, 10},
                                           WeightRow{1, {5, 2}, 2}, WeightRow{0, {5, 5, 5, 4, 2}, 11},
                                           WeightRow{0, {5, 4, 2}, 2}, WeightRow{0, {5, 2}, 0},
                                           WeightRow{0, {4}, 0}));

TEST(Weight, GraphLevel) {
  EXPECT_EQ(weight_of_graph(named::star(4)), 2);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(weight_of_graph(named::path(n)), 0);
  EXPECT_EQ(weight_of_graph(profile_graph(2, {5, 5, 5, 4, 2})), 21);
  EXPECT_EQ(weight_of_graph(Graph(0)), 0);
}

TEST(Weight, DisconnectedGraphsUseOwnComponent) {
  auto g = disjoint_union(named::star(3), Graph(1));
  EXPECT_EQ(weight_of_vertex(g, 0), 1);
  EXPECT_EQ(weight_of_graph(g), 1);
}

TEST(Weight, PositiveWeightVertices) {
  EXPECT_EQ(positive_weight_vertices(named::star(4)), vset::single(0));
  EXPECT_EQ(positive_weight_vertices(named::path(6)), VertexSet{0});
  auto bal = bal_build({2, {named::complete(2)}});
  EXPECT_EQ(positive_weight_vertices(bal.graph), vset::single(bal.center));
}

TEST(VertexType, SubdividedClawHasThreeExteriorComponents) {
  auto g = named::spider(3, 2);
  EXPECT_EQ(vertex_type(g, 0), 3);
  EXPECT_EQ(vertex_type(named::star(3), 0), 0);
  EXPECT_FALSE(std::holds_alternative<CliqueOrdering>(is_interval(g)));
}

TEST(VertexType, AtMostTwoOnIntervalGraphs) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_interval_graphs(n))
      for (int v = 0; v < n; ++v) ASSERT_LE(vertex_type(g, v), 2) << graph6::encode(g);
}
