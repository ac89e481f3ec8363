#include <gtest/gtest.h>

#include <random>

#include "implab/implab.hpp"
#include "implab/serialize.hpp"
#include "test_support.hpp"

using namespace implab;

TEST(Graph6, DecodesHandCheckedStar) {
  // 'D' = 5 vertices; "?{" = 000000 111100: bits (0,4) (1,4) (2,4) (3,4).
  auto g = graph6::decode("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(graph6::encode(g), "D?{");
}

TEST(Graph6, EmptyGraph) {
  EXPECT_EQ(graph6::encode(Graph(0)), "?");
  EXPECT_EQ(graph6::decode("?").order(), 0);
}

TEST(Graph6, HeaderAndTrailingNewline) {
  EXPECT_EQ(graph6::decode(">>graph6<<D?{\n"), graph6::decode("D?{"));
}

TEST(Graph6, LargeOrderUsesLongForm) {
  auto g = named::path(63);
  auto text = graph6::encode(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(graph6::decode(text), g);
}

TEST(Graph6, MalformedInputReportsOffset) {
  try {
    graph6::decode("D?");
    FAIL() << "truncated input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  try {
    graph6::decode("D ?");
    FAIL() << "bad byte accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  EXPECT_THROW(graph6::decode("Bx"), ParseError);  // nonzero padding bits
  EXPECT_THROW(graph6::decode(""), ParseError);
}

TEST(Graph6, StreamSkipsBlankLines) {
  auto gs = graph6::decode_stream("D?{\n\nA_\r\n");
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[1], named::complete(2));
}

TEST(AdjacencyList, PathOfThree) {
  auto g = adjacency_list::decode("0-1,1-2");
  EXPECT_EQ(g, named::path(3));
  EXPECT_EQ(adjacency_list::encode(g), "0-1,1-2");
}

TEST(AdjacencyList, IsolatedVerticesAndNewlines) {
  auto g = adjacency_list::decode("0-1\n3\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(adjacency_list::decode(adjacency_list::encode(g)), g);
}

TEST(AdjacencyList, Errors) {
  EXPECT_THROW(adjacency_list::decode("0-0"), ParseError);
  EXPECT_THROW(adjacency_list::decode("0-x"), ParseError);
  EXPECT_THROW(adjacency_list::decode("0;1"), ParseError);
  EXPECT_THROW(adjacency_list::decode("0-64"), ParseError);
}

TEST(RoundTrip, RandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    auto g = testkit::random_graph(rng, n, 0.3);
    const auto text = graph6::encode(g);
    ASSERT_EQ(graph6::decode(text), g);
    ASSERT_EQ(graph6::encode(graph6::decode(text)), text);
    if (n > 0) ASSERT_EQ(adjacency_list::decode(adjacency_list::encode(g)), g);
  }
}

TEST(Fixtures, ParseNamesAndComments) {
  auto set = parse_fixture_set("# header\nD?{ star\nA_\n\n");
  ASSERT_EQ(set.size(), 2U);
  EXPECT_EQ(set[0].name, "star");
  EXPECT_EQ(set[1].name, "#2");
  EXPECT_THROW(parse_fixture_set("D?\n"), ParseError);
}

TEST(Fixtures, DrawnSetMatchesHandTranscription) {
  auto file = load_fixture_set("fig1");
  auto hand = testkit::drawn_p1_graphs();
  ASSERT_EQ(file.size(), hand.size());
  for (std::size_t i = 0; i < hand.size(); ++i) {
    EXPECT_EQ(file[i].name, hand[i].name);
    EXPECT_TRUE(isomorphic(file[i].graph, hand[i].graph)) << hand[i].name;
  }
}

TEST(Fixtures, MissingSetThrows) { EXPECT_THROW(load_fixture_set("no-such-set"), std::runtime_error); }

TEST(Json, ModelRoundTrip) {
  auto cert = impropriety(named::star(4));
  json j = cert.witness_model;
  EXPECT_EQ(model_from_json(j), cert.witness_model);
}

TEST(Json, BalSpecRoundTrip) {
  BalSpec s = normalized({1, {named::complete(2), named::path(3)}});
  json j = s;
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(bal_spec_from_json(j), s);
}

TEST(Json, CheckResultCarriesCounterexample) {
  CheckResult c{CheckResult::Status::Fail, "x", "detail", {vset::from({1, 3})}};
  json j = c;
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["offending"][0], json({1, 3}));
}
