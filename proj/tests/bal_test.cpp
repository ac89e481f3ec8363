#include <gtest/gtest.h>

#include <random>

#include "implab/implab.hpp"
#include "test_support.hpp"

using namespace implab;

namespace {

const Graph& drawn(const std::string& name) {
  static const auto fig = testkit::drawn_p1_graphs();
  for (const auto& ng : fig)
    if (ng.name == name) return ng.graph;
  throw std::out_of_range(name);
}

Graph k(int n) { return named::complete(n); }

}  // namespace

TEST(BalBuild, PendantPairsAroundEdge) {
  auto b = bal_build({2, {k(2)}});
  EXPECT_EQ(b.center, 0);
  EXPECT_EQ(b.graph.order(), 7);
  EXPECT_TRUE(isomorphic(b.graph, drawn("Balanced-One")));
}

TEST(BalBuild, OnePendantTwoEdges) {
  EXPECT_TRUE(isomorphic(bal_build({1, {k(2), k(2)}}).graph, drawn("Balanced-Two")));
}

TEST(BalBuild, ThreeEdges) { EXPECT_TRUE(isomorphic(bal_build({0, {k(2), k(2), k(2)}}).graph, drawn("Balanced-Three"))); }

TEST(BalBuild, SpecErrors) {
  EXPECT_THROW(bal_build({1, {k(1), k(1)}}), SpecError);
  EXPECT_THROW(bal_build({3, {k(2)}}), SpecError);
  EXPECT_THROW(bal_build({0, {}}), SpecError);
  EXPECT_THROW(bal_build({0, {Graph(2)}}), SpecError);
  EXPECT_THROW(bal_build({0, {named::cycle(4)}}), SpecError);
}

TEST(BalBuild, AlwaysInterval) {
  std::mt19937 rng(17);
  testkit::PartPool pool(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = bal_build(testkit::random_valid_spec(rng, pool, 20)).graph;
    ASSERT_TRUE(std::holds_alternative<CliqueOrdering>(is_interval(g))) << graph6::encode(g);
  }
}

TEST(PredictedImp, Examples) {
  EXPECT_EQ(predicted_imp({2, {k(2)}}), 2);
  EXPECT_EQ(predicted_imp({1, {k(2), k(2)}}), 2);
  EXPECT_EQ(predicted_imp({0, {k(2), k(2), k(2)}}), 2);
  EXPECT_EQ(predicted_imp({0, {k(3), k(3), k(3)}}), 3);
  EXPECT_EQ(predicted_imp({0, {k(1), k(1), k(1)}}), 1);
}

TEST(UnmetClause, Examples) {
  EXPECT_EQ(unmet_clause({2, {k(1)}}), "max-order");
  EXPECT_EQ(unmet_clause({0, {k(2), k(2), named::path(3)}}), "a");
  EXPECT_EQ(unmet_clause({1, {k(2), named::path(2)}}), "");
  EXPECT_EQ(unmet_clause({1, {k(3), named::path(3)}}), "b");
  EXPECT_EQ(unmet_clause({2, {named::path(3)}}), "");
}

TEST(BalForm, RoundTripsTheEdgeCase) {
  auto rec = is_bal_form(bal_build({2, {k(2)}}).graph);
  ASSERT_TRUE(std::holds_alternative<BalSpec>(rec));
  EXPECT_EQ(std::get<BalSpec>(rec), normalized({2, {k(2)}}));
}

TEST(BalForm, ClawIsThreeSingletons) {
  auto rec = is_bal_form(named::star(3));
  ASSERT_TRUE(std::holds_alternative<BalSpec>(rec));
  EXPECT_EQ(std::get<BalSpec>(rec), normalized({0, {k(1), k(1), k(1)}}));
}

TEST(BalForm, SkewGraphRejected) {
  const auto& skew = drawn("Skew-One");
  auto rec = is_bal_form(skew);
  ASSERT_TRUE(std::holds_alternative<BalRejection>(rec));
  auto r = balance_report(skew);
  EXPECT_EQ(r.imp, 2);
  EXPECT_LT(r.wt, r.imp);
}

TEST(BalForm, RejectionClauses) {
  auto nonint = is_bal_form(named::cycle(5));
  ASSERT_TRUE(std::holds_alternative<BalRejection>(nonint));
  EXPECT_EQ(std::get<BalRejection>(nonint).clause, "interval");

  auto p3 = is_bal_form(named::path(3));
  ASSERT_TRUE(std::holds_alternative<BalRejection>(p3));

  // Two pendant pairs around a single leaf: right shape, but every part is a singleton.
  auto legs = is_bal_form(adjacency_list::decode("0-1,0-2,2-3,0-4,4-5"));
  ASSERT_TRUE(std::holds_alternative<BalRejection>(legs));
  EXPECT_EQ(std::get<BalRejection>(legs).clause, "max-order");
  EXPECT_EQ(std::get<BalRejection>(legs).candidate, 0);
}

TEST(BalForm, RandomRoundTrips) {
  std::mt19937 rng(41);
  testkit::PartPool pool(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto spec = testkit::random_valid_spec(rng, pool, 10);
    auto g = bal_build(spec).graph;
    auto shuffled = permute(g, testkit::random_permutation(rng, g.order()));
    for (const auto& h : {g, shuffled}) {
      auto rec = is_bal_form(h);
      ASSERT_TRUE(std::holds_alternative<BalSpec>(rec)) << graph6::encode(h);
      ASSERT_EQ(std::get<BalSpec>(rec), spec) << graph6::encode(h);
    }
  }
}

TEST(BalForward, RandomSpecsAreBalancedAndCritical) {
  std::mt19937 rng(43);
  testkit::PartPool pool(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto spec = testkit::random_valid_spec(rng, pool, 9);
    auto c = verify_bal_spec(spec);
    ASSERT_TRUE(c.passed()) << graph6::encode(bal_build(spec).graph) << ": " << c.detail;
  }
}

TEST(BalForward, ThreeTriangles) {
  BalSpec spec{0, {k(3), k(3), k(3)}};
  auto c = verify_bal_spec(spec);
  EXPECT_TRUE(c.passed()) << c.detail;
  auto r = balance_report(bal_build(spec).graph);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.wt, 3);
}

TEST(BalForward, RefusesBadSpecsAndLargeBuilds) {
  EXPECT_THROW(verify_bal_spec({2, {k(1)}}), SpecError);
  EXPECT_THROW(verify_bal_spec({0, {k(2), k(2), named::path(3)}}), SpecError);
  EXPECT_THROW(verify_bal_spec({0, {k(6), k(6), k(6)}}), GuardError);
}

TEST(BalReverse, BalancedCriticalGraphsAreBal) {
  int seen = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_interval_graphs(n)) {
      auto r = balance_report(g);
      if (!(r.balanced && r.critical)) continue;
      ++seen;
      auto rec = is_bal_form(g);
      ASSERT_TRUE(std::holds_alternative<BalSpec>(rec)) << graph6::encode(g);
      const auto& spec = std::get<BalSpec>(rec);
      EXPECT_EQ(unmet_clause(spec), "");
      EXPECT_EQ(predicted_imp(spec), r.imp) << graph6::encode(g);
    }
  }
  EXPECT_GT(seen, 2);
}
