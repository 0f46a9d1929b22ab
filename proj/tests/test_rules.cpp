#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lincomp/error.hpp"
#include "lincomp/ioeq.hpp"
#include "lincomp/rules.hpp"
#include "oracles.hpp"

using namespace lincomp;

namespace {

int symbolic_rhs_count(const ModelSpec& m, int in, int out) {
  const IoEquation eq = io_equation(m, out);
  for (const auto& [i, poly] : eq.rhs) {
    if (i != in) continue;
    int count = 0;
    for (const MPoly& c : poly.coefficients()) {
      if (!c.is_zero() && !c.is_constant()) ++count;
    }
    return count;
  }
  return 0;
}

}  // namespace

TEST(Rules, IdenticalModelsPass) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 40; ++k) {
    const auto m = oracle::random_model(rng, 1 + static_cast<int>(rng() % 6), 0.3, 0.3);
    EXPECT_TRUE(godfrey_rules(m, m).pass());
  }
}

TEST(Rules, RelabellingPreservesRules) {
  // Same graph with compartments 1 and 2 swapped.
  const ModelSpec a(3, {{1, 2}, {2, 3}}, {1}, {3}, {1});
  const ModelSpec b(3, {{2, 1}, {1, 3}}, {2}, {3}, {2});
  EXPECT_TRUE(godfrey_rules(a, b).pass());
}

TEST(Rules, LeakOnOutputBreaksTrapCount) {
  const RuleReport r = godfrey_rules(fixtures::path3_leak(2), fixtures::path3_leak(3));
  EXPECT_FALSE(r.pass());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->rule, 4);
  EXPECT_EQ(r.first_failure()->left, std::vector<std::string>{"1"});
  EXPECT_EQ(r.first_failure()->right, std::vector<std::string>{"0"});
  EXPECT_TRUE(r.rules[0].pass && r.rules[1].pass && r.rules[2].pass);
}

TEST(Rules, DistanceRule) {
  const ModelSpec direct(3, {{1, 2}, {2, 3}, {1, 3}}, {1}, {3}, {});
  const RuleReport r = godfrey_rules(fixtures::path3_leak(1), direct);
  EXPECT_FALSE(r.rules[0].pass);
  EXPECT_EQ(r.first_failure()->rule, 1);
  EXPECT_EQ(r.rules[0].left, std::vector<std::string>{"2"});
  EXPECT_EQ(r.rules[0].right, std::vector<std::string>{"1"});
}

TEST(Rules, ReachCountRules) {
  const ModelSpec branch(3, {{1, 2}, {1, 3}}, {1}, {3}, {2});
  const RuleReport r = godfrey_rules(fixtures::path3_leak(1), branch);
  EXPECT_FALSE(r.rules[1].pass);  // 3 compartments reach 3 versus 2
  EXPECT_TRUE(r.rules[2].pass);   // both inputs reach all 3
}

TEST(Rules, MatchOracleQuantities) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto a = oracle::random_model(rng, n, 0.3, 0.3, 1);
    const auto b = oracle::random_model(rng, n, 0.3, 0.3, 1);
    const auto da = oracle::distances(a), db = oracle::distances(b);
    const bool dist_equal = da[a.inputs()[0]][a.outputs()[0]] == db[b.inputs()[0]][b.outputs()[0]];
    const bool to_equal =
        oracle::reaching(a, a.outputs()[0]).size() == oracle::reaching(b, b.outputs()[0]).size();
    const auto ca = oracle::closure(a), cb = oracle::closure(b);
    const auto from_a = std::count(ca[a.inputs()[0]].begin(), ca[a.inputs()[0]].end(), true);
    const auto from_b = std::count(cb[b.inputs()[0]].begin(), cb[b.inputs()[0]].end(), true);
    const RuleReport r = godfrey_rules(a, b);
    EXPECT_EQ(r.rules[0].pass, dist_equal);
    EXPECT_EQ(r.rules[1].pass, to_equal);
    EXPECT_EQ(r.rules[2].pass, from_a == from_b);
  }
}

TEST(Rules, IncomparableCardinalities) {
  EXPECT_THROW(godfrey_rules(fixtures::two_input(1), fixtures::path3_leak(1)), PreconditionError);
}

TEST(RhsCount, WorkedExamples) {
  const auto c = rhs_coefficient_count(fixtures::two_input(1));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].input, 1);
  EXPECT_EQ(c[0].count, 1);
  EXPECT_EQ(c[1].input, 2);
  EXPECT_EQ(c[1].count, 2);
  const auto s = rhs_coefficient_count(fixtures::small2(1));
  EXPECT_EQ(s[0].count, 1);
}

TEST(RhsCount, UnreachableInputCountsZero) {
  const ModelSpec m(3, {{1, 3}, {3, 2}}, {1, 2}, {3}, {2});
  const auto c = rhs_coefficient_count(m);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c[0].reachable);
  EXPECT_FALSE(c[1].reachable);
  EXPECT_EQ(c[1].count, 0);
}

TEST(RhsCount, MatchesSymbolicCountOnRandomModels) {
  std::mt19937_64 rng(59);
  for (int k = 0; k < 40; ++k) {
    const auto m = oracle::random_output_connectable(rng, 1 + static_cast<int>(rng() % 5));
    for (const auto& c : rhs_coefficient_count(m)) {
      if (!c.reachable) continue;
      EXPECT_EQ(c.count, symbolic_rhs_count(m, c.input, c.output)) << format_model(m);
    }
  }
}
