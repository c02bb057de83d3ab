#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strongcolor/clique.hpp"
#include "strongcolor/coloring.hpp"
#include "strongcolor/fractional.hpp"
#include "strongcolor/generators.hpp"

using namespace strongcolor;

namespace {

std::vector<InducedMatching> singletons(std::size_t m) {
  std::vector<InducedMatching> out;
  for (EdgeId e = 0; e < m; ++e) out.push_back(InducedMatching{std::vector<EdgeId>{e}});
  return out;
}

void expect_valid_solution(const Graph& g, const FractionalSolution& s) {
  std::vector<double> cover(g.num_edges(), 0.0);
  double total = 0.0;
  for (const auto& col : s.columns) {
    EXPECT_TRUE(is_induced_matching(g, col.matching.members));
    EXPECT_GT(col.weight, 0.0);
    total += col.weight;
    for (EdgeId e : col.matching.members) cover[e] += col.weight;
  }
  for (double c : cover) EXPECT_GE(c, 1.0 - kFractionalEpsilon);
  EXPECT_NEAR(total, s.objective, 1e-9);
  if (s.status == FractionalStatus::Optimal && g.num_edges() > 0) {
    EXPECT_LE(price_induced_matching(g, s.duals).weight, 1.0 + kFractionalEpsilon);
    double dual_total = 0.0;
    for (double y : s.duals) dual_total += y;
    EXPECT_NEAR(dual_total, s.objective, 1e-7);
  }
}

}  // namespace

TEST(SolveMasterLp, Examples) {
  auto c5 = solve_master_lp(singletons(5), 5);
  EXPECT_NEAR(c5.objective, 5.0, 1e-9);
  for (double w : c5.weights) EXPECT_NEAR(w, 1.0, 1e-9);
  std::vector<InducedMatching> both{InducedMatching{{0, 1}}};
  EXPECT_NEAR(solve_master_lp(both, 2).objective, 1.0, 1e-9);
  EXPECT_NEAR(solve_master_lp(singletons(3), 3).objective, 3.0, 1e-9);
}

TEST(SolveMasterLp, UncoveredEdgeIsInfeasible) {
  EXPECT_THROW(solve_master_lp(singletons(2), 3), InfeasibleMaster);
}

TEST(PriceInducedMatching, Examples) {
  std::vector<double> ones5(5, 1.0);
  auto p = price_induced_matching(cycle(5), ones5);
  EXPECT_EQ(p.matching.members.size(), 1u);
  EXPECT_NEAR(p.weight, 1.0, 1e-12);
  std::vector<double> ones2(2, 1.0);
  auto q = price_induced_matching(fixtures::two_k11(), ones2);
  EXPECT_EQ(q.matching.members, (std::vector<EdgeId>{0, 1}));
  EXPECT_NEAR(q.weight, 2.0, 1e-12);
  Graph b = blowup_c5(2);
  std::vector<double> zeros(b.num_edges(), 0.0);
  EXPECT_EQ(price_induced_matching(b, zeros).weight, 0.0);
  std::vector<double> negative{-1.0, 0.5};
  EXPECT_THROW(price_induced_matching(fixtures::two_k11(), negative), std::invalid_argument);
}

TEST(PriceInducedMatching, MatchesEnumerationOnRandomWeights) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_gnp(8, 0.3, rng());
    std::vector<double> y(g.num_edges());
    for (double& v : y) v = weight(rng);
    double best = 0.0;
    for (const auto& m : enumerate_induced_matchings(g, 1 << 16)) {
      double s = 0.0;
      for (EdgeId e : m.members) s += y[e];
      best = std::max(best, s);
    }
    auto p = price_induced_matching(g, y);
    ASSERT_NEAR(p.weight, best, 1e-12);
    ASSERT_TRUE(is_induced_matching(g, p.matching.members));
  }
}

TEST(FractionalStrongChromaticIndex, Examples) {
  auto c5 = fractional_strong_chromatic_index(cycle(5));
  EXPECT_EQ(c5.status, FractionalStatus::Optimal);
  EXPECT_NEAR(c5.objective, 5.0, 1e-6);
  expect_valid_solution(cycle(5), c5);
  EXPECT_NEAR(fractional_strong_chromatic_index(complete_bipartite(3, 3)).objective, 9.0, 1e-6);
  auto two = fractional_strong_chromatic_index(fixtures::two_k11());
  EXPECT_NEAR(two.objective, 1.0, 1e-6);
  ASSERT_EQ(two.columns.size(), 1u);
  EXPECT_EQ(two.columns[0].matching.members, (std::vector<EdgeId>{0, 1}));
  auto empty = fractional_strong_chromatic_index(Graph(3, {}));
  EXPECT_EQ(empty.objective, 0.0);
}

TEST(FractionalStrongChromaticIndex, CyclesAreVertexTransitive) {
  // every edge lies in the same number of maximum induced matchings, so the
  // value is n / floor(n / 3)
  for (std::size_t n = 4; n <= 14; ++n) {
    auto s = fractional_strong_chromatic_index(cycle(n));
    EXPECT_NEAR(s.objective, static_cast<double>(n) / static_cast<double>(n / 3), 1e-6) << "n=" << n;
    expect_valid_solution(cycle(n), s);
  }
}

TEST(FractionalStrongChromaticIndex, MatchesEnumerationOracleOnFiveVertexGraphs) {
  for_each_graph(5, [](const Graph& g) {
    auto cg = fractional_strong_chromatic_index(g);
    ASSERT_EQ(cg.status, FractionalStatus::Optimal);
    ASSERT_NEAR(cg.objective, oracle::fractional_strong_chromatic_index(g), 1e-6);
    ASSERT_NEAR(cg.objective, fractional_by_enumeration(g).objective, 1e-6);
  });
}

TEST(FractionalStrongChromaticIndex, MatchesEnumerationOracleUpToTwelveEdges) {
  std::mt19937_64 rng(123);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_gnp(6 + trial % 4, 0.35, rng());
    if (g.num_edges() > 12) continue;
    ++tested;
    auto cg = fractional_strong_chromatic_index(g);
    expect_valid_solution(g, cg);
    ASSERT_NEAR(cg.objective, oracle::fractional_strong_chromatic_index(g), 1e-6);
  }
  EXPECT_GT(tested, 100);
}

TEST(FractionalStrongChromaticIndex, FinalDualsAreFeasibleForEveryMatching) {
  Graph g = random_gnp(9, 0.35, 4);
  auto s = fractional_strong_chromatic_index(g);
  for (const auto& m : enumerate_induced_matchings(g, 1 << 16)) {
    double w = 0.0;
    for (EdgeId e : m.members) w += s.duals[e];
    EXPECT_LE(w, 1.0 + kFractionalEpsilon);
  }
}

TEST(FractionalStrongChromaticIndex, IterationLimitGivesValidLowerBound) {
  Graph g = blowup_c5(2);
  FractionalOptions opt;
  opt.max_iterations = 1;
  auto s = fractional_strong_chromatic_index(g, opt);
  const double exact = fractional_strong_chromatic_index(g).objective;
  if (s.status == FractionalStatus::IterationLimit) {
    EXPECT_LE(s.lower_bound, exact + 1e-9);
    EXPECT_GE(s.objective, exact - 1e-9);
  }
  EXPECT_NEAR(exact, 20.0, 1e-6);
}

TEST(FractionalStrongChromaticIndex, SandwichedBetweenCliqueAndIndex) {
  for_each_graph(5, [](const Graph& g) {
    ConflictGraph l(g);
    const double omega = static_cast<double>(max_clique(l).size());
    const double chi = static_cast<double>(exact_strong_chromatic_index(l).num_colors);
    const double f = fractional_strong_chromatic_index(g).objective;
    ASSERT_LE(omega, f + kFractionalEpsilon);
    ASSERT_LE(f, chi + kFractionalEpsilon);
    const double d2 = static_cast<double>(max_degree(g) * max_degree(g));
    ASSERT_LE(f, 1.75 * d2 + kFractionalEpsilon);
    if (g.num_edges() > 0) {
      ASSERT_LE(f, mr_fractional_bound(l, max_clique(l).size()) + kFractionalEpsilon);
    }
  });
}

TEST(MolloyReedBound, Examples) {
  EXPECT_DOUBLE_EQ(mr_fractional_bound(cycle(5), 5), 5.0);
  EXPECT_DOUBLE_EQ(mr_fractional_bound(fixtures::single_edge(), 1), 1.0);
  EXPECT_DOUBLE_EQ(mr_fractional_bound(complete_bipartite(2, 2), 4), 4.0);
}
