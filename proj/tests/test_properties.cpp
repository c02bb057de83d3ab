#include <gtest/gtest.h>

#include <random>

#include "strongcolor/strongcolor.hpp"

using namespace strongcolor;

TEST(Sweep, SummaryDoesNotDependOnWorkerCount) {
  auto one = sweep_all_graphs(5, {}, 1);
  auto four = sweep_all_graphs(5, {}, 4);
  EXPECT_EQ(one.graphs, 1024u);
  EXPECT_EQ(one.graphs, four.graphs);
  EXPECT_EQ(one.bipartite, four.bipartite);
  EXPECT_EQ(one.theorem_failures, 0u);
  EXPECT_EQ(four.theorem_failures, 0u);
  EXPECT_EQ(one.monitor_violations, four.monitor_violations);
  EXPECT_EQ(one.max_omega_ratio, four.max_omega_ratio);
  EXPECT_EQ(one.max_chi_fs_ratio, four.max_chi_fs_ratio);
  EXPECT_EQ(one.counterexamples, four.counterexamples);
}

TEST(Sweep, FourVertexCounts) {
  auto s = sweep_all_graphs(4);
  EXPECT_EQ(s.graphs, 64u);
  EXPECT_EQ(s.theorem_failures, 0u);
  EXPECT_EQ(s.inexact, 0u);
}

TEST(Sweep, MergeIsOrderIndependent) {
  auto a = sweep_all_graphs(3), b = sweep_all_graphs(4);
  SweepSummary ab, ba;
  ab.merge(a);
  ab.merge(b);
  ba.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.graphs, ba.graphs);
  EXPECT_EQ(ab.max_omega_ratio, ba.max_omega_ratio);
  EXPECT_EQ(ab.failures, ba.failures);
}

TEST(BlowupC5, ExtremalEqualities) {
  for (std::size_t t = 1; t <= 3; ++t) {
    auto r = bound_report(blowup_c5(t));
    const std::size_t target = 5 * t * t;
    EXPECT_EQ(r.omega, target);
    EXPECT_EQ(r.chi_s_upper, target);
    EXPECT_TRUE(r.chi_s_exact);
    EXPECT_NEAR(r.chi_fs, static_cast<double>(target), 1e-6);
    EXPECT_EQ(4 * r.omega, 5 * r.max_degree * r.max_degree);
    EXPECT_TRUE(r.theorems_hold());
    EXPECT_TRUE(r.monitor_violations().empty());
  }
}

TEST(BoundReport, RandomMediumGraphsSatisfyEveryTheorem) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 7 + trial % 5;
    Graph g = random_gnp(n, 0.2 + 0.05 * (trial % 6), rng());
    auto r = bound_report(g);
    ASSERT_TRUE(r.theorems_hold()) << io::write_graph6(g);
    ASSERT_TRUE(verify_strong_coloring(g, r.coloring));
    ASSERT_TRUE(verify_clique_witness(g, r.clique.members));
    ASSERT_LE(static_cast<double>(r.omega), r.chi_fs + 1e-6);
    ASSERT_LE(r.chi_fs, static_cast<double>(r.chi_s_upper) + 1e-6);
    if (!r.clique.members.empty()) {
      auto dec = decompose_abcd(g, r.clique.members);
      ASSERT_TRUE(dec.holds);
      ASSERT_TRUE(general_s_claim(g, dec).holds);
      if (r.bipartite) {
        ASSERT_TRUE(bipartite_d_bound(g, dec).holds);
      }
    }
  }
}

TEST(BoundReport, BipartiteFamilies) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b) {
      auto r = bound_report(complete_bipartite(a, b));
      EXPECT_EQ(r.omega, a * b);
      EXPECT_EQ(r.chi_s_upper, a * b);
      EXPECT_TRUE(r.theorems_hold());
      EXPECT_TRUE(r.monitor_violations().empty());
    }
  for (std::size_t n = 4; n <= 12; n += 2) EXPECT_TRUE(bound_report(cycle(n)).theorems_hold());
}
