#include <gtest/gtest.h>

#include <random>

#include "strongcolor/lp/revised_simplex.hpp"

using namespace strongcolor::lp;

namespace {

DenseMatrix matrix(const std::vector<std::vector<double>>& rows) {
  DenseMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) a(r, c) = rows[r][c];
  return a;
}

// Primal feasibility, dual feasibility and equal objectives together certify
// optimality independently of how the solver got there.
void expect_certified(const DenseMatrix& a, const std::vector<double>& b, const std::vector<double>& c, const Result& r) {
  ASSERT_EQ(r.status, Status::Optimal);
  const double tol = 1e-7;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) lhs += a(i, j) * r.x[j];
    EXPECT_LE(lhs, b[i] + tol);
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    EXPECT_GE(r.x[j], -tol);
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += a(i, j) * r.duals[i];
    EXPECT_GE(col, c[j] - tol);
  }
  double dual_obj = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) dual_obj += b[i] * r.duals[i];
  EXPECT_NEAR(dual_obj, r.objective, 1e-7);
}

}  // namespace

TEST(RevisedSimplex, TextbookProblem) {
  auto a = matrix({{1, 0}, {0, 2}, {3, 2}});
  std::vector<double> b{4, 12, 18}, c{3, 5};
  auto r = maximize(a, b, c);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_NEAR(r.objective, 36.0, 1e-9);
  EXPECT_NEAR(r.x[0], 2.0, 1e-9);
  EXPECT_NEAR(r.x[1], 6.0, 1e-9);
  EXPECT_NEAR(r.duals[0], 0.0, 1e-9);
  EXPECT_NEAR(r.duals[1], 1.5, 1e-9);
  EXPECT_NEAR(r.duals[2], 1.0, 1e-9);
  expect_certified(a, b, c, r);
}

TEST(RevisedSimplex, DetectsUnboundedness) {
  auto a = matrix({{-1, 1}});
  std::vector<double> b{1}, c{1, 0};
  EXPECT_EQ(maximize(a, b, c).status, Status::Unbounded);
}

TEST(RevisedSimplex, RejectsNegativeRightHandSide) {
  auto a = matrix({{1}});
  std::vector<double> b{-1}, c{1};
  EXPECT_THROW(maximize(a, b, c), std::invalid_argument);
  std::vector<double> short_c{};
  std::vector<double> ok_b{1};
  EXPECT_THROW(maximize(a, ok_b, short_c), std::invalid_argument);
}

TEST(RevisedSimplex, KleeMintyCube) {
  for (std::size_t n = 2; n <= 6; ++n) {
    DenseMatrix a(n, n);
    std::vector<double> b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) a(i, j) = std::pow(2.0, static_cast<double>(i - j + 1));
      a(i, i) = 1.0;
      b[i] = std::pow(5.0, static_cast<double>(i + 1));
      c[i] = std::pow(2.0, static_cast<double>(n - 1 - i));
    }
    auto r = maximize(a, b, c);
    EXPECT_NEAR(r.objective, std::pow(5.0, static_cast<double>(n)), 1e-6);
    expect_certified(a, b, c, r);
  }
}

TEST(RevisedSimplex, BealeCyclingExampleTerminates) {
  auto a = matrix({{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}});
  std::vector<double> b{0, 0, 1}, c{0.75, -150, 0.02, -6};
  for (std::size_t threshold : {0, 500}) {
    Options opt;
    opt.stall_threshold = threshold;
    auto r = maximize(a, b, c, opt);
    EXPECT_NEAR(r.objective, 0.05, 1e-9);
    expect_certified(a, b, c, r);
    if (threshold == 0) {
      EXPECT_TRUE(r.used_bland);
    }
  }
}

TEST(RevisedSimplex, IterationLimitIsReported) {
  auto a = matrix({{1, 0}, {0, 2}, {3, 2}});
  std::vector<double> b{4, 12, 18}, c{3, 5};
  Options opt;
  opt.max_iterations = 1;
  EXPECT_EQ(maximize(a, b, c, opt).status, Status::IterationLimit);
}

TEST(RevisedSimplex, RandomPackingProblemsAreCertified) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(0.0, 3.0);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 3 + trial % 12, cols = 2 + (trial * 7) % 15;
    DenseMatrix a(rows, cols);
    std::vector<double> b(rows), c(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      b[i] = 1.0 + coef(rng);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = sparse(rng) ? coef(rng) + 0.1 : 0.0;
    }
    // a positive entry in every column keeps the problem bounded
    for (std::size_t j = 0; j < cols; ++j) a(j % rows, j) += 1.0;
    for (std::size_t j = 0; j < cols; ++j) c[j] = coef(rng);
    Options every_pivot;
    every_pivot.refactor_interval = 1;
    auto r = maximize(a, b, c);
    auto s = maximize(a, b, c, every_pivot);
    expect_certified(a, b, c, r);
    expect_certified(a, b, c, s);
    EXPECT_NEAR(r.objective, s.objective, 1e-8);
  }
}

TEST(RevisedSimplex, ZeroByZero) {
  DenseMatrix a(0, 0);
  auto r = maximize(a, std::vector<double>{}, std::vector<double>{});
  EXPECT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.objective, 0.0);
}
