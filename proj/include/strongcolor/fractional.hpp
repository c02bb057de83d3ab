#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongcolor/conflict.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/lp/revised_simplex.hpp"
#include "strongcolor/weighted_independent_set.hpp"

namespace strongcolor {

/// Tolerance for column admission and coverage checks.
inline constexpr double kFractionalEpsilon = 1e-7;

class InfeasibleMaster : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MasterSolution {
  std::vector<double> weights;  // one per column
  std::vector<double> duals;    // one per edge
  double objective = 0.0;
};

/// Restricted master LP in covering form:
///   minimise sum_m w_m  s.t.  sum_{m containing e} w_m >= 1,  w >= 0.
///
/// Solved through its dual packing LP (max sum y_e s.t. y(m) <= 1), whose
/// origin is feasible; the simplex multipliers of the packing rows are the
/// covering weights.
inline MasterSolution solve_master_lp(std::span<const InducedMatching> columns, std::size_t num_edges,
                                      lp::Options options = {}) {
  std::vector<bool> covered(num_edges, false);
  for (const auto& col : columns)
    for (EdgeId e : col.members) {
      if (e >= num_edges) throw std::out_of_range("solve_master_lp: column references edge " + std::to_string(e));
      covered[e] = true;
    }
  for (std::size_t e = 0; e < num_edges; ++e)
    if (!covered[e]) throw InfeasibleMaster("solve_master_lp: edge " + std::to_string(e) + " is in no column");

  MasterSolution out;
  if (num_edges == 0) {
    out.weights.assign(columns.size(), 0.0);
    return out;
  }
  lp::DenseMatrix a(columns.size(), num_edges);
  for (std::size_t r = 0; r < columns.size(); ++r)
    for (EdgeId e : columns[r].members) a(r, e) = 1.0;
  std::vector<double> ones_rows(columns.size(), 1.0), ones_cols(num_edges, 1.0);
  auto res = lp::maximize(a, ones_rows, ones_cols, options);
  if (res.status != lp::Status::Optimal)
    throw std::runtime_error("solve_master_lp: simplex did not reach optimality");
  out.weights = std::move(res.duals);
  out.duals = std::move(res.x);
  for (double w : out.weights) out.objective += w;
  return out;
}

/// Pricing oracle: induced matching of maximum total dual weight.
inline WeightedMatching price_induced_matching(const ConflictGraph& l, std::span<const double> duals) {
  for (double y : duals)
    if (y < 0.0) throw std::invalid_argument("price_induced_matching: duals must be non-negative");
  return max_weight_induced_matching(l, duals);
}

inline WeightedMatching price_induced_matching(const Graph& g, std::span<const double> duals) {
  return price_induced_matching(ConflictGraph(g), duals);
}

enum class FractionalStatus { Optimal, IterationLimit };

struct WeightedColumn {
  InducedMatching matching;
  double weight = 0.0;
};

struct FractionalSolution {
  std::vector<WeightedColumn> columns;  // positive-weight columns only
  double objective = 0.0;
  std::vector<double> duals;
  FractionalStatus status = FractionalStatus::Optimal;
  /// Valid lower bound on the optimum; equals objective when Optimal.
  double lower_bound = 0.0;
  std::size_t iterations = 0;
  std::size_t columns_generated = 0;
};

struct FractionalOptions {
  double epsilon = kFractionalEpsilon;
  std::size_t max_iterations = 10000;
};

namespace detail {

inline FractionalSolution package(std::span<const InducedMatching> columns, MasterSolution master) {
  FractionalSolution sol;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (master.weights[i] > 1e-12) sol.columns.push_back({columns[i], master.weights[i]});
  sol.objective = master.objective;
  sol.lower_bound = master.objective;
  sol.duals = std::move(master.duals);
  sol.columns_generated = columns.size();
  return sol;
}

}  // namespace detail

/// Fractional strong chromatic index by column generation, starting from
/// the singleton matchings and adding the priced matching while its dual
/// weight exceeds 1 + epsilon.
inline FractionalSolution fractional_strong_chromatic_index(const Graph& g, FractionalOptions opt = {}) {
  const std::size_t m = g.num_edges();
  if (m == 0) return {};
  ConflictGraph l(g);
  std::vector<InducedMatching> columns;
  std::set<std::vector<EdgeId>> present;
  for (EdgeId e = 0; e < m; ++e) {
    columns.push_back(InducedMatching{std::vector<EdgeId>{e}});
    present.insert(std::vector<EdgeId>{e});
  }

  FractionalStatus status = FractionalStatus::IterationLimit;
  double priced_weight = 0.0;
  std::size_t iter = 0;
  MasterSolution master;
  for (; iter < opt.max_iterations; ++iter) {
    master = solve_master_lp(columns, m);
    WeightedMatching priced = price_induced_matching(l, master.duals);
    priced_weight = priced.weight;
    if (priced.weight <= 1.0 + opt.epsilon) {
      status = FractionalStatus::Optimal;
      break;
    }
    // A repeated column means the duals did not move; nothing more to learn.
    if (!present.insert(priced.matching.members).second) break;
    columns.push_back(std::move(priced.matching));
  }
  if (status != FractionalStatus::Optimal && iter == opt.max_iterations) master = solve_master_lp(columns, m);

  FractionalSolution sol = detail::package(columns, std::move(master));
  sol.status = status;
  sol.iterations = iter;
  if (status != FractionalStatus::Optimal) {
    // Scaling the duals by the best pricing value makes them feasible.
    sol.lower_bound = priced_weight > 1.0 ? sol.objective / priced_weight : sol.objective;
  }
  return sol;
}

/// Single LP over every induced matching. Intended for small graphs; throws
/// CapExceeded when there are more than `cap` matchings.
inline FractionalSolution fractional_by_enumeration(const Graph& g, std::size_t cap = 1u << 16) {
  if (g.num_edges() == 0) return {};
  auto columns = enumerate_induced_matchings(g, cap);
  FractionalSolution sol = detail::package(columns, solve_master_lp(columns, g.num_edges()));
  sol.iterations = 1;
  return sol;
}

/// (omega + maxdeg(L) + 1) / 2, the fractional colouring bound applied to
/// the conflict graph. omega must be the conflict graph's clique number.
inline double mr_fractional_bound(const ConflictGraph& l, std::size_t omega) {
  return (static_cast<double>(omega) + static_cast<double>(l.max_degree()) + 1.0) / 2.0;
}

inline double mr_fractional_bound(const Graph& g, std::size_t omega) { return mr_fractional_bound(ConflictGraph(g), omega); }

}  // namespace strongcolor
