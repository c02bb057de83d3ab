#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "strongcolor/bitset.hpp"
#include "strongcolor/conflict.hpp"

namespace strongcolor {

struct WeightedMatching {
  InducedMatching matching;
  double weight = 0.0;
};

namespace detail {

// Maximum-weight clique in the compatibility graph (complement of the
// conflict graph) restricted to positively weighted edges. Colour classes of
// the compatibility graph are conflict cliques, so each class contributes at
// most its heaviest member to any independent set.
class MaxWeightIndependentSet {
 public:
  MaxWeightIndependentSet(const ConflictGraph& l, std::span<const double> weights) : weights_(weights.begin(), weights.end()) {
    for (EdgeId e = 0; e < l.size(); ++e)
      if (weights_[e] > 0.0) order_.push_back(e);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weights_[a] > weights_[b]; });
    const std::size_t k = order_.size();
    compat_.assign(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && !l.adjacent(order_[i], order_[j])) compat_[i].set(j);
  }

  WeightedMatching run() {
    const std::size_t k = order_.size();
    if (k > 0) {
      Bitset all(k);
      for (std::size_t i = 0; i < k; ++i) all.set(i);
      expand(all, 0.0);
    }
    WeightedMatching out;
    for (std::size_t p : best_) out.matching.members.push_back(order_[p]);
    std::sort(out.matching.members.begin(), out.matching.members.end());
    for (EdgeId e : out.matching.members) out.weight += weights_[e];
    return out;
  }

 private:
  static constexpr double kSlack = 1e-12;

  double w(std::size_t pos) const { return weights_[order_[pos]]; }

  void expand(Bitset candidates, double current_weight) {
    std::vector<std::size_t> verts;
    std::vector<double> reach;
    Bitset uncoloured = candidates;
    double cumulative = 0.0;
    while (!uncoloured.none()) {
      Bitset cls = uncoloured;
      // Positions are sorted by weight, so the first pick is the class maximum.
      cumulative += w(cls.first());
      for (std::size_t v = cls.first(); v < cls.size(); v = cls.next(v + 1)) {
        cls.subtract(compat_[v]);
        uncoloured.reset(v);
        verts.push_back(v);
        reach.push_back(cumulative);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_weight + reach[i] <= best_weight_ + kSlack) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      const double next_weight = current_weight + w(v);
      Bitset next = candidates & compat_[v];
      if (next.none()) {
        if (next_weight > best_weight_ + kSlack) {
          best_weight_ = next_weight;
          best_ = current_;
        }
      } else {
        expand(std::move(next), next_weight);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<double> weights_;
  std::vector<EdgeId> order_;
  std::vector<Bitset> compat_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  double best_weight_ = 0.0;
};

}  // namespace detail

/// Exact maximum-weight induced matching (independent set of the conflict
/// graph). Edges with non-positive weight are never selected; with all
/// weights zero the result is the empty matching of weight 0.
inline WeightedMatching max_weight_induced_matching(const ConflictGraph& l, std::span<const double> weights) {
  if (weights.size() != l.size()) throw std::invalid_argument("max_weight_induced_matching: one weight per edge required");
  return detail::MaxWeightIndependentSet(l, weights).run();
}

}  // namespace strongcolor
