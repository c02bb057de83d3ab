#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "strongcolor/bitset.hpp"
#include "strongcolor/conflict.hpp"
#include "strongcolor/deadline.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

/// Edge set of G whose edges are pairwise within distance 2; its size is a
/// lower bound on the clique number of the conflict graph, and equals it
/// when produced by a completed max_clique call.
struct CliqueWitness {
  std::vector<EdgeId> members;
  std::size_t size() const { return members.size(); }
};

class CliqueTimeout : public std::runtime_error {
 public:
  explicit CliqueTimeout(CliqueWitness best)
      : std::runtime_error("max_clique: time budget exhausted"), incumbent(std::move(best)) {}
  /// Best clique found so far; a lower bound only.
  CliqueWitness incumbent;
};

namespace detail {

// Tomita-style MCQ: greedy sequential colouring bounds the clique that can
// still be built from the candidate set, vertices expanded from the highest
// colour class down.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const ConflictGraph& l, Deadline deadline) : deadline_(deadline) {
    const std::size_t m = l.size();
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), EdgeId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeId a, EdgeId b) { return l.degree(a) > l.degree(b); });
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[order_[i]] = i;
    rows_.assign(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (EdgeId f : l.neighbors(order_[i])) rows_[i].set(pos[f]);
  }

  CliqueWitness run() {
    const std::size_t m = order_.size();
    if (m == 0) return {};
    best_ = {0};
    Bitset all(m);
    for (std::size_t i = 0; i < m; ++i) all.set(i);
    expand(all);
    return witness(best_);
  }

 private:
  CliqueWitness witness(const std::vector<std::size_t>& positions) const {
    CliqueWitness w;
    for (std::size_t p : positions) w.members.push_back(order_[p]);
    std::sort(w.members.begin(), w.members.end());
    return w;
  }

  void colour_sort(const Bitset& candidates, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
    Bitset uncoloured = candidates;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      Bitset cls = uncoloured;
      for (std::size_t v = cls.first(); v < cls.size(); v = cls.next(v + 1)) {
        cls.subtract(rows_[v]);
        uncoloured.reset(v);
        verts.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  void expand(Bitset candidates) {
    if (deadline_.tick()) throw CliqueTimeout(witness(best_));
    std::vector<std::size_t> verts, colours;
    colour_sort(candidates, verts, colours);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_.size()) return;
      std::size_t v = verts[i];
      current_.push_back(v);
      Bitset next = candidates & rows_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  Deadline deadline_;
  std::vector<EdgeId> order_;
  std::vector<Bitset> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Exact maximum clique of the conflict graph. Deterministic: identical
/// input gives an identical witness. Throws CliqueTimeout when the deadline
/// passes before optimality is proven.
inline CliqueWitness max_clique(const ConflictGraph& l, Deadline deadline = Deadline::none()) {
  return detail::MaxCliqueSearch(l, deadline).run();
}

/// Audits a witness straight from the source graph, pair by pair through
/// edge_distance, without touching any ConflictGraph.
inline bool verify_clique_witness(const Graph& g, std::span<const EdgeId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return false;
      auto d = edge_distance(g, s[i], s[j]);
      if (!d || *d > 2) return false;
    }
  }
  return true;
}

}  // namespace strongcolor
