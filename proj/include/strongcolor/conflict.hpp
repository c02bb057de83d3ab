#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongcolor/bitset.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

/// Square of the line graph. Vertex i is edge i of the source graph; two
/// edges are adjacent when they are at edge distance at most 2.
class ConflictGraph {
 public:
  static constexpr std::size_t kBitsetRowLimit = 4096;

  ConflictGraph() = default;

  explicit ConflictGraph(const Graph& g) : source_(g), adj_(g.num_edges()) {
    const std::size_t m = g.num_edges();
    // Mark-and-sweep over the closed neighbourhoods of both endpoints.
    std::vector<std::size_t> stamp(m, m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      stamp[e] = e;
      auto visit_vertex = [&](Vertex x) {
        for (EdgeId f : g.incident_edges(x)) {
          if (stamp[f] != e) {
            stamp[f] = e;
            adj_[e].push_back(f);
          }
        }
      };
      for (Vertex end : {ed.u, ed.v}) {
        visit_vertex(end);
        for (Vertex x : g.neighbors(end)) visit_vertex(x);
      }
      std::sort(adj_[e].begin(), adj_[e].end());
    }
    if (m <= kBitsetRowLimit) {
      rows_.assign(m, Bitset(m));
      for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : adj_[e]) rows_[e].set(f);
    }
  }

  std::size_t size() const { return adj_.size(); }
  const Graph& source() const { return source_; }

  std::span<const EdgeId> neighbors(EdgeId e) const { return adj_.at(e); }
  std::size_t degree(EdgeId e) const { return adj_.at(e).size(); }

  bool adjacent(EdgeId e, EdgeId f) const {
    if (!rows_.empty()) return rows_[e].test(f);
    const auto& nb = adj_.at(e);
    return std::binary_search(nb.begin(), nb.end(), f);
  }

  bool has_bitset_rows() const { return !rows_.empty(); }
  /// Only valid when has_bitset_rows().
  const Bitset& row(EdgeId e) const { return rows_.at(e); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adj_) best = std::max(best, nb.size());
    return best;
  }

 private:
  Graph source_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<Bitset> rows_;
};

inline ConflictGraph build_conflict_graph(const Graph& g) { return ConflictGraph(g); }

/// Sorted set of pairwise non-conflicting edge ids.
struct InducedMatching {
  std::vector<EdgeId> members;

  friend bool operator==(const InducedMatching&, const InducedMatching&) = default;
  friend auto operator<=>(const InducedMatching&, const InducedMatching&) = default;
};

/// True iff every two edges of s are at distance at least 3. Works directly
/// on the source graph: two edges conflict iff some vertex of one equals or
/// neighbours some vertex of the other.
inline bool is_induced_matching(const Graph& g, std::span<const EdgeId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Edge& a = g.edge(s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return false;
      const Edge& b = g.edge(s[j]);
      for (Vertex x : {a.u, a.v})
        for (Vertex y : {b.u, b.v})
          if (x == y || g.adjacent(x, y)) return false;
    }
  }
  return true;
}

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("more than " + std::to_string(cap) + " induced matchings; use column generation"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// All non-empty induced matchings in lexicographic order of member lists.
inline std::vector<InducedMatching> enumerate_induced_matchings(const ConflictGraph& l, std::size_t cap) {
  std::vector<InducedMatching> out;
  std::vector<EdgeId> current;
  const std::size_t m = l.size();

  auto extend = [&](auto&& self, EdgeId from) -> void {
    for (EdgeId e = from; e < m; ++e) {
      bool ok = std::none_of(current.begin(), current.end(), [&](EdgeId f) { return l.adjacent(e, f); });
      if (!ok) continue;
      if (out.size() == cap) throw CapExceeded(cap);
      current.push_back(e);
      out.push_back({current});
      self(self, e + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

inline std::vector<InducedMatching> enumerate_induced_matchings(const Graph& g, std::size_t cap) {
  return enumerate_induced_matchings(ConflictGraph(g), cap);
}

}  // namespace strongcolor
