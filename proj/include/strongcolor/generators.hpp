#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongcolor/graph.hpp"
#include "strongcolor/lemma1_instance.hpp"

namespace strongcolor {

/// SplitMix64. The stream for a given seed is part of the random_gnp
/// contract, so this is pinned rather than delegated to <random>.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {
inline void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}
}  // namespace detail

/// C5 with every vertex replaced by an independent set of size t and
/// consecutive classes completely joined. 5t vertices, 5t^2 edges, max degree 2t.
inline Graph blowup_c5(std::size_t t) {
  detail::require_positive(t, "blowup_c5: t");
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < 5; ++c) {
    const std::size_t d = (c + 1) % 5;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        edges.push_back({static_cast<Vertex>(c * t + i), static_cast<Vertex>(d * t + j)});
  }
  return Graph(5 * t, std::move(edges)).normalized();
}

/// K_{a,b} with the a-side on vertices 0..a-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  detail::require_positive(a, "complete_bipartite: a");
  detail::require_positive(b, "complete_bipartite: b");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Graph(a + b, std::move(edges));
}

/// Two disjoint copies of K_{d,d} with p = w = 2d: d covers equal to the
/// union of both left classes, then d covers equal to the union of both
/// right classes. Meets the edge bound with equality.
inline Lemma1Instance double_kdd_with_covers(std::size_t d) {
  detail::require_positive(d, "double_kdd_with_covers: d");
  // copy k occupies [2dk, 2dk + d) on the left and [2dk + d, 2dk + 2d) on the right
  std::vector<Edge> edges;
  std::vector<Vertex> lefts, rights;
  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t base = 2 * d * k;
    for (std::size_t i = 0; i < d; ++i) {
      lefts.push_back(static_cast<Vertex>(base + i));
      rights.push_back(static_cast<Vertex>(base + d + i));
      for (std::size_t j = 0; j < d; ++j) edges.push_back({static_cast<Vertex>(base + i), static_cast<Vertex>(base + d + j)});
    }
  }
  Lemma1Instance inst;
  inst.s = Graph(4 * d, std::move(edges));
  for (std::size_t i = 0; i < d; ++i) inst.covers.push_back(lefts);
  for (std::size_t i = 0; i < d; ++i) inst.covers.push_back(rights);
  inst.p = static_cast<std::int64_t>(2 * d);
  inst.w = static_cast<std::int64_t>(2 * d);
  return inst;
}

inline Graph path(std::size_t n) {
  detail::require_positive(n, "path: n");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges)).normalized();
}

/// K_{1,k}, centre 0.
inline Graph star(std::size_t k) {
  detail::require_positive(k, "star: k");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(k + 1, std::move(edges));
}

/// G(n, prob): one SplitMix64 draw per pair (i, j), i < j, in lexicographic
/// order; the pair is an edge when the unit draw is below prob.
inline Graph random_gnp(std::size_t n, double prob, std::uint64_t seed) {
  detail::require_positive(n, "random_gnp: n");
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("random_gnp: prob must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_unit() < prob) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(n, std::move(edges));
}

/// Number of labelled simple graphs on n vertices, 2^(n(n-1)/2).
inline std::uint64_t all_graphs_count(std::size_t n) {
  if (n > 6) throw std::invalid_argument("all_graphs: n must be at most 6");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Labelled graph on n vertices whose edge set is the subset `mask` of the
/// pairs (i, j), i < j, listed lexicographically (bit k = k-th pair).
inline Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(n, std::move(edges));
}

/// Every labelled simple graph on n <= 6 vertices, once each, in mask order.
template <class Fn>
void for_each_graph(std::size_t n, Fn&& fn) {
  const std::uint64_t total = all_graphs_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(labeled_graph(n, mask));
}

}  // namespace strongcolor
