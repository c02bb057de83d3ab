#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongcolor {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  bool shares_vertex(const Edge& e) const { return touches(e.u) || touches(e.v); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edge ids are dense and follow the order the edges were supplied in.
/// Loops, duplicate pairs and out-of-range endpoints are rejected on
/// construction. Immutable afterwards.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n), incident_(n) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [a, b] = edges_[i];
      if (a == b) throw InvalidGraph("edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(a));
      if (a >= n_ || b >= n_) throw InvalidGraph("edge " + std::to_string(i) + " has an endpoint outside 0.." + std::to_string(n_));
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
        throw InvalidGraph("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      adj_[a].push_back(b);
      adj_[b].push_back(a);
      incident_[a].push_back(static_cast<EdgeId>(i));
      incident_[b].push_back(static_cast<EdgeId>(i));
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  /// Ids of the edges incident to v, ascending.
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_.at(v); }

  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Same graph with edges re-indexed in lexicographic (min, max) order.
  Graph normalized() const {
    std::vector<Edge> sorted;
    sorted.reserve(edges_.size());
    for (const auto& e : edges_) sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(sorted.begin(), sorted.end());
    return Graph(n_, std::move(sorted));
  }

  /// Graph on the same vertex set keeping only the listed edges, in the given order.
  Graph edge_subgraph(std::span<const EdgeId> ids) const {
    std::vector<Edge> kept;
    kept.reserve(ids.size());
    for (EdgeId e : ids) kept.push_back(edges_.at(e));
    return Graph(n_, std::move(kept));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// BFS hop counts from a set of sources; unreachable vertices keep nullopt.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<std::optional<std::size_t>> dist(g.num_vertices());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

/// Distance between two distinct edges: 1 when they intersect, otherwise
/// one more than the number of edges on a shortest path joining them.
/// nullopt when the edges lie in different components.
inline std::optional<std::size_t> edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("edge_distance: an edge has no distance to itself");
  if (e >= g.num_edges() || f >= g.num_edges()) throw std::out_of_range("edge_distance: edge id out of range");
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  const Vertex sources[] = {a.u, a.v};
  auto dist = bfs_distances(g, sources);
  auto du = dist[b.u];
  auto dv = dist[b.v];
  if (!du && !dv) return std::nullopt;
  std::size_t closest = std::min(du.value_or(std::numeric_limits<std::size_t>::max()),
                                 dv.value_or(std::numeric_limits<std::size_t>::max()));
  return closest + 1;
}

enum class Side : std::uint8_t { Left, Right };

struct Bipartition {
  std::vector<Side> side;
  std::size_t delta_left = 0;
  std::size_t delta_right = 0;
};

/// Two-colours each component by BFS with the lowest-id vertex on the left.
/// nullopt if the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.side.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    result.side[v] = colour[v] == 0 ? Side::Left : Side::Right;
    auto& slot = colour[v] == 0 ? result.delta_left : result.delta_right;
    slot = std::max(slot, g.degree(v));
  }
  return result;
}

}  // namespace strongcolor
