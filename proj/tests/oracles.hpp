#pragma once

// Brute-force reference implementations. These are deliberately slow and share
// no code with the library beyond the Graph container: distances come from BFS
// in the line graph, cliques and colourings from subset enumeration, and the
// fractional value from a plain tableau simplex over every induced matching.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "strongcolor/graph.hpp"

namespace oracle {

using strongcolor::Graph;

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// All-pairs distances in the line graph L(G). Intersecting edges are at
// distance 1, which matches the edge distance of G.
inline std::vector<std::vector<std::size_t>> line_graph_distances(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(m, kUnreachable));
  auto meet = [&](std::size_t a, std::size_t b) {
    auto ea = g.edge(static_cast<strongcolor::EdgeId>(a));
    auto eb = g.edge(static_cast<strongcolor::EdgeId>(b));
    return ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
  };
  for (std::size_t s = 0; s < m; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y = 0; y < m; ++y)
        if (y != x && dist[s][y] == kUnreachable && meet(x, y)) {
          dist[s][y] = dist[s][x] + 1;
          q.push(y);
        }
    }
  }
  return dist;
}

// Conflict adjacency as bitmasks (requires m <= 32).
inline std::vector<std::uint32_t> conflict_masks(const Graph& g) {
  auto dist = line_graph_distances(g);
  std::vector<std::uint32_t> adj(g.num_edges(), 0);
  for (std::size_t a = 0; a < g.num_edges(); ++a)
    for (std::size_t b = 0; b < g.num_edges(); ++b)
      if (a != b && dist[a][b] <= 2) adj[a] |= 1u << b;
  return adj;
}

inline bool is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  for (std::size_t i = 0; i < adj.size(); ++i)
    if ((set >> i) & 1u)
      if ((set & ~(1u << i)) & ~adj[i]) return false;
  return true;
}

inline bool is_independent(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (((set >> i) & 1u) && (set & adj[i])) return false;
  return true;
}

inline std::size_t max_clique_size(const Graph& g) {
  auto adj = conflict_masks(g);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << adj.size()); ++s)
    if (is_clique(adj, s)) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  return best;
}

// Minimum number of induced matchings covering E, by subset DP.
inline std::size_t strong_chromatic_index(const Graph& g) {
  auto adj = conflict_masks(g);
  const std::uint32_t full = (1u << adj.size()) - 1;
  std::vector<bool> indep(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) indep[s] = is_independent(adj, s);
  std::vector<std::size_t> chi(full + 1, kUnreachable);
  chi[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s & ~low;
    // colour classes containing the lowest element of s
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      if (indep[t | low] && chi[s & ~(t | low)] != kUnreachable)
        chi[s] = std::min(chi[s], chi[s & ~(t | low)] + 1);
      if (t == 0) break;
    }
  }
  return chi[full];
}

inline std::vector<std::uint32_t> induced_matchings(const Graph& g) {
  auto adj = conflict_masks(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1u << adj.size()); ++s)
    if (is_independent(adj, s)) out.push_back(s);
  return out;
}

// max 1'y  s.t.  sum_{e in M} y_e <= 1 for every induced matching M, y >= 0.
// Its optimum equals the fractional strong chromatic index by LP duality.
// Dense tableau, Bland's rule throughout.
inline double fractional_strong_chromatic_index(const Graph& g) {
  const std::size_t m = g.num_edges();
  if (m == 0) return 0.0;
  const auto rows = induced_matchings(g);
  const std::size_t k = rows.size(), cols = m + k;
  std::vector<std::vector<double>> t(k + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t e = 0; e < m; ++e) t[r][e] = (rows[r] >> e) & 1u ? 1.0 : 0.0;
    t[r][m + r] = 1.0;
    t[r][cols] = 1.0;
    basis[r] = m + r;
  }
  for (std::size_t e = 0; e < m; ++e) t[k][e] = -1.0;  // objective row: -c
  const double eps = 1e-11;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (t[k][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = k;
    double best = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      if (t[r][enter] <= eps) continue;
      const double ratio = t[r][cols] / t[r][enter];
      if (leave == k || ratio < best - eps || (std::abs(ratio - best) <= eps && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    const double piv = t[leave][enter];
    for (double& x : t[leave]) x /= piv;
    for (std::size_t r = 0; r <= k; ++r) {
      if (r == leave || t[r][enter] == 0.0) continue;
      const double f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[k][cols];
}

// graph6 written straight from the format definition: a bit string of the
// upper triangle in column order, padded, cut into six-bit groups.
inline std::string graph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::string bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      bits.push_back(g.adjacent(static_cast<strongcolor::Vertex>(i), static_cast<strongcolor::Vertex>(j)) ? '1' : '0');
  while (bits.size() % 6) bits.push_back('0');
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
  return out;
}

}  // namespace oracle
