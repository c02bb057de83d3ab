#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongcolor/clique.hpp"
#include "strongcolor/conflict.hpp"
#include "strongcolor/deadline.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

/// Colour per edge; colours are 0..num_colors-1.
struct StrongColoring {
  std::vector<std::size_t> color_of;
  std::size_t num_colors = 0;
};

class ColoringTimeout : public std::runtime_error {
 public:
  ColoringTimeout(StrongColoring best, std::size_t lb, std::size_t ub)
      : std::runtime_error("exact_strong_chromatic_index: time budget exhausted"),
        incumbent(std::move(best)),
        lower(lb),
        upper(ub) {}
  StrongColoring incumbent;
  std::size_t lower;
  std::size_t upper;
};

/// First-fit over the conflict graph in edge-id order.
inline StrongColoring greedy_strong_coloring(const ConflictGraph& l) {
  const std::size_t m = l.size();
  StrongColoring c;
  c.color_of.assign(m, 0);
  std::vector<std::size_t> seen_at(m + 1, m);
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f : l.neighbors(e))
      if (f < e) seen_at[c.color_of[f]] = e;
    std::size_t colour = 0;
    while (seen_at[colour] == e) ++colour;
    c.color_of[e] = colour;
    c.num_colors = std::max(c.num_colors, colour + 1);
  }
  return c;
}

inline StrongColoring greedy_strong_coloring(const Graph& g) { return greedy_strong_coloring(ConflictGraph(g)); }

inline bool verify_strong_coloring(const Graph& g, const StrongColoring& c) {
  if (c.color_of.size() != g.num_edges()) return false;
  std::vector<std::vector<EdgeId>> classes(c.num_colors);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (c.color_of[e] >= c.num_colors) return false;
    classes[c.color_of[e]].push_back(e);
  }
  // colours must be dense: every class in 0..num_colors-1 is used
  return std::all_of(classes.begin(), classes.end(),
                     [&](const std::vector<EdgeId>& cls) { return !cls.empty() && is_induced_matching(g, cls); });
}

namespace detail {

struct SearchAborted {};

// DSATUR-flavoured greedy used only to tighten the starting upper bound.
inline StrongColoring saturation_greedy(const ConflictGraph& l) {
  const std::size_t m = l.size();
  StrongColoring c;
  c.color_of.assign(m, m);
  std::vector<std::vector<bool>> blocked(m, std::vector<bool>(m + 1, false));
  std::vector<std::size_t> saturation(m, 0);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (EdgeId e = 0; e < m; ++e) {
      if (c.color_of[e] != m) continue;
      if (pick == m || saturation[e] > saturation[pick] ||
          (saturation[e] == saturation[pick] && l.degree(e) > l.degree(pick)))
        pick = e;
    }
    std::size_t colour = 0;
    while (blocked[pick][colour]) ++colour;
    c.color_of[pick] = colour;
    c.num_colors = std::max(c.num_colors, colour + 1);
    for (EdgeId f : l.neighbors(pick)) {
      if (!blocked[f][colour]) {
        blocked[f][colour] = true;
        ++saturation[f];
      }
    }
  }
  return c;
}

// Decides k-colourability of the conflict graph with a clique pre-coloured
// 0..|clique|-1. Branches on the uncoloured vertex with the fewest available
// colours (lowest id on ties) and never opens more than one new colour.
class KColouring {
 public:
  KColouring(const ConflictGraph& l, std::size_t k, Deadline& deadline)
      : l_(l), k_(k), deadline_(deadline), colour_(l.size(), kNone), conflicts_(l.size(), std::vector<std::size_t>(k, 0)) {}

  std::optional<StrongColoring> solve(const std::vector<EdgeId>& clique) {
    if (clique.size() > k_) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
    used_ = clique.size();
    remaining_ = l_.size() - clique.size();
    if (!search()) return std::nullopt;
    StrongColoring c;
    c.color_of = colour_;
    for (auto col : colour_) c.num_colors = std::max(c.num_colors, col + 1);
    return c;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void assign(EdgeId e, std::size_t c) {
    colour_[e] = c;
    for (EdgeId f : l_.neighbors(e)) ++conflicts_[f][c];
  }
  void unassign(EdgeId e) {
    std::size_t c = colour_[e];
    for (EdgeId f : l_.neighbors(e)) --conflicts_[f][c];
    colour_[e] = kNone;
  }
  std::size_t available(EdgeId e) const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < k_; ++c) n += conflicts_[e][c] == 0;
    return n;
  }

  bool search() {
    if (remaining_ == 0) return true;
    if (deadline_.tick()) throw SearchAborted{};
    EdgeId pick = 0;
    std::size_t fewest = k_ + 1;
    for (EdgeId e = 0; e < l_.size(); ++e) {
      if (colour_[e] != kNone) continue;
      std::size_t a = available(e);
      if (a < fewest) {
        fewest = a;
        pick = e;
        if (a == 0) return false;
      }
    }
    const std::size_t limit = std::min(k_, used_ + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (conflicts_[pick][c] != 0) continue;
      const std::size_t saved = used_;
      used_ = std::max(used_, c + 1);
      assign(pick, c);
      --remaining_;
      if (search()) return true;
      ++remaining_;
      unassign(pick);
      used_ = saved;
    }
    return false;
  }

  const ConflictGraph& l_;
  std::size_t k_;
  Deadline& deadline_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::size_t used_ = 0;
  std::size_t remaining_ = 0;
};

}  // namespace detail

/// Optimal strong edge colouring. Lower bound from a maximum clique, upper
/// bound from greedy colourings, then k-colourability tests for increasing k.
/// Throws ColoringTimeout with the best colouring and the [lower, upper]
/// bracket when the deadline passes.
inline StrongColoring exact_strong_chromatic_index(const ConflictGraph& l, Deadline deadline = Deadline::none()) {
  if (l.size() == 0) return {};
  StrongColoring best = greedy_strong_coloring(l);
  StrongColoring dsatur = detail::saturation_greedy(l);
  if (dsatur.num_colors < best.num_colors) best = std::move(dsatur);

  CliqueWitness clique;
  try {
    clique = max_clique(l, deadline);
  } catch (const CliqueTimeout& t) {
    throw ColoringTimeout(best, t.incumbent.size(), best.num_colors);
  }

  for (std::size_t k = clique.size(); k < best.num_colors; ++k) {
    try {
      if (auto found = detail::KColouring(l, k, deadline).solve(clique.members)) return *found;
    } catch (const detail::SearchAborted&) {
      throw ColoringTimeout(best, k, best.num_colors);
    }
  }
  return best;
}

inline StrongColoring exact_strong_chromatic_index(const Graph& g, Deadline deadline = Deadline::none()) {
  return exact_strong_chromatic_index(ConflictGraph(g), deadline);
}

}  // namespace strongcolor
