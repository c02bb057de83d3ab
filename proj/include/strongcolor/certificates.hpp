#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strongcolor/clique.hpp"
#include "strongcolor/coloring.hpp"
#include "strongcolor/conflict.hpp"
#include "strongcolor/deadline.hpp"
#include "strongcolor/fractional.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/lemma1_instance.hpp"

namespace strongcolor {

enum class CheckKind {
  Hypothesis,  // precondition of a lemma
  Structure,   // intermediate fact used by a counting argument
  Bound,       // conclusion of a lemma or counting argument
  Theorem,     // proven global bound; must never fail
  Monitor,     // open conjecture; reported, never asserted
};

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Hypothesis: return "hypothesis";
    case CheckKind::Structure: return "structure";
    case CheckKind::Bound: return "bound";
    case CheckKind::Theorem: return "theorem";
    case CheckKind::Monitor: return "monitor";
  }
  return "?";
}

/// One comparison `observed <relation> bound`. Values are exact integers or
/// halves unless the check involves an LP value.
struct Check {
  std::string name;
  CheckKind kind = CheckKind::Bound;
  std::string relation = "<=";
  double observed = 0.0;
  double bound = 0.0;
  bool holds = true;
  /// False when the check does not apply to this graph (e.g. bipartite-only).
  bool applicable = true;
  /// False when observed is only a bound on the true value (solver timeout).
  bool exact = true;
};

struct CertificateReport {
  std::string name;
  bool holds = true;
  std::vector<std::pair<std::string, std::int64_t>> quantities;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> sets;
  std::vector<Check> checks;
  std::vector<CertificateReport> children;

  void add(Check c) {
    if (c.applicable && !c.holds && c.kind != CheckKind::Monitor) holds = false;
    checks.push_back(std::move(c));
  }
  void quantity(std::string key, std::int64_t value) { quantities.emplace_back(std::move(key), value); }

  std::optional<std::int64_t> get(const std::string& key) const {
    for (const auto& [k, v] : quantities)
      if (k == key) return v;
    return std::nullopt;
  }
  const Check* find(const std::string& check_name) const {
    for (const auto& c : checks)
      if (c.name == check_name) return &c;
    return nullptr;
  }
};

namespace detail {

// observed <= bound_doubled / 2, compared as 2*observed <= bound_doubled.
inline Check halves_check(std::string name, CheckKind kind, std::int64_t observed, std::int64_t bound_doubled) {
  Check c;
  c.name = std::move(name);
  c.kind = kind;
  c.observed = static_cast<double>(observed);
  c.bound = static_cast<double>(bound_doubled) / 2.0;
  c.holds = 2 * observed <= bound_doubled;
  return c;
}

// observed <= (num / den) * base, compared as den*observed <= num*base.
inline Check scaled_check(std::string name, CheckKind kind, std::int64_t observed, std::int64_t num, std::int64_t den,
                          std::int64_t base) {
  Check c;
  c.name = std::move(name);
  c.kind = kind;
  c.observed = static_cast<double>(observed);
  c.bound = static_cast<double>(num * base) / static_cast<double>(den);
  c.holds = den * observed <= num * base;
  return c;
}

inline Check int_check(std::string name, CheckKind kind, std::int64_t observed, std::string relation, std::int64_t bound) {
  Check c;
  c.name = std::move(name);
  c.kind = kind;
  c.relation = relation;
  c.observed = static_cast<double>(observed);
  c.bound = static_cast<double>(bound);
  if (relation == "<=") c.holds = observed <= bound;
  else if (relation == ">") c.holds = observed > bound;
  else if (relation == "==") c.holds = observed == bound;
  else throw std::invalid_argument("int_check: unknown relation " + relation);
  return c;
}

template <class Range>
std::vector<std::int64_t> as_ints(const Range& r) {
  return std::vector<std::int64_t>(r.begin(), r.end());
}

inline std::int64_t sz(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

/// Checks every hypothesis of the vertex-cover edge bound and then the
/// conclusion |E(S)| <= w^2 - pw/2. Hypothesis failures are reported, not
/// thrown; the report holds only if hypotheses and conclusion all hold.
inline CertificateReport lemma1_verify(const Lemma1Instance& inst) {
  using detail::sz;
  const Graph& s = inst.s;
  const std::int64_t p = inst.p;
  const std::int64_t w = inst.w;
  const std::int64_t delta = sz(max_degree(s));
  const std::int64_t edges = sz(s.num_edges());

  CertificateReport r;
  r.name = "lemma1";
  r.quantity("edges", edges);
  r.quantity("max_degree", delta);
  r.quantity("p", p);
  r.quantity("w", w);
  r.quantity("covers", sz(inst.covers.size()));

  std::vector<std::set<Vertex>> covers;
  bool vertices_valid = true;
  for (const auto& cov : inst.covers) {
    std::set<Vertex> c;
    for (Vertex x : cov) {
      if (x >= s.num_vertices()) vertices_valid = false;
      else c.insert(x);
    }
    covers.push_back(std::move(c));
  }

  std::int64_t largest_cover = 0;
  std::int64_t non_covers = 0;
  for (const auto& c : covers) {
    largest_cover = std::max(largest_cover, sz(c.size()));
    bool touches_all = std::all_of(s.edges().begin(), s.edges().end(),
                                   [&](const Edge& e) { return c.count(e.u) || c.count(e.v); });
    non_covers += !touches_all;
  }
  std::int64_t worst_degree_plus_a = 0;
  for (Vertex x = 0; x < s.num_vertices(); ++x) {
    std::int64_t a = 0;
    for (const auto& c : covers) a += c.count(x) ? 1 : 0;
    worst_degree_plus_a = std::max(worst_degree_plus_a, sz(s.degree(x)) + a);
  }
  r.quantity("largest_cover", largest_cover);
  r.quantity("max_degree_plus_cover_count", worst_degree_plus_a);

  r.add(detail::int_check("cover_vertices_valid", CheckKind::Hypothesis, vertices_valid ? 0 : 1, "==", 0));
  r.add(detail::int_check("p_equals_cover_count", CheckKind::Hypothesis, sz(inst.covers.size()), "==", p));
  r.add(detail::int_check("max_degree_le_p", CheckKind::Hypothesis, delta, "<=", p));
  r.add(detail::int_check("p_le_w", CheckKind::Hypothesis, p, "<=", w));
  r.add(detail::int_check("max_degree_gt_w_minus_p", CheckKind::Hypothesis, delta, ">", w - p));
  r.add(detail::int_check("cover_size_le_w", CheckKind::Hypothesis, largest_cover, "<=", w));
  r.add(detail::int_check("covers_touch_every_edge", CheckKind::Hypothesis, non_covers, "==", 0));
  r.add(detail::int_check("degree_plus_cover_count_le_w", CheckKind::Hypothesis, worst_degree_plus_a, "<=", w));
  r.add(detail::halves_check("edges_le_w2_minus_pw_over_2", CheckKind::Bound, edges, 2 * w * w - p * w));
  return r;
}

inline bool lemma1_hypotheses_hold(const CertificateReport& r) {
  return std::all_of(r.checks.begin(), r.checks.end(),
                     [](const Check& c) { return c.kind != CheckKind::Hypothesis || c.holds; });
}

class EmptyClique : public std::invalid_argument {
 public:
  EmptyClique() : std::invalid_argument("decompose_abcd: the clique edge set is empty") {}
};

class NotBipartite : public std::invalid_argument {
 public:
  NotBipartite() : std::invalid_argument("bipartite_d_bound: graph is not bipartite") {}
};

/// Split of a conflict clique H around a vertex v of maximum H-degree:
///   A  H-edges at v
///   B  H-edges outside A sharing a vertex with an A-edge
///   C  H-edges outside A sharing a vertex with a G-edge at v that is not in H
///   D  H-edges outside C at distance exactly 2 from every A-edge
/// B and C may overlap. S is the subgraph of H formed by D.
struct DecompositionReport {
  Vertex v = 0;
  std::size_t delta_g = 0;
  std::size_t delta_h = 0;
  std::vector<EdgeId> h, a, b, c, d;
  std::vector<Vertex> h_neighbors;  // neighbours of v in H
  std::size_t b_c_overlap = 0;
  bool covered = false;
  Graph s_graph;
  /// |A| + Delta_H(Delta_H-1) + (Delta_G-Delta_H)Delta_H + |D|.
  double total_bound = 0.0;
  bool holds = false;
  CertificateReport report;
};

inline DecompositionReport decompose_abcd(const Graph& g, std::span<const EdgeId> h_edges) {
  using detail::sz;
  if (h_edges.empty()) throw EmptyClique();
  DecompositionReport out;
  out.h.assign(h_edges.begin(), h_edges.end());
  std::sort(out.h.begin(), out.h.end());
  out.h.erase(std::unique(out.h.begin(), out.h.end()), out.h.end());
  for (EdgeId e : out.h)
    if (e >= g.num_edges()) throw std::out_of_range("decompose_abcd: edge id out of range");

  std::vector<bool> in_h(g.num_edges(), false);
  for (EdgeId e : out.h) in_h[e] = true;
  std::vector<std::size_t> h_degree(g.num_vertices(), 0);
  for (EdgeId e : out.h) {
    ++h_degree[g.edge(e).u];
    ++h_degree[g.edge(e).v];
  }
  out.delta_g = max_degree(g);
  out.delta_h = *std::max_element(h_degree.begin(), h_degree.end());
  out.v = static_cast<Vertex>(std::find(h_degree.begin(), h_degree.end(), out.delta_h) - h_degree.begin());
  const Vertex v = out.v;

  for (EdgeId e : out.h)
    if (g.edge(e).touches(v)) {
      out.a.push_back(e);
      out.h_neighbors.push_back(g.edge(e).other(v));
    }
  std::sort(out.h_neighbors.begin(), out.h_neighbors.end());

  std::vector<EdgeId> outside_at_v;  // G-edges at v that are not in H
  for (EdgeId f : g.incident_edges(v))
    if (!in_h[f]) outside_at_v.push_back(f);

  std::vector<bool> in_a(g.num_edges(), false), in_b(g.num_edges(), false), in_c(g.num_edges(), false);
  for (EdgeId e : out.a) in_a[e] = true;
  for (EdgeId e : out.h) {
    if (in_a[e]) continue;
    const Edge& ed = g.edge(e);
    in_b[e] = std::any_of(out.a.begin(), out.a.end(), [&](EdgeId f) { return ed.shares_vertex(g.edge(f)); });
    in_c[e] = std::any_of(outside_at_v.begin(), outside_at_v.end(), [&](EdgeId f) { return ed.shares_vertex(g.edge(f)); });
    if (in_b[e]) out.b.push_back(e);
    if (in_c[e]) out.c.push_back(e);
    if (in_b[e] && in_c[e]) ++out.b_c_overlap;
  }
  for (EdgeId e : out.h) {
    if (in_c[e]) continue;
    bool all_two = std::all_of(out.a.begin(), out.a.end(), [&](EdgeId f) {
      if (f == e) return false;
      auto dist = edge_distance(g, e, f);
      return dist && *dist == 2;
    });
    if (all_two) out.d.push_back(e);
  }

  std::size_t uncovered = 0, d_in_ab = 0;
  std::vector<bool> in_d(g.num_edges(), false);
  for (EdgeId e : out.d) {
    in_d[e] = true;
    d_in_ab += in_a[e] || in_b[e];
  }
  for (EdgeId e : out.h) uncovered += !(in_a[e] || in_b[e] || in_c[e] || in_d[e]);
  out.covered = uncovered == 0;
  out.s_graph = g.edge_subgraph(out.d);

  const std::int64_t dg = sz(out.delta_g), dh = sz(out.delta_h);
  out.total_bound = static_cast<double>(dh + dh * (dh - 1) + (dg - dh) * dh + sz(out.d.size()));

  CertificateReport& r = out.report;
  r.name = "decomposition";
  r.quantity("v", v);
  r.quantity("delta_g", dg);
  r.quantity("delta_h", dh);
  r.quantity("h_edges", sz(out.h.size()));
  r.quantity("a", sz(out.a.size()));
  r.quantity("b", sz(out.b.size()));
  r.quantity("c", sz(out.c.size()));
  r.quantity("d", sz(out.d.size()));
  r.quantity("b_c_overlap", sz(out.b_c_overlap));
  r.sets.emplace_back("A", detail::as_ints(out.a));
  r.sets.emplace_back("B", detail::as_ints(out.b));
  r.sets.emplace_back("C", detail::as_ints(out.c));
  r.sets.emplace_back("D", detail::as_ints(out.d));
  r.sets.emplace_back("h_neighbors_of_v", detail::as_ints(out.h_neighbors));

  r.add(detail::int_check("h_is_conflict_clique", CheckKind::Structure, verify_clique_witness(g, out.h) ? 0 : 1, "==", 0));
  r.add(detail::int_check("a_equals_delta_h", CheckKind::Bound, sz(out.a.size()), "==", dh));
  r.add(detail::int_check("b_le_delta_h_times_delta_h_minus_1", CheckKind::Bound, sz(out.b.size()), "<=", dh * (dh - 1)));
  r.add(detail::int_check("c_le_delta_g_minus_delta_h_times_delta_h", CheckKind::Bound, sz(out.c.size()), "<=", (dg - dh) * dh));
  r.add(detail::int_check("uncovered_h_edges", CheckKind::Structure, sz(uncovered), "==", 0));
  r.add(detail::int_check("d_meets_a_or_b", CheckKind::Structure, sz(d_in_ab), "==", 0));
  r.add(detail::int_check("h_edges_le_total_bound", CheckKind::Bound, sz(out.h.size()), "<=", static_cast<std::int64_t>(out.total_bound)));
  out.holds = r.holds;
  return out;
}

/// Vertices other than v adjacent in G to every H-neighbour of v.
inline std::vector<Vertex> super_vertices(const Graph& g, const DecompositionReport& dec) {
  std::vector<Vertex> out;
  if (dec.h_neighbors.empty()) return out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (x == dec.v) continue;
    if (std::all_of(dec.h_neighbors.begin(), dec.h_neighbors.end(), [&](Vertex u) { return g.adjacent(x, u); }))
      out.push_back(x);
  }
  return out;
}

/// Super-vertex count for the D-set of a bipartite graph and the resulting
/// |E(H)| <= Delta_G^2 - Delta_G + Delta_H <= Delta_G^2 chain.
inline CertificateReport bipartite_d_bound(const Graph& g, const DecompositionReport& dec) {
  using detail::sz;
  if (!bipartition(g)) throw NotBipartite();
  const std::int64_t dg = sz(dec.delta_g), dh = sz(dec.delta_h);
  auto supers = super_vertices(g, dec);
  std::vector<bool> is_super(g.num_vertices(), false);
  for (Vertex x : supers) is_super[x] = true;

  std::int64_t bad_edges = 0;
  for (const Edge& e : dec.s_graph.edges()) bad_edges += (is_super[e.u] + is_super[e.v]) != 1;
  std::int64_t worst_super_degree = 0;
  for (Vertex x : supers) worst_super_degree = std::max(worst_super_degree, sz(dec.s_graph.degree(x)));

  CertificateReport r;
  r.name = "bipartite_d_bound";
  r.quantity("delta_g", dg);
  r.quantity("delta_h", dh);
  r.quantity("d", sz(dec.d.size()));
  r.quantity("h_edges", sz(dec.h.size()));
  r.quantity("super_vertices", sz(supers.size()));
  r.quantity("max_super_vertex_s_degree", worst_super_degree);
  r.sets.emplace_back("super_vertices", detail::as_ints(supers));

  r.add(detail::int_check("s_edges_without_exactly_one_super_vertex", CheckKind::Structure, bad_edges, "==", 0));
  r.add(detail::int_check("super_vertices_le_delta_g_minus_1", CheckKind::Structure, sz(supers.size()), "<=", dg - 1));
  r.add(detail::int_check("super_vertex_s_degree_le_delta_g_minus_delta_h", CheckKind::Structure, worst_super_degree, "<=", dg - dh));
  r.add(detail::int_check("d_le_delta_g_minus_1_times_delta_g_minus_delta_h", CheckKind::Bound, sz(dec.d.size()), "<=", (dg - 1) * (dg - dh)));
  r.add(detail::int_check("h_edges_le_delta_g2_minus_delta_g_plus_delta_h", CheckKind::Bound, sz(dec.h.size()), "<=", dg * dg - dg + dh));
  r.add(detail::int_check("h_edges_le_delta_g2", CheckKind::Theorem, sz(dec.h.size()), "<=", dg * dg));
  return r;
}

/// |E(S)| <= Delta_G^2 - Delta_G Delta_H / 2, with the case split on
/// Delta_S <= Delta_G - Delta_H. In the second case the Delta_H vertex covers
/// N_G(u) ∩ V(S), one per H-neighbour u of v, are fed to lemma1_verify with
/// p = Delta_H and w = Delta_G.
inline CertificateReport general_s_claim(const Graph& g, const DecompositionReport& dec) {
  using detail::sz;
  const Graph& s = dec.s_graph;
  const std::int64_t dg = sz(dec.delta_g), dh = sz(dec.delta_h);
  const std::int64_t ds = sz(max_degree(s));
  const std::int64_t es = sz(s.num_edges());
  const bool case_one = ds <= dg - dh;

  CertificateReport r;
  r.name = "general_s_claim";
  r.quantity("delta_g", dg);
  r.quantity("delta_h", dh);
  r.quantity("delta_s", ds);
  r.quantity("s_edges", es);
  r.quantity("case", case_one ? 1 : 2);
  r.quantity("delta_h_at_least_three_quarters_delta_g", 4 * dh >= 3 * dg ? 1 : 0);

  r.add(detail::halves_check("s_edges_le_delta_g2_minus_delta_g_delta_h_over_2", CheckKind::Bound, es, 2 * dg * dg - dg * dh));
  if (case_one) {
    r.add(detail::int_check("s_edges_le_delta_g_times_delta_s", CheckKind::Structure, es, "<=", dg * ds));
  } else {
    std::vector<bool> in_s(g.num_vertices(), false);
    for (const Edge& e : s.edges()) in_s[e.u] = in_s[e.v] = true;
    Lemma1Instance inst;
    inst.s = s;
    inst.p = dh;
    inst.w = dg;
    for (Vertex u : dec.h_neighbors) {
      std::vector<Vertex> cover;
      for (Vertex x : g.neighbors(u))
        if (in_s[x]) cover.push_back(x);
      inst.covers.push_back(std::move(cover));
    }
    CertificateReport lemma = lemma1_verify(inst);
    r.add(detail::int_check("lemma1_applies", CheckKind::Structure, lemma.holds ? 0 : 1, "==", 0));
    r.children.push_back(std::move(lemma));
  }
  const std::int64_t h_edges = sz(dec.h.size());
  r.add(detail::halves_check("h_edges_le_delta_g2_plus_delta_g_delta_h_over_2", CheckKind::Bound,
                             h_edges, 2 * dg * dg + dg * dh));
  r.add(detail::halves_check("h_edges_le_1.5_delta_g2", CheckKind::Theorem, h_edges, 3 * dg * dg));
  return r;
}

struct BoundOptions {
  /// Seconds for each exact solver call; nullopt means unbounded.
  std::optional<double> budget_seconds;
  FractionalOptions fractional;
};

/// Every computed quantity plus the theorem checks and conjecture monitors.
struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  bool bipartite = false;
  std::size_t delta_left = 0;
  std::size_t delta_right = 0;
  std::size_t conflict_max_degree = 0;

  std::size_t omega = 0;
  bool omega_exact = true;
  CliqueWitness clique;

  std::size_t chi_s_lower = 0;
  std::size_t chi_s_upper = 0;
  bool chi_s_exact = true;
  StrongColoring coloring;

  double chi_fs = 0.0;
  double chi_fs_lower = 0.0;
  bool chi_fs_optimal = true;
  double mr_bound = 0.0;

  std::vector<Check> checks;

  bool theorems_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.kind == CheckKind::Monitor || !c.applicable || c.holds; });
  }
  std::vector<const Check*> monitor_violations() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (c.kind == CheckKind::Monitor && c.applicable && !c.holds) out.push_back(&c);
    return out;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Absolute slack for comparisons that involve an LP value.
inline constexpr double kReportTolerance = 1e-6;

inline BoundReport bound_report(const Graph& g, const BoundOptions& opt = {}) {
  using detail::sz;
  auto deadline = [&] { return opt.budget_seconds ? Deadline::after_seconds(*opt.budget_seconds) : Deadline::none(); };

  BoundReport br;
  br.n = g.num_vertices();
  br.m = g.num_edges();
  br.max_degree = max_degree(g);
  if (auto bp = bipartition(g)) {
    br.bipartite = true;
    br.delta_left = bp->delta_left;
    br.delta_right = bp->delta_right;
  }
  ConflictGraph l(g);
  br.conflict_max_degree = l.max_degree();

  try {
    br.clique = max_clique(l, deadline());
  } catch (const CliqueTimeout& t) {
    br.clique = t.incumbent;
    br.omega_exact = false;
  }
  br.omega = br.clique.size();

  try {
    br.coloring = exact_strong_chromatic_index(l, deadline());
    br.chi_s_lower = br.chi_s_upper = br.coloring.num_colors;
  } catch (const ColoringTimeout& t) {
    br.coloring = t.incumbent;
    br.chi_s_exact = false;
    br.chi_s_lower = std::max(t.lower, br.omega);
    br.chi_s_upper = t.upper;
  }

  FractionalSolution frac = fractional_strong_chromatic_index(g, opt.fractional);
  br.chi_fs = frac.objective;
  br.chi_fs_lower = frac.lower_bound;
  br.chi_fs_optimal = frac.status == FractionalStatus::Optimal;
  br.mr_bound = mr_fractional_bound(l, br.omega);

  const std::int64_t d = sz(br.max_degree);
  const std::int64_t d2 = d * d;
  const std::int64_t omega = sz(br.omega);
  // A monitor violation is only certain if the lower bound already exceeds it.
  const std::int64_t chi_certain = sz(br.chi_s_lower);
  const std::int64_t chi_upper = sz(br.chi_s_upper);
  const double tol = kReportTolerance;

  auto real_check = [&](std::string name, CheckKind kind, double observed, double bound, bool exact) {
    Check c;
    c.name = std::move(name);
    c.kind = kind;
    c.observed = observed;
    c.bound = bound;
    c.holds = observed <= bound + tol;
    c.exact = exact;
    return c;
  };
  auto with = [](Check c, bool applicable, bool exact) {
    c.applicable = applicable;
    if (!applicable) c.holds = true;
    c.exact = exact;
    return c;
  };

  // theorems
  br.checks.push_back(with(detail::halves_check("clique_le_1.5_delta2", CheckKind::Theorem, omega, 3 * d2), true, br.omega_exact));
  br.checks.push_back(with(detail::int_check("bipartite_clique_le_delta2", CheckKind::Theorem, omega, "<=", d2), br.bipartite, br.omega_exact));
  br.checks.push_back(real_check("fractional_le_1.75_delta2", CheckKind::Theorem, br.chi_fs_lower, 1.75 * static_cast<double>(d2), br.chi_fs_optimal));
  br.checks.push_back(with(detail::int_check("strong_index_le_2delta2_minus_2delta_plus_1", CheckKind::Theorem, chi_upper, "<=", 2 * d2 - 2 * d + 1), true, br.chi_s_exact));
  br.checks.push_back(real_check("fractional_le_molloy_reed", CheckKind::Theorem, br.chi_fs_lower, br.mr_bound, br.chi_fs_optimal && br.omega_exact));
  br.checks.push_back(real_check("clique_le_fractional", CheckKind::Theorem, static_cast<double>(omega), br.chi_fs, br.omega_exact && br.chi_fs_optimal));
  br.checks.push_back(real_check("fractional_le_strong_index", CheckKind::Theorem, br.chi_fs_lower, static_cast<double>(chi_upper), br.chi_s_exact && br.chi_fs_optimal));

  // conjectures
  br.checks.push_back(with(detail::scaled_check("en_strong_index_le_1.25_delta2", CheckKind::Monitor, chi_certain, 5, 4, d2), true, br.chi_s_exact));
  br.checks.push_back(with(detail::scaled_check("en_clique_le_1.25_delta2", CheckKind::Monitor, omega, 5, 4, d2), true, br.omega_exact));
  br.checks.push_back(with(detail::int_check("faudree_bipartite_strong_index_le_delta2", CheckKind::Monitor, chi_certain, "<=", d2), br.bipartite, br.chi_s_exact));
  br.checks.push_back(with(detail::int_check("brualdi_quinn_strong_index_le_delta1_delta2", CheckKind::Monitor, chi_certain, "<=",
                                             sz(br.delta_left) * sz(br.delta_right)),
                           br.bipartite, br.chi_s_exact));
  br.checks.push_back(with(detail::int_check("strong_index_le_ceil_1.75_delta2", CheckKind::Monitor, chi_certain, "<=", (7 * d2 + 3) / 4), true, br.chi_s_exact));
  return br;
}

}  // namespace strongcolor
