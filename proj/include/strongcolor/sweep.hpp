#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "strongcolor/certificates.hpp"
#include "strongcolor/generators.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/io/graph6.hpp"

namespace strongcolor {

/// Aggregate over many bound reports. merge() is commutative and
/// associative and the finding lists are kept sorted, so the summary does not
/// depend on how graphs were split across workers.
struct SweepSummary {
  std::uint64_t graphs = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t theorem_failures = 0;
  std::uint64_t monitor_violations = 0;
  std::uint64_t inexact = 0;
  double max_omega_ratio = 0.0;   // omega / Delta^2
  double max_chi_s_ratio = 0.0;   // chi'_s / Delta^2
  double max_chi_fs_ratio = 0.0;  // chi'_fs / Delta^2
  /// "graph6 check-name" for every failed theorem check.
  std::vector<std::string> failures;
  /// "graph6 check-name" for every violated conjecture monitor.
  std::vector<std::string> counterexamples;

  void add(const Graph& g, const BoundReport& r) {
    ++graphs;
    bipartite += r.bipartite;
    inexact += !(r.omega_exact && r.chi_s_exact && r.chi_fs_optimal);
    if (r.max_degree > 0) {
      const double d2 = static_cast<double>(r.max_degree * r.max_degree);
      max_omega_ratio = std::max(max_omega_ratio, static_cast<double>(r.omega) / d2);
      max_chi_s_ratio = std::max(max_chi_s_ratio, static_cast<double>(r.chi_s_upper) / d2);
      max_chi_fs_ratio = std::max(max_chi_fs_ratio, r.chi_fs / d2);
    }
    bool failed = false, violated = false;
    for (const auto& c : r.checks) {
      if (!c.applicable || c.holds) continue;
      if (c.kind == CheckKind::Monitor) {
        counterexamples.push_back(io::write_graph6(g) + " " + c.name);
        violated = true;
      } else {
        failures.push_back(io::write_graph6(g) + " " + c.name);
        failed = true;
      }
    }
    theorem_failures += failed;
    monitor_violations += violated;
    if (failed) std::sort(failures.begin(), failures.end());
    if (violated) std::sort(counterexamples.begin(), counterexamples.end());
  }

  void merge(const SweepSummary& o) {
    graphs += o.graphs;
    bipartite += o.bipartite;
    theorem_failures += o.theorem_failures;
    monitor_violations += o.monitor_violations;
    inexact += o.inexact;
    max_omega_ratio = std::max(max_omega_ratio, o.max_omega_ratio);
    max_chi_s_ratio = std::max(max_chi_s_ratio, o.max_chi_s_ratio);
    max_chi_fs_ratio = std::max(max_chi_fs_ratio, o.max_chi_fs_ratio);
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    std::sort(failures.begin(), failures.end());
    std::sort(counterexamples.begin(), counterexamples.end());
  }
};

/// bound_report over every labelled graph on n vertices, split across
/// `jobs` worker threads by mask residue.
inline SweepSummary sweep_all_graphs(std::size_t n, const BoundOptions& opt = {}, std::size_t jobs = 1) {
  const std::uint64_t total = all_graphs_count(n);
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<SweepSummary> partial(jobs);
  auto work = [&](std::size_t worker) {
    for (std::uint64_t mask = worker; mask < total; mask += jobs) {
      Graph g = labeled_graph(n, mask);
      partial[worker].add(g, bound_report(g, opt));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  SweepSummary out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace strongcolor
