// strongcolor: command-line front end for the strong edge colouring library.
//
// Exit codes: 0 success, 1 a proven bound failed to hold (never expected),
// 2 bad input or usage.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strongcolor/strongcolor.hpp"
#include "strongcolor/io/edge_list.hpp"
#include "strongcolor/io/graph6.hpp"
#include "strongcolor/io/json_report.hpp"
#include "strongcolor/io/lemma1_file.hpp"

namespace {

using namespace strongcolor;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitTheoremFailure = 1;
constexpr int kExitInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Human };

struct RunConfig {
  std::string input = "-";
  std::string input_format = "auto";
  double budget_seconds = 60.0;
  double tolerance = kFractionalEpsilon;
  Format format = Format::Json;
  std::uint64_t seed = 1;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  return lines;
}

bool looks_like_graph6(const std::vector<std::string>& lines) {
  if (lines.empty()) return false;
  const auto& l = lines.front();
  auto end = l.find_last_not_of(" \t\r");
  return l.substr(0, end + 1).find_first_of(" \t") == std::string::npos;
}

std::vector<Graph> read_graphs(const RunConfig& cfg) {
  const std::string text = read_source(cfg.input);
  const auto lines = content_lines(text);
  bool graph6 = cfg.input_format == "graph6" || (cfg.input_format == "auto" && looks_like_graph6(lines));
  if (!graph6) return {io::parse_edge_list(text)};
  std::vector<Graph> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(io::parse_graph6(lines[i], i + 1));
  return out;
}

Graph read_graph(const RunConfig& cfg) {
  auto graphs = read_graphs(cfg);
  if (graphs.size() != 1) throw InputError("expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

Deadline deadline(const RunConfig& cfg) { return Deadline::after_seconds(cfg.budget_seconds); }

template <class Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

void print_checks_human(const std::vector<Check>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    out << "  " << (c.applicable ? (c.holds ? "ok  " : (c.kind == CheckKind::Monitor ? "FLAG" : "FAIL")) : "n/a ") << ' '
        << c.name << ": " << io::fixed9(c.observed) << ' ' << c.relation << ' ' << io::fixed9(c.bound) << " ["
        << to_string(c.kind) << (c.exact ? "" : ", inexact") << "]\n";
  }
}

void print_report_human(const CertificateReport& r, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad << r.name << ": " << (r.holds ? "holds" : "FAILS") << '\n';
  for (const auto& [k, v] : r.quantities) out << pad << "  " << k << " = " << v << '\n';
  for (const auto& [k, v] : r.sets) out << pad << "  " << k << " = {" << join(v, ", ") << "}\n";
  std::ostringstream checks;
  print_checks_human(r.checks, checks);
  std::istringstream lines(checks.str());
  for (std::string line; std::getline(lines, line);) out << pad << line << '\n';
  for (const auto& child : r.children) print_report_human(child, out, indent + 2);
}

void emit_key_values(const Json& j, Format format) {
  if (format == Format::Json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) std::cout << "key,value\n";
  for (const auto& [k, v] : j.items()) {
    if (format == Format::Csv) std::cout << k << ',' << (v.is_array() ? '"' + v.dump() + '"' : v.dump()) << '\n';
    else std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

// --- subcommands -----------------------------------------------------------

int cmd_omega(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  ConflictGraph l(g);
  CliqueWitness w;
  bool exact = true;
  try {
    w = max_clique(l, deadline(cfg));
  } catch (const CliqueTimeout& t) {
    w = t.incumbent;
    exact = false;
  }
  const auto d = static_cast<std::int64_t>(max_degree(g));
  const auto omega = static_cast<std::int64_t>(w.size());
  const bool bip = bipartition(g).has_value();
  const bool general_ok = 2 * omega <= 3 * d * d;
  const bool bip_ok = !bip || omega <= d * d;

  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["max_degree"] = d;
  j["omega"] = omega;
  j["exact"] = exact;
  j["witness"] = w.members;
  j["witness_verified"] = verify_clique_witness(g, w.members);
  j["bound_1.5_delta2"] = 1.5 * static_cast<double>(d * d);
  j["bound_1.5_delta2_holds"] = general_ok;
  j["bipartite"] = bip;
  if (bip) j["bound_delta2_holds"] = bip_ok;
  emit_key_values(j, cfg.format);
  return general_ok && bip_ok ? kExitOk : kExitTheoremFailure;
}

int cmd_chi_s(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  ConflictGraph l(g);
  StrongColoring c;
  std::size_t lower = 0, upper = 0;
  bool exact = true;
  try {
    c = exact_strong_chromatic_index(l, deadline(cfg));
    lower = upper = c.num_colors;
  } catch (const ColoringTimeout& t) {
    c = t.incumbent;
    lower = t.lower;
    upper = t.upper;
    exact = false;
  }
  const auto d = static_cast<std::int64_t>(max_degree(g));
  const bool trivial_ok = static_cast<std::int64_t>(upper) <= 2 * d * d - 2 * d + 1;
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["max_degree"] = d;
  j["chi_s"] = exact ? Json(upper) : Json(nullptr);
  j["lower"] = lower;
  j["upper"] = upper;
  j["exact"] = exact;
  j["coloring_verified"] = verify_strong_coloring(g, c);
  j["color_of"] = c.color_of;
  j["bound_2delta2_minus_2delta_plus_1"] = 2 * d * d - 2 * d + 1;
  j["bound_holds"] = trivial_ok;
  emit_key_values(j, cfg.format);
  return trivial_ok ? kExitOk : kExitTheoremFailure;
}

int cmd_chi_fs(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  FractionalOptions opt;
  opt.epsilon = cfg.tolerance;
  FractionalSolution sol = fractional_strong_chromatic_index(g, opt);
  const double d2 = static_cast<double>(max_degree(g) * max_degree(g));
  const bool ok = sol.lower_bound <= 1.75 * d2 + kReportTolerance;
  if (cfg.format == Format::Json) {
    Json j = io::to_json(sol);
    j["bound_1.75_delta2"] = 1.75 * d2;
    j["bound_holds"] = ok;
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == Format::Csv) {
    std::cout << "edges,weight\n";
    for (const auto& col : sol.columns) std::cout << '"' << join(col.matching.members) << "\"," << io::fixed9(col.weight) << '\n';
    std::cout << "chi_fs," << io::fixed9(sol.objective) << '\n';
  } else {
    std::cout << "chi'_fs = " << io::fixed9(sol.objective) << " (" << io::to_string(sol.status) << ", "
              << sol.columns_generated << " columns)\n";
    for (const auto& col : sol.columns)
      std::cout << "  " << io::fixed9(col.weight) << "  {" << join(col.matching.members, ", ") << "}\n";
    std::cout << "1.75*Delta^2 = " << 1.75 * d2 << (ok ? " holds" : " FAILS") << '\n';
  }
  return ok ? kExitOk : kExitTheoremFailure;
}

int cmd_certify(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  BoundOptions bopt;
  bopt.budget_seconds = cfg.budget_seconds;
  bopt.fractional.epsilon = cfg.tolerance;
  BoundReport br = bound_report(g, bopt);

  std::vector<CertificateReport> reports;
  if (!br.clique.members.empty()) {
    DecompositionReport dec = decompose_abcd(g, br.clique.members);
    reports.push_back(dec.report);
    if (br.bipartite) reports.push_back(bipartite_d_bound(g, dec));
    reports.push_back(general_s_claim(g, dec));
  }
  bool ok = br.theorems_hold();
  for (const auto& r : reports) ok = ok && r.holds;

  if (cfg.format == Format::Json) {
    Json j;
    j["holds"] = ok;
    j["bounds"] = io::to_json(br);
    j["certificates"] = Json::array();
    for (const auto& r : reports) j["certificates"].push_back(io::to_json(r));
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == Format::Csv) {
    std::vector<Check> all = br.checks;
    for (const auto& r : reports) {
      for (auto c : r.checks) {
        c.name = r.name + "." + c.name;
        all.push_back(c);
      }
    }
    std::cout << io::checks_csv(all);
  } else {
    std::cout << "n=" << br.n << " m=" << br.m << " Delta=" << br.max_degree << (br.bipartite ? " bipartite" : "") << '\n'
              << "omega(L) = " << br.omega << (br.omega_exact ? "" : " (incumbent)") << '\n'
              << "chi'_s   = " << (br.chi_s_exact ? std::to_string(br.chi_s_upper)
                                                   : "[" + std::to_string(br.chi_s_lower) + ", " + std::to_string(br.chi_s_upper) + "]")
              << '\n'
              << "chi'_fs  = " << io::fixed9(br.chi_fs) << '\n'
              << "bounds:\n";
    print_checks_human(br.checks, std::cout);
    for (const auto& r : reports) print_report_human(r, std::cout);
  }
  return ok ? kExitOk : kExitTheoremFailure;
}

int cmd_verify_lemma1(const RunConfig& cfg) {
  Lemma1Instance inst = io::parse_lemma1_instance(read_source(cfg.input));
  CertificateReport r = lemma1_verify(inst);
  if (cfg.format == Format::Json) std::cout << io::to_json(r).dump(2) << '\n';
  else if (cfg.format == Format::Csv) std::cout << io::checks_csv(r.checks);
  else print_report_human(r, std::cout);
  if (!lemma1_hypotheses_hold(r)) return kExitInputError;
  return r.holds ? kExitOk : kExitTheoremFailure;
}

std::size_t param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  if (i >= params.size()) throw InputError("gen " + family + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    long long v = std::stoll(params[i], &used);
    if (used != params[i].size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("gen " + family + ": '" + params[i] + "' is not a non-negative integer");
  }
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& out_format,
            std::uint64_t seed) {
  Graph g;
  if (family == "c5-blowup") g = blowup_c5(param(params, 0, family));
  else if (family == "kab") g = complete_bipartite(param(params, 0, family), param(params, 1, family));
  else if (family == "path") g = path(param(params, 0, family));
  else if (family == "cycle") g = cycle(param(params, 0, family));
  else if (family == "star") g = star(param(params, 0, family));
  else if (family == "gnp") {
    if (params.size() < 2) throw InputError("gen gnp: usage gen gnp <n> <prob> [--seed S]");
    double prob = 0.0;
    try {
      prob = std::stod(params[1]);
    } catch (const std::exception&) {
      throw InputError("gen gnp: bad probability '" + params[1] + "'");
    }
    g = random_gnp(param(params, 0, family), prob, seed);
  } else if (family == "double-kdd") {
    Lemma1Instance inst = double_kdd_with_covers(param(params, 0, family));
    if (out_format == "lemma1") {
      std::cout << io::write_lemma1_instance(inst);
      return kExitOk;
    }
    g = inst.s;
  } else {
    throw InputError("gen: unknown family '" + family + "' (c5-blowup, kab, double-kdd, path, cycle, star, gnp)");
  }
  if (out_format == "graph6") std::cout << io::write_graph6(g) << '\n';
  else if (out_format == "lemma1") throw InputError("gen: --format lemma1 is only available for double-kdd");
  else std::cout << io::write_edge_list(g);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::size_t n, std::size_t from, const std::string& graph6_file, std::size_t jobs) {
  BoundOptions bopt;
  bopt.budget_seconds = cfg.budget_seconds;
  bopt.fractional.epsilon = cfg.tolerance;
  const auto start = std::chrono::steady_clock::now();
  SweepSummary total;
  if (!graph6_file.empty()) {
    RunConfig in = cfg;
    in.input = graph6_file;
    in.input_format = "graph6";
    for (const Graph& g : read_graphs(in)) total.add(g, bound_report(g, bopt));
  } else {
    if (n > 6) throw InputError("sweep: --n must be at most 6; pipe larger catalogs with --graph6");
    for (std::size_t k = std::min(from, n); k <= n; ++k) total.merge(sweep_all_graphs(k, bopt, jobs));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json j;
  j["graphs"] = total.graphs;
  j["bipartite"] = total.bipartite;
  j["theorem_failures"] = total.theorem_failures;
  j["monitor_violations"] = total.monitor_violations;
  j["inexact"] = total.inexact;
  j["max_omega_over_delta2"] = io::round9(total.max_omega_ratio);
  j["max_chi_s_over_delta2"] = io::round9(total.max_chi_s_ratio);
  j["max_chi_fs_over_delta2"] = io::round9(total.max_chi_fs_ratio);
  j["failures"] = total.failures;
  j["counterexamples"] = total.counterexamples;
  j["seconds"] = io::round9(seconds);
  emit_key_values(j, cfg.format);
  return total.theorem_failures == 0 ? kExitOk : kExitTheoremFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong edge colouring: clique number of the squared line graph, strong chromatic index, "
               "fractional strong chromatic index and bound certificates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub, bool graph_input) {
    if (graph_input) {
      sub->add_option("input", cfg.input, "Graph file (edge list or graph6); '-' or omitted reads stdin");
      sub->add_option("--input-format", cfg.input_format, "auto | edges | graph6")
          ->check(CLI::IsMember({"auto", "edges", "graph6"}));
    }
    sub->add_option("--format", format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--budget", cfg.budget_seconds, "Seconds allowed per exact solve")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance, "Column-generation tolerance")->check(CLI::PositiveNumber);
  };

  auto* omega = app.add_subcommand("omega", "Clique number of the conflict graph with a witness edge set");
  add_common(omega, true);
  auto* chi_s = app.add_subcommand("chi-s", "Exact strong chromatic index (bracket on timeout) and a colouring");
  add_common(chi_s, true);
  auto* chi_fs = app.add_subcommand("chi-fs", "Fractional strong chromatic index by column generation");
  add_common(chi_fs, true);
  auto* certify = app.add_subcommand("certify", "A/B/C/D decomposition certificates and the full bound report");
  add_common(certify, true);

  auto* lemma1 = app.add_subcommand("verify-lemma1", "Check a vertex-cover edge bound instance (JSON)");
  lemma1->add_option("instance", cfg.input, "Instance file; '-' reads stdin")->required();
  add_common(lemma1, false);

  std::string family;
  std::vector<std::string> params;
  std::string gen_format = "edges";
  auto* gen = app.add_subcommand("gen", "Emit a generated graph");
  gen->add_option("family", family, "c5-blowup <t> | kab <a> <b> | double-kdd <d> | path <n> | cycle <n> | star <k> | gnp <n> <p>")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--format", gen_format, "edges | graph6 | lemma1 (double-kdd only)")
      ->check(CLI::IsMember({"edges", "graph6", "lemma1"}));
  gen->add_option("--seed", cfg.seed, "Seed for gnp");

  std::size_t sweep_n = 0, sweep_from = 0, jobs = 1;
  bool from_given = false;
  std::string graph6_file;
  auto* sweep = app.add_subcommand("sweep", "Bound report over every labelled graph on n vertices");
  sweep->add_option("--n", sweep_n, "Number of vertices (at most 6)");
  auto* from_opt = sweep->add_option("--from", sweep_from, "Also sweep every vertex count from this value up to --n");
  sweep->add_option("--graph6", graph6_file, "Sweep graphs read from a graph6 file instead");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  cfg.format = format == "csv" ? Format::Csv : format == "human" ? Format::Human : Format::Json;
  from_given = from_opt->count() > 0;

  try {
    if (*omega) return cmd_omega(cfg);
    if (*chi_s) return cmd_chi_s(cfg);
    if (*chi_fs) return cmd_chi_fs(cfg);
    if (*certify) return cmd_certify(cfg);
    if (*lemma1) return cmd_verify_lemma1(cfg);
    if (*gen) return cmd_gen(family, params, gen_format, cfg.seed);
    if (*sweep) {
      if (graph6_file.empty() && sweep->count("--n") == 0) throw InputError("sweep: give --n or --graph6");
      return cmd_sweep(cfg, sweep_n, from_given ? sweep_from : sweep_n, graph6_file, jobs);
    }
  } catch (const io::ParseError& e) {
    std::cerr << "strongcolor: parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "strongcolor: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "strongcolor: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
