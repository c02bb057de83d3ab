#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "strongcolor/certificates.hpp"
#include "strongcolor/clique.hpp"
#include "strongcolor/coloring.hpp"
#include "strongcolor/fractional.hpp"

namespace strongcolor::io {

// Field names and key order here are the stable report format; CI diffs
// depend on them.

using Json = nlohmann::ordered_json;

/// LP values are reported to nine decimal places.
inline double round9(double x) {
  double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

inline std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", round9(x));
  return buf;
}

inline Json to_json(const Check& c) {
  return Json{{"name", c.name},       {"kind", to_string(c.kind)}, {"relation", c.relation},
              {"observed", round9(c.observed)}, {"bound", round9(c.bound)}, {"holds", c.holds},
              {"applicable", c.applicable}, {"exact", c.exact}};
}

inline Json to_json(const CertificateReport& r) {
  Json j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  Json q = Json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = q;
  Json s = Json::object();
  for (const auto& [k, v] : r.sets) s[k] = v;
  j["sets"] = s;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["children"] = Json::array();
  for (const auto& child : r.children) j["children"].push_back(to_json(child));
  return j;
}

inline Json to_json(const CliqueWitness& w, bool exact = true) {
  return Json{{"omega", w.size()}, {"exact", exact}, {"witness", w.members}};
}

inline Json to_json(const StrongColoring& c) {
  return Json{{"num_colors", c.num_colors}, {"color_of", c.color_of}};
}

inline const char* to_string(FractionalStatus s) { return s == FractionalStatus::Optimal ? "optimal" : "iteration_limit"; }

inline Json to_json(const FractionalSolution& f) {
  Json j;
  j["chi_fs"] = round9(f.objective);
  j["status"] = to_string(f.status);
  j["lower_bound"] = round9(f.lower_bound);
  j["iterations"] = f.iterations;
  j["columns_generated"] = f.columns_generated;
  j["columns"] = Json::array();
  for (const auto& col : f.columns) j["columns"].push_back(Json{{"edges", col.matching.members}, {"weight", round9(col.weight)}});
  Json duals = Json::array();
  for (double y : f.duals) duals.push_back(round9(y));
  j["duals"] = duals;
  return j;
}

inline Json to_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n;
  j["m"] = b.m;
  j["max_degree"] = b.max_degree;
  j["bipartite"] = b.bipartite;
  j["delta_left"] = b.delta_left;
  j["delta_right"] = b.delta_right;
  j["conflict_max_degree"] = b.conflict_max_degree;
  j["omega"] = Json{{"value", b.omega}, {"exact", b.omega_exact}, {"witness", b.clique.members}};
  j["chi_s"] = Json{{"lower", b.chi_s_lower}, {"upper", b.chi_s_upper}, {"exact", b.chi_s_exact}, {"color_of", b.coloring.color_of}};
  j["chi_fs"] = Json{{"value", round9(b.chi_fs)}, {"lower", round9(b.chi_fs_lower)}, {"optimal", b.chi_fs_optimal}};
  j["molloy_reed_bound"] = round9(b.mr_bound);
  j["theorems_hold"] = b.theorems_hold();
  j["monitor_violations"] = b.monitor_violations().size();
  j["checks"] = Json::array();
  for (const auto& c : b.checks) j["checks"].push_back(to_json(c));
  return j;
}

/// One row per check: check,kind,applicable,exact,observed,bound,holds
inline std::string checks_csv(const std::vector<Check>& checks, bool with_header = true) {
  std::ostringstream out;
  if (with_header) out << "check,kind,applicable,exact,observed,bound,holds\n";
  for (const auto& c : checks)
    out << c.name << ',' << to_string(c.kind) << ',' << c.applicable << ',' << c.exact << ',' << fixed9(c.observed) << ','
        << fixed9(c.bound) << ',' << c.holds << '\n';
  return out.str();
}

}  // namespace strongcolor::io
