#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongcolor/graph.hpp"
#include "strongcolor/io/parse_error.hpp"

namespace strongcolor::io {

namespace detail {

struct NumberedPair {
  std::size_t line;
  std::uint64_t a;
  std::uint64_t b;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "u v" lines. Blank lines and lines starting with '#' are skipped.
///
/// The first line is a "n m" header when n > 0, exactly m edge lines
/// follow and every endpoint is below n; otherwise it is an ordinary edge. Without a
/// header n is one more than the largest vertex id. Edge ids come out in
/// lexicographic (min, max) order.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<detail::NumberedPair> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::istringstream in{std::string(line)};
    long long a = 0, b = 0;
    std::string extra;
    if (!(in >> a >> b)) throw ParseError(line_no, "expected two non-negative integers");
    if (in >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
    if (a < 0 || b < 0) throw ParseError(line_no, "vertex ids must be non-negative");
    rows.push_back({line_no, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)});
  }

  std::size_t first_edge = 0;
  std::uint64_t declared_n = 0;
  bool has_header = false;
  if (!rows.empty()) {
    const auto& h = rows.front();
    if (h.a > 0 && h.b == rows.size() - 1) {
      has_header = std::all_of(rows.begin() + 1, rows.end(), [&](const auto& r) { return r.a < h.a && r.b < h.a; });
    }
    if (has_header) {
      declared_n = h.a;
      first_edge = 1;
    }
  }

  std::uint64_t n = declared_n;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = first_edge; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.a == r.b) throw ParseError(r.line, "loop at vertex " + std::to_string(r.a));
    auto key = std::minmax(r.a, r.b);
    if (!seen.emplace(key.first, key.second).second)
      throw ParseError(r.line, "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
    if (key.second > 0xFFFFFFFEu) throw ParseError(r.line, "vertex id too large");
    if (!has_header) n = std::max(n, key.second + 1);
    edges.push_back({static_cast<Vertex>(key.first), static_cast<Vertex>(key.second)});
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges)).normalized();
}

/// "n m" header followed by one "u v" line per edge, in edge-id order. The
/// vertexless graph is written as a comment line, which parses back to it.
inline std::string write_edge_list(const Graph& g) {
  if (g.num_vertices() == 0) return "# empty graph\n";
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace strongcolor::io
