#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strongcolor/graph.hpp"
#include "strongcolor/io/parse_error.hpp"

namespace strongcolor::io {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1) (0,2) (1,2) (0,3) ... packed six bits per byte, most
// significant bit first, each byte offset by 63, zero-padded to a multiple
// of six bits.

namespace detail {

inline void encode_size(std::size_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: too many vertices");
  }
}

inline unsigned sextet(char c, std::size_t line) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw ParseError(line, std::string("graph6: byte '") + c + "' outside 63..126");
  return static_cast<unsigned>(v);
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::string out;
  detail::encode_size(n, out);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> bitvec(bits, 0);
  // pair (i, j), i < j, sits at j(j-1)/2 + i
  for (const Edge& e : g.edges()) {
    const std::size_t i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    bitvec[j * (j - 1) / 2 + i] = 1;
  }
  for (std::size_t k = 0; k < bits; k += 6) {
    unsigned byte = 0;
    for (std::size_t b = 0; b < 6; ++b) byte = (byte << 1) | (k + b < bits ? bitvec[k + b] : 0u);
    out.push_back(static_cast<char>(byte + 63));
  }
  return out;
}

/// Decodes one graph6 word. An optional ">>graph6<<" header is accepted.
/// Edges come out in lexicographic (min, max) order. `line` only labels errors.
inline Graph parse_graph6(std::string_view word, std::size_t line = 1) {
  while (!word.empty() && (word.back() == '\n' || word.back() == '\r' || word.back() == ' ')) word.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (word.substr(0, header.size()) == header) word.remove_prefix(header.size());
  if (word.empty()) throw ParseError(line, "graph6: empty word");
  if (word.front() == ':' || word.front() == '&') throw ParseError(line, "graph6: sparse6/digraph6 words are not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (word[0] != 126) {
    n = detail::sextet(word[0], line);
    pos = 1;
  } else if (word.size() >= 2 && word[1] != 126) {
    if (word.size() < 4) throw ParseError(line, "graph6: truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::sextet(word[i], line);
    pos = 4;
  } else {
    if (word.size() < 8) throw ParseError(line, "graph6: truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | detail::sextet(word[i], line);
    pos = 8;
  }

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (word.size() - pos != bytes)
    throw ParseError(line, "graph6: expected " + std::to_string(bytes) + " adjacency bytes for n=" + std::to_string(n) +
                               ", found " + std::to_string(word.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const unsigned byte = detail::sextet(word[pos + k / 6], line);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = detail::sextet(word.back(), line);
    const unsigned pad = static_cast<unsigned>(6 - bits % 6);
    if (last & ((1u << pad) - 1)) throw ParseError(line, "graph6: non-zero padding bits");
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges)).normalized();
}

}  // namespace strongcolor::io
