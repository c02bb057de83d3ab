#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/io/parse_error.hpp"
#include "strongcolor/lemma1_instance.hpp"

namespace strongcolor::io {

// Vertex-cover instance file:
//   {
//     "n": 8,                       optional, default 1 + largest vertex id
//     "edges": [[0, 2], [0, 3]],
//     "covers": [[0, 1], [2, 3]],
//     "p": 2,
//     "w": 2
//   }
// Errors are reported as ParseError with line 1 (the document is one unit).

inline Lemma1Instance parse_lemma1_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("lemma1 instance: ") + e.what());
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(1, std::string("lemma1 instance: missing field '") + key + "'");
    return doc.at(key);
  };
  try {
    Lemma1Instance inst;
    std::uint64_t n = 0;
    std::vector<Edge> edges;
    for (const auto& e : require("edges")) {
      auto pair = e.get<std::vector<std::uint32_t>>();
      if (pair.size() != 2) throw ParseError(1, "lemma1 instance: each edge needs exactly two endpoints");
      edges.push_back({pair[0], pair[1]});
      n = std::max<std::uint64_t>(n, std::max(pair[0], pair[1]) + std::uint64_t{1});
    }
    for (const auto& c : require("covers")) inst.covers.push_back(c.get<std::vector<Vertex>>());
    inst.p = require("p").get<std::int64_t>();
    inst.w = require("w").get<std::int64_t>();
    if (doc.contains("n")) {
      auto declared = doc.at("n").get<std::uint64_t>();
      if (declared < n) throw ParseError(1, "lemma1 instance: declared n is smaller than an edge endpoint");
      n = declared;
    }
    try {
      inst.s = Graph(static_cast<std::size_t>(n), std::move(edges));
    } catch (const InvalidGraph& e) {
      throw ParseError(1, std::string("lemma1 instance: ") + e.what());
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("lemma1 instance: ") + e.what());
  }
}

inline std::string write_lemma1_instance(const Lemma1Instance& inst) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : inst.s.edges()) edges.push_back({e.u, e.v});
  std::string out = "{\n  \"n\": " + std::to_string(inst.s.num_vertices()) + ",\n  \"edges\": " + edges.dump() +
                    ",\n  \"covers\": [";
  for (std::size_t i = 0; i < inst.covers.size(); ++i)
    out += (i ? ",\n    " : "\n    ") + nlohmann::json(inst.covers[i]).dump();
  out += inst.covers.empty() ? "]" : "\n  ]";
  out += ",\n  \"p\": " + std::to_string(inst.p) + ",\n  \"w\": " + std::to_string(inst.w) + "\n}\n";
  return out;
}

}  // namespace strongcolor::io
