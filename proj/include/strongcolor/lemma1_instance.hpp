#pragma once

#include <cstdint>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

/// A graph together with p vertex covers (repeats allowed) of at most w
/// vertices each: the input to the vertex-cover edge bound w^2 - pw/2.
struct Lemma1Instance {
  Graph s;
  std::vector<std::vector<Vertex>> covers;
  std::int64_t p = 0;
  std::int64_t w = 0;
};

}  // namespace strongcolor
