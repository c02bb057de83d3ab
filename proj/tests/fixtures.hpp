#pragma once

#include "strongcolor/graph.hpp"

namespace fixtures {

// 2K_{1,1}: two disjoint edges.
inline strongcolor::Graph two_k11() { return strongcolor::Graph(4, {{0, 1}, {2, 3}}); }

inline strongcolor::Graph single_edge() { return strongcolor::Graph(2, {{0, 1}}); }

}  // namespace fixtures
