#pragma once

#include <string>
#include <string_view>

#include "satlab/graph.hpp"

namespace satlab {

// graph6 short form (order <= 62): header byte order+63, then the upper
// triangle in column order, six bits per byte, each offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// plain text: "n m" header line, then one "i j" line per edge
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace satlab
