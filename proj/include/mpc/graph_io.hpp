#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mpc/graph.hpp"

namespace mpc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6: header 63+n (or '~'-prefixed extended forms), then the upper-triangle
// bits x(0,1),x(0,2),x(1,2),x(0,3),... packed big-endian into 6-bit words, each +63.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// First line "n <count>", then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

}  // namespace mpc
