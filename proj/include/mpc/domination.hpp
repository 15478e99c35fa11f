#pragma once

#include <span>
#include <vector>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"

namespace mpc {

bool is_dominating(const Graph& g, std::span<const int> s);
// every vertex needs a neighbor in s
bool is_total_dominating(const Graph& g, std::span<const int> s);
// s dominates and the subgraph induced by N(s) has no isolated vertex
bool is_ntd(const Graph& g, std::span<const int> s);

// The gamma_t / gamma_nt solvers reject graphs with isolated vertices;
// witnesses are the lexicographically first optimal sets.

struct DominationResult {
  int number = 0;
  std::vector<int> witness;  // lexicographically first optimal set
};

DominationResult gamma(const Graph& g, int cap = kDefaultDominationCap);
DominationResult gamma_t(const Graph& g, int cap = kDefaultDominationCap);
DominationResult gamma_nt(const Graph& g, int cap = kDefaultDominationCap);

}  // namespace mpc
