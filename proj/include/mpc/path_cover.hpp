#pragma once

#include <vector>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"

namespace mpc {

// Partition of the vertex set into vertex-disjoint paths (singletons allowed).
struct PathCover {
  std::vector<std::vector<int>> paths;
  int size() const { return static_cast<int>(paths.size()); }
};

bool is_path_cover(const Graph& g, const PathCover& c);

// Minimum cover of a tree: leaf-upward DP, each vertex keeps at most two
// incident cover edges (at most one towards its children when the parent edge is kept).
PathCover min_path_cover_tree(const Graph& g);

// Exact minimum for any graph via DP over (covered set, open path end),
// bounded above by a greedy cover.
PathCover min_path_cover_exact(const Graph& g, int cap = kDefaultPathCoverCap);

// Dispatches to the tree DP when the input is a tree.
int path_cover_number(const Graph& g, int cap = kDefaultPathCoverCap);

}  // namespace mpc
