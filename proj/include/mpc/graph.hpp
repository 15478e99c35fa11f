#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mpc {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Simple undirected graph, immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);  // K_{1,leaves}, center 0
  static Graph complete(int n);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted
  std::vector<std::vector<int>> adj_;  // sorted per vertex
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
int min_degree(const Graph& g);  // 0 for the empty graph
bool has_isolated_vertex(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// Reindexes: vertices above v shift down by one.
Graph remove_vertex(const Graph& g, int v);
// keep must be sorted and duplicate-free; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const int> keep);
// perm[old] = new; perm must be a permutation of 0..n-1.
Graph permuted(const Graph& g, std::span<const int> perm);

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

struct RootedTree {
  Graph tree;
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;
};

RootedTree root_tree(const Graph& g, int root);
std::vector<int> subtree_vertices(const RootedTree& t, int v);  // v and its descendants

}  // namespace mpc
