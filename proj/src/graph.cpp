#include "mpc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mpc {

namespace {

std::string vertex_str(int v) { return std::to_string(v); }

}  // namespace

Graph::Graph(int n)
    : n_(n),
      adj_(n >= 0 ? static_cast<size_t>(n)
                  : throw std::invalid_argument("graph order must be non-negative")) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + vertex_str(u) + " " + vertex_str(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + vertex_str(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

Graph Graph::star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("negative leaf count");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + vertex_str(v));
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool has_isolated_vertex(const Graph& g) { return g.order() > 0 && min_degree(g) == 0; }

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range: " + vertex_str(v));
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    e.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph(g.order() - 1, e);
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range: " + vertex_str(v));
    if (pos[v] >= 0 || (i > 0 && keep[i - 1] >= v))
      throw std::invalid_argument("keep list must be sorted and duplicate-free");
    pos[v] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (auto [a, b] : g.edges())
    if (pos[a] >= 0 && pos[b] >= 0) e.emplace_back(pos[a], pos[b]);
  return Graph(static_cast<int>(keep.size()), e);
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(g.order(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
  return Graph(g.order(), e);
}

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

RootedTree root_tree(const Graph& g, int root) {
  if (!is_tree(g)) throw std::invalid_argument("root_tree requires a tree");
  if (root < 0 || root >= g.order()) throw std::invalid_argument("root out of range");
  RootedTree t;
  t.tree = g;
  t.root = root;
  t.parent.assign(g.order(), -1);
  t.depth.assign(g.order(), 0);
  t.children.assign(g.order(), {});
  std::vector<int> order{root};
  std::vector<char> seen(g.order(), 0);
  seen[root] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      t.parent[u] = v;
      t.depth[u] = t.depth[v] + 1;
      t.children[v].push_back(u);
      order.push_back(u);
    }
  }
  return t;
}

std::vector<int> subtree_vertices(const RootedTree& t, int v) {
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int c : t.children[x]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mpc
