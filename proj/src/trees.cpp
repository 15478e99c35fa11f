#include "mpc/trees.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace mpc {

namespace {

std::string ahu_code(const Graph& t, int root) {
  RootedTree rt = root_tree(t, root);
  // children before parents
  std::vector<int> order{root};
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : rt.children[order[i]]) order.push_back(c);
  std::vector<std::string> code(t.order());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> parts;
    for (int c : rt.children[v]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ")";
    code[v] = std::move(s);
  }
  return code[root];
}

}  // namespace

std::vector<int> tree_centers(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_centers requires a tree");
  int n = t.order();
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalForm canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("canonical_form requires a tree");
  auto centers = tree_centers(tree);
  std::string best = ahu_code(tree, centers[0]);
  if (centers.size() == 2) best = std::min(best, ahu_code(tree, centers[1]));
  return CanonicalForm{std::move(best)};
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& sink, int cap) {
  if (n < 1) throw std::invalid_argument("tree order must be at least 1");
  if (n > cap) throw CapExceeded("tree enumeration capped at " + std::to_string(cap) + " vertices");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : level)
      for (int v = 0; v < k - 1; ++v) {
        std::vector<Edge> e(t.edges());
        e.emplace_back(v, k - 1);
        Graph grown(k, e);
        if (seen.insert(canonical_form(grown).code).second) next.push_back(std::move(grown));
      }
    level = std::move(next);
  }
  for (const Graph& t : level) sink(t);
}

std::vector<Graph> all_trees(int n, int cap) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& t) { out.push_back(t); }, cap);
  return out;
}

Graph tree_from_pruefer(std::span<const int> seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw std::invalid_argument("pruefer entry out of range");
    ++deg[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<Edge> e;
  for (int v : seq) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, v);
    if (--deg[v] == 1) leaves.push(v);
  }
  int a = leaves.top();
  leaves.pop();
  e.emplace_back(a, leaves.top());
  return Graph(n, e);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed, int max_attempts) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("edge probability must be in (0,1]");
  std::mt19937_64 rng(seed);
  auto coin = [&] { return (rng() >> 11) * 0x1.0p-53 < p; };
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin()) e.emplace_back(i, j);
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected sample after " + std::to_string(max_attempts) +
                           " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

}  // namespace mpc
