#include "mpc/extremal.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mpc/path_cover.hpp"

namespace mpc {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) { return up[v] == v ? v : up[v] = find(up[v]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

}  // namespace

Graph build_gamma_t_tight(int k) {
  if (k < 3) throw std::invalid_argument("gamma-t-tight family needs k >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < k; ++i) e.emplace_back(0, i);
  for (int i = 0; i < k; ++i) {
    int c = k + 6 * i;
    for (int j = 0; j < 6; ++j) e.emplace_back(c + j, c + (j + 1) % 6);
    e.emplace_back(i, c);
  }
  return Graph(7 * k, e);
}

Graph build_gamma_nt_tight(int k) {
  if (k == 1) return build_gamma_nt_tight(k, Graph(1));
  if (k >= 3 && k % 2 == 1) return build_gamma_nt_tight(k, Graph::cycle(k));
  throw std::invalid_argument("gamma-nt-tight family needs odd k >= 1");
}

Graph build_gamma_nt_tight(int k, const Graph& h) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("gamma-nt-tight family needs odd k >= 1");
  if (h.order() != k) throw std::invalid_argument("selected-leaf graph must have exactly k vertices");
  if (min_path_cover_exact(h).size() != 1)
    throw std::invalid_argument("selected-leaf graph admits no hamiltonian path");
  std::vector<Edge> e(h.edges());
  for (int i = 0; i < k; ++i) {
    int c = k + 3 * i;
    e.emplace_back(i, c);
    e.emplace_back(c, c + 1);
    e.emplace_back(c, c + 2);
  }
  return Graph(4 * k, e);
}

Graph build_subdivided_star(int k) {
  if (k < 1) throw std::invalid_argument("subdivided star needs k >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(0, 1 + 2 * i);
    e.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  return Graph(2 * k + 1, e);
}

Graph build_gnd(int delta, int vertex_budget) {
  if (delta < 1) throw std::invalid_argument("minimum degree parameter must be positive");
  if (delta == 1) return Graph::star(3);
  if (delta == 2) return Graph::cycle(5);
  std::uint64_t n = static_cast<std::uint64_t>(delta) * (delta + 1);
  std::uint64_t total = n + binom(n, delta);
  if (total > static_cast<std::uint64_t>(vertex_budget))
    throw CapExceeded("construction needs " + std::to_string(total) + " vertices, budget is " +
                      std::to_string(vertex_budget));
  std::vector<Edge> e;
  std::vector<int> pick(delta);
  std::iota(pick.begin(), pick.end(), 0);
  int subset_vertex = static_cast<int>(n);
  for (;;) {
    for (int v : pick) e.emplace_back(v, subset_vertex);
    ++subset_vertex;
    int i = delta - 1;
    while (i >= 0 && pick[i] == static_cast<int>(n) - delta + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < delta; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Graph(static_cast<int>(total), e);
}

std::uint64_t gnd_counting_bound(int delta, int k) {
  if (delta < 1) throw std::invalid_argument("minimum degree parameter must be positive");
  std::uint64_t n = static_cast<std::uint64_t>(delta) * (delta + 1);
  if (k < delta || static_cast<std::uint64_t>(k) > n)
    throw std::invalid_argument("count is defined for delta <= k <= delta*(delta+1)");
  return n - k + binom(k, delta) + (n - k) / delta;
}

Graph spanning_tree_from_path_cover(const Graph& g, int cap) {
  if (g.order() < 1 || !is_connected(g))
    throw std::invalid_argument("spanning tree needs a connected nonempty graph");
  PathCover cover = is_tree(g) ? min_path_cover_tree(g) : min_path_cover_exact(g, cap);
  Dsu dsu(g.order());
  std::vector<Edge> chosen;
  for (const auto& path : cover.paths)
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      dsu.unite(path[i], path[i + 1]);
      chosen.emplace_back(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
    }
  for (auto [u, v] : g.edges())
    if (dsu.unite(u, v)) chosen.emplace_back(u, v);
  Graph t(g.order(), chosen);
  if (!is_tree(t)) throw std::logic_error("spanning tree assembly failed");
  return t;
}

}  // namespace mpc
