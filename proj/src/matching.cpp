#include "mpc/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpc {

namespace {

// One phase of Edmonds' blossom search: alternating BFS from an exposed root,
// contracting odd cycles via the base[] map, until another exposed vertex is hit.
struct BlossomSearch {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> in_tree, in_blossom;

  BlossomSearch(const Graph& graph, std::vector<int> match_map)
      : g(graph), n(graph.order()), match(std::move(match_map)) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int stem, int child) {
    while (base[v] != stem) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // exposed endpoint reachable from root by an alternating path, or -1
  int grow_from(int root) {
    in_tree.assign(n, 0);
    parent.assign(n, -1);
    base.resize(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    in_tree[root] = 1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          int stem = lowest_common_base(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, stem, to);
          mark_path(to, stem, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = stem;
              if (!in_tree[i]) {
                in_tree[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          in_tree[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  // walk parent/match pointers back to the root
  std::vector<int> extract_path(int exposed) {
    std::vector<int> path{exposed};
    int v = exposed;
    for (;;) {
      int pv = parent[v];
      path.push_back(pv);
      if (match[pv] < 0) break;
      v = match[pv];
      path.push_back(v);
    }
    return path;
  }
};

bool alternates(const Graph& g, const std::vector<int>& partner, const std::vector<int>& path) {
  if (path.size() < 2 || path.size() % 2 != 0) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : path) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  if (partner[path.front()] >= 0 || partner[path.back()] >= 0) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
    bool matched_edge = partner[path[i]] == path[i + 1];
    if (matched_edge != (i % 2 == 1)) return false;
  }
  return true;
}

}  // namespace

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.order(), 0);
  for (auto [u, v] : m.edges) {
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

std::vector<int> partner_map(const Graph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) throw std::invalid_argument("not a matching of this graph");
  std::vector<int> partner(g.order(), -1);
  for (auto [u, v] : m.edges) {
    partner[u] = v;
    partner[v] = u;
  }
  return partner;
}

std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m) {
  std::vector<int> partner = partner_map(g, m);
  BlossomSearch search(g, partner);
  for (int root = 0; root < g.order(); ++root) {
    if (partner[root] >= 0) continue;
    int exposed = search.grow_from(root);
    if (exposed < 0) continue;
    std::vector<int> path = search.extract_path(exposed);
    if (!alternates(g, partner, path))
      throw std::logic_error("blossom search produced an invalid augmenting path");
    return AlternatingPath{std::move(path)};
  }
  return std::nullopt;
}

Matching augment(const Graph& g, const Matching& m, const AlternatingPath& p) {
  std::vector<int> partner = partner_map(g, m);
  if (!alternates(g, partner, p.vertices)) throw std::invalid_argument("path is not augmenting for this matching");
  for (size_t i = 0; i + 1 < p.vertices.size(); i += 2) {
    partner[p.vertices[i]] = p.vertices[i + 1];
    partner[p.vertices[i + 1]] = p.vertices[i];
  }
  Matching out;
  for (int v = 0; v < g.order(); ++v)
    if (partner[v] > v) out.edges.emplace_back(v, partner[v]);
  return out;
}

Matching maximum_matching(const Graph& g) {
  Matching m;
  std::vector<char> used(g.order(), 0);
  for (auto [u, v] : g.edges())
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      m.edges.emplace_back(u, v);
    }
  while (auto p = find_augmenting_path(g, m)) m = augment(g, m, *p);
  return m;
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool covered_by_every_maximum_matching(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  return matching_number(remove_vertex(g, v)) < matching_number(g);
}

}  // namespace mpc
