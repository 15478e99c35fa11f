#include "mpc/path_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mpc {

namespace {

constexpr std::uint8_t kInf = 0xFF;

PathCover greedy_cover(const Graph& g) {
  PathCover cover;
  std::vector<char> used(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (used[s]) continue;
    std::vector<int> path{s};
    used[s] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int u : g.neighbors(path.back()))
        if (!used[u]) {
          path.push_back(u);
          used[u] = 1;
          grew = true;
          break;
        }
    }
    std::reverse(path.begin(), path.end());
    for (bool grew = true; grew;) {
      grew = false;
      for (int u : g.neighbors(path.back()))
        if (!used[u]) {
          path.push_back(u);
          used[u] = 1;
          grew = true;
          break;
        }
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

PathCover paths_from_forest(const Graph& g, const std::vector<Edge>& chosen) {
  std::vector<std::vector<int>> link(g.order());
  for (auto [u, v] : chosen) {
    link[u].push_back(v);
    link[v].push_back(u);
  }
  PathCover cover;
  std::vector<char> used(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (used[s] || link[s].size() > 1) continue;
    std::vector<int> path{s};
    used[s] = 1;
    int prev = -1, v = s;
    for (;;) {
      int next = -1;
      for (int u : link[v])
        if (u != prev) next = u;
      if (next < 0) break;
      path.push_back(next);
      used[next] = 1;
      prev = v;
      v = next;
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

}  // namespace

bool is_path_cover(const Graph& g, const PathCover& c) {
  std::vector<char> seen(g.order(), 0);
  int covered = 0;
  for (const auto& path : c.paths) {
    if (path.empty()) return false;
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = 1;
      ++covered;
      if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
    }
  }
  return covered == g.order();
}

PathCover min_path_cover_tree(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("min_path_cover_tree requires a tree");
  RootedTree rt = root_tree(g, 0);
  std::vector<int> order{0};
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : rt.children[order[i]]) order.push_back(c);

  // two[v]: best edge count in the subtree when v may keep two child edges;
  // one[v]: when at most one (room left for the parent edge)
  std::vector<int> one(g.order()), two(g.order());
  auto gain = [&](int c) { return one[c] + 1 - two[c]; };  // 0 or 1
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int base = 0, g1 = 0, g2 = 0;
    for (int c : rt.children[v]) {
      base += two[c];
      int gc = gain(c);
      if (gc > g1) std::swap(gc, g1);
      if (gc > g2) g2 = gc;
    }
    one[v] = base + g1;
    two[v] = base + g1 + g2;
  }

  std::vector<Edge> chosen;
  std::vector<int> budget(g.order(), 0);
  budget[0] = 2;
  for (int v : order) {
    int left = budget[v];
    for (int c : rt.children[v]) {
      if (left > 0 && gain(c) == 1) {
        chosen.emplace_back(std::min(v, c), std::max(v, c));
        budget[c] = 1;
        --left;
      } else {
        budget[c] = 2;
      }
    }
  }
  PathCover cover = paths_from_forest(g, chosen);
  if (cover.size() != g.order() - two[0]) throw std::logic_error("tree path cover reconstruction mismatch");
  return cover;
}

PathCover min_path_cover_exact(const Graph& g, int cap) {
  int n = g.order();
  if (n > cap) throw CapExceeded("exact path cover capped at " + std::to_string(cap) + " vertices");
  if (n > 24) throw CapExceeded("exact path cover table would exceed memory above 24 vertices");
  if (n == 0) return {};

  PathCover greedy = greedy_cover(g);
  const std::uint8_t ub = static_cast<std::uint8_t>(greedy.size());
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // f[S*n+v]: fewest paths partitioning S, one of them still open and ending at v
  std::vector<std::uint8_t> f(static_cast<size_t>(full + 1) * n, kInf);
  std::vector<std::uint8_t> best_end(full + 1, kInf);
  for (int v = 0; v < n; ++v) {
    f[static_cast<size_t>(1u << v) * n + v] = 1;
    best_end[1u << v] = 1;
  }
  for (std::uint32_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;  // singletons seeded above
    std::uint8_t& best_here = best_end[s];
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = s ^ (1u << v);
      int best = kInf;
      if (best_end[prev] != kInf) best = best_end[prev] + 1;
      for (std::uint32_t cand = nbr[v] & prev; cand; cand &= cand - 1)
        best = std::min<int>(best, f[static_cast<size_t>(prev) * n + std::countr_zero(cand)]);
      if (best > ub) best = kInf;  // cannot beat the greedy cover
      f[static_cast<size_t>(s) * n + v] = static_cast<std::uint8_t>(best);
      best_here = std::min<std::uint8_t>(best_here, static_cast<std::uint8_t>(best));
    }
  }

  if (best_end[full] >= ub) return greedy;

  int v = 0;
  while (f[static_cast<size_t>(full) * n + v] != best_end[full]) ++v;
  PathCover cover;
  std::vector<int> cur{v};
  std::uint32_t s = full;
  int val = best_end[full];
  for (;;) {
    std::uint32_t prev = s ^ (1u << v);
    if (prev == 0) {
      std::reverse(cur.begin(), cur.end());
      cover.paths.push_back(std::move(cur));
      break;
    }
    int next = -1;
    for (std::uint32_t cand = nbr[v] & prev; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      if (f[static_cast<size_t>(prev) * n + u] == val) {
        next = u;
        break;
      }
    }
    if (next >= 0) {
      cur.push_back(next);
    } else {
      for (std::uint32_t cand = prev; cand; cand &= cand - 1) {
        int u = std::countr_zero(cand);
        if (f[static_cast<size_t>(prev) * n + u] == val - 1) {
          next = u;
          break;
        }
      }
      if (next < 0) throw std::logic_error("path cover backtrack lost its trail");
      std::reverse(cur.begin(), cur.end());
      cover.paths.push_back(std::move(cur));
      cur = {next};
      --val;
    }
    v = next;
    s = prev;
  }
  std::reverse(cover.paths.begin(), cover.paths.end());
  return cover;
}

int path_cover_number(const Graph& g, int cap) {
  if (g.order() == 0) return 0;
  if (is_tree(g)) return min_path_cover_tree(g).size();
  return min_path_cover_exact(g, cap).size();
}

}  // namespace mpc
