#include "oracles.hpp"

#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const mpc::Graph& g, int max_n) {
  int n = g.order();
  if (n > max_n) throw std::invalid_argument("oracle limited to " + std::to_string(max_n) + " vertices");
  std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
  }
  return adj;
}

}  // namespace

int matching_number(const mpc::Graph& g) {
  int n = g.order();
  auto adj = adjacency_masks(g, 20);
  if (n == 0) return 0;
  std::vector<signed char> memo(size_t{1} << n, -1);
  std::function<int(std::uint32_t)> rec = [&](std::uint32_t live) -> int {
    if (live == 0) return 0;
    signed char& slot = memo[live];
    if (slot >= 0) return slot;
    int v = std::countr_zero(live);
    std::uint32_t rest = live & (live - 1);
    int best = rec(rest);
    std::uint32_t nb = adj[static_cast<size_t>(v)] & rest;
    while (nb != 0) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + rec(rest & ~(1u << u)));
    }
    slot = static_cast<signed char>(best);
    return best;
  };
  return rec((n == 32 ? ~0u : (1u << n) - 1));
}

int path_cover_number(const mpc::Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  auto adj = adjacency_masks(g, 14);
  std::uint32_t full = (1u << n) - 1;
  std::vector<char> is_path(full + 1, 0);
  std::function<void(int, std::uint32_t)> walk = [&](int v, std::uint32_t used) {
    is_path[used] = 1;
    std::uint32_t nb = adj[static_cast<size_t>(v)] & ~used;
    while (nb != 0) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      walk(u, used | (1u << u));
    }
  };
  for (int v = 0; v < n; ++v) walk(v, 1u << v);
  std::vector<int> cover(full + 1, INT_MAX);
  cover[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !is_path[sub]) continue;
      if (cover[mask ^ sub] != INT_MAX)
        cover[mask] = std::min(cover[mask], 1 + cover[mask ^ sub]);
    }
  }
  return cover[full];
}

namespace {

int subset_scan(const mpc::Graph& g, bool closed, bool ntd) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("oracle needs a nonempty graph");
  auto adj = adjacency_masks(g, 16);
  std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  int best = INT_MAX;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) >= best) continue;
    std::uint32_t covered = 0, open = 0;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      int v = std::countr_zero(t);
      open |= adj[static_cast<size_t>(v)];
    }
    covered = closed ? (open | s) : open;
    if (covered != full) continue;
    if (ntd) {
      bool ok = true;
      for (std::uint32_t t = open; t != 0 && ok; t &= t - 1) {
        int u = std::countr_zero(t);
        if ((adj[static_cast<size_t>(u)] & open) == 0) ok = false;
      }
      if (!ok) continue;
    }
    best = std::popcount(s);
  }
  if (best == INT_MAX) throw std::invalid_argument("no admissible set exists");
  return best;
}

}  // namespace

int domination_number(const mpc::Graph& g) { return subset_scan(g, true, false); }
int total_domination_number(const mpc::Graph& g) { return subset_scan(g, false, false); }
int neighborhood_total_domination_number(const mpc::Graph& g) { return subset_scan(g, true, true); }

}  // namespace oracle
