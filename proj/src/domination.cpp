#include "mpc/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mpc {

namespace {

void check_set(const Graph& g, std::span<const int> s) {
  std::vector<char> seen(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("set vertex out of range: " + std::to_string(v));
    if (seen[v]) throw std::invalid_argument("duplicate vertex in set: " + std::to_string(v));
    seen[v] = 1;
  }
}

enum class Kind { Plain, Total, NeighborhoodTotal };

// Ascending-cardinality search. Branches on the first unsatisfied vertex;
// once domination holds, neighborhood-total solutions may still need filler
// vertices, which are added in ascending order.
struct DomSearch {
  const Graph& g;
  Kind kind;
  int n;
  std::uint64_t all;
  std::vector<std::uint64_t> adj;    // open neighborhoods
  std::vector<std::uint64_t> reach;  // what choosing w satisfies
  int max_reach = 0;

  DomSearch(const Graph& graph, Kind k) : g(graph), kind(k), n(graph.order()) {
    all = n == 64 ? ~0ull : (1ull << n) - 1;
    adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1ull << v;
      adj[v] |= 1ull << u;
    }
    reach = adj;
    if (kind != Kind::Total)
      for (int v = 0; v < n; ++v) reach[v] |= 1ull << v;
    for (int v = 0; v < n; ++v) max_reach = std::max(max_reach, std::popcount(reach[v]));
  }

  std::uint64_t satisfied_by(std::uint64_t chosen) const {
    std::uint64_t c = 0;
    for (std::uint64_t rest = chosen; rest; rest &= rest - 1) c |= reach[std::countr_zero(rest)];
    return c;
  }

  bool ntd_ok(std::uint64_t chosen) const {
    std::uint64_t open = 0;
    for (std::uint64_t rest = chosen; rest; rest &= rest - 1) open |= adj[std::countr_zero(rest)];
    for (std::uint64_t rest = open; rest; rest &= rest - 1)
      if ((adj[std::countr_zero(rest)] & open) == 0) return false;
    return true;
  }

  bool search(std::uint64_t chosen, std::uint64_t covered, int count, int k, std::uint64_t allowed,
              int ext_from) const {
    if (covered == all) {
      if (kind != Kind::NeighborhoodTotal || ntd_ok(chosen)) return true;
      if (count == k) return false;
      for (std::uint64_t rest = allowed & ~chosen & ~((1ull << ext_from) - 1); rest; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        if (search(chosen | 1ull << w, covered, count + 1, k, allowed, w + 1)) return true;
      }
      return false;
    }
    int remaining = k - count;
    if (remaining <= 0) return false;
    if (std::popcount(all & ~covered) > remaining * max_reach) return false;
    int u = std::countr_zero(all & ~covered);
    std::uint64_t cands = (adj[u] | (kind == Kind::Total ? 0 : 1ull << u)) & allowed & ~chosen;
    for (std::uint64_t rest = cands; rest; rest &= rest - 1) {
      int w = std::countr_zero(rest);
      if (search(chosen | 1ull << w, covered | reach[w], count + 1, k, allowed, 0)) return true;
    }
    return false;
  }

  bool feasible(int k, std::uint64_t forced, int free_from) const {
    int count = std::popcount(forced);
    if (count > k) return false;
    std::uint64_t allowed = forced | (all & ~((free_from >= 64 ? ~0ull : (1ull << free_from) - 1)));
    return search(forced, satisfied_by(forced), count, k, allowed, 0);
  }
};

DominationResult solve(const Graph& g, Kind kind, int cap) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("domination needs at least one vertex");
  if (n > cap) throw CapExceeded("domination search capped at " + std::to_string(cap) + " vertices");
  if (n > 64) throw CapExceeded("domination search limited to 64 vertices");
  if (kind != Kind::Plain && has_isolated_vertex(g))
    throw std::invalid_argument("graph has an isolated vertex");

  DomSearch search(g, kind);
  int number = -1;
  for (int k = 1; k <= n; ++k)
    if (search.feasible(k, 0, 0)) {
      number = k;
      break;
    }
  if (number < 0) throw std::logic_error("no dominating set found");

  std::uint64_t forced = 0;
  int picked = 0, from = 0;
  while (picked < number) {
    int v = from;
    while (!search.feasible(number, forced | 1ull << v, v + 1)) ++v;
    forced |= 1ull << v;
    from = v + 1;
    ++picked;
  }
  DominationResult out;
  out.number = number;
  for (std::uint64_t rest = forced; rest; rest &= rest - 1) out.witness.push_back(std::countr_zero(rest));
  return out;
}

}  // namespace

bool is_dominating(const Graph& g, std::span<const int> s) {
  check_set(g, s);
  std::vector<char> covered(g.order(), 0);
  for (int v : s) {
    covered[v] = 1;
    for (int u : g.neighbors(v)) covered[u] = 1;
  }
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

bool is_total_dominating(const Graph& g, std::span<const int> s) {
  check_set(g, s);
  std::vector<char> covered(g.order(), 0);
  for (int v : s)
    for (int u : g.neighbors(v)) covered[u] = 1;
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

bool is_ntd(const Graph& g, std::span<const int> s) {
  if (!is_dominating(g, s)) return false;
  std::vector<char> open(g.order(), 0);
  for (int v : s)
    for (int u : g.neighbors(v)) open[u] = 1;
  for (int v = 0; v < g.order(); ++v) {
    if (!open[v]) continue;
    bool ok = false;
    for (int u : g.neighbors(v))
      if (open[u]) ok = true;
    if (!ok) return false;
  }
  return true;
}

DominationResult gamma(const Graph& g, int cap) { return solve(g, Kind::Plain, cap); }
DominationResult gamma_t(const Graph& g, int cap) { return solve(g, Kind::Total, cap); }
DominationResult gamma_nt(const Graph& g, int cap) { return solve(g, Kind::NeighborhoodTotal, cap); }

}  // namespace mpc
