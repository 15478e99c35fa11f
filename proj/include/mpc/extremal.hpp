#pragma once

#include <cstdint>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"

namespace mpc {

// Star K_{1,k-1} with a 6-cycle hung from every star vertex by one edge.
// Order 7k; gamma_t = 4k = alpha' + pc exactly (k >= 3).
Graph build_gamma_t_tight(int k);

// k disjoint K_{1,3} (k odd), one selected leaf each; the selected leaves are
// wired by h, which must admit a hamiltonian path (pc(h) = 1). Default h: a
// single vertex for k = 1, the cycle C_k otherwise. Order 4k; gamma_nt = 2k.
Graph build_gamma_nt_tight(int k);
Graph build_gamma_nt_tight(int k, const Graph& h);

// Every edge of K_{1,k} subdivided once; order 2k+1 (k=1 is P3, k=2 is P5).
Graph build_subdivided_star(int k);

// Bipartite incidence of an n-set (n = delta*(delta+1)) versus all its
// delta-subsets; gamma_nt exceeds alpha' = n. delta=1 degenerates to a star,
// delta=2 to C5.
Graph build_gnd(int delta, int vertex_budget = kDefaultVertexBudget);

// n - k + C(k,delta) + floor((n-k)/delta) with n = delta*(delta+1): lower
// bound on the dominated-side count forced by a k-subset of the ground set.
std::uint64_t gnd_counting_bound(int delta, int k);

// Spanning tree keeping a minimum path cover intact: cover edges first, then
// host edges in lexicographic order to reconnect; pc is preserved.
Graph spanning_tree_from_path_cover(const Graph& g, int cap = kDefaultPathCoverCap);

}  // namespace mpc
