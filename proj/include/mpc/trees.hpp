#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"

namespace mpc {

// Isomorphism-invariant code: AHU encoding rooted at the tree center
// (lexicographically smaller rooting when there are two centers).
struct CanonicalForm {
  std::string code;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& tree);
std::vector<int> tree_centers(const Graph& tree);  // one or two vertices

// All unlabeled trees of order n, one representative per isomorphism class,
// grown level by level: each n-tree is an (n-1)-tree plus one leaf.
void enumerate_trees(int n, const std::function<void(const Graph&)>& sink, int cap = kDefaultEnumCap);
std::vector<Graph> all_trees(int n, int cap = kDefaultEnumCap);

// Labeled tree on seq.size()+2 vertices from its Pruefer sequence.
Graph tree_from_pruefer(std::span<const int> seq);

// G(n,p) conditioned on connectivity by rejection; deterministic in seed.
Graph random_connected_graph(int n, double p, std::uint64_t seed, int max_attempts = 1000);

}  // namespace mpc
