#pragma once

#include <optional>
#include <vector>

#include "mpc/graph.hpp"

namespace mpc {

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

// Augmenting path: endpoints unmatched, edges alternate starting and ending
// with non-matching edges.
struct AlternatingPath {
  std::vector<int> vertices;
};

bool is_valid_matching(const Graph& g, const Matching& m);
// partner per vertex, -1 if unmatched; validates m
std::vector<int> partner_map(const Graph& g, const Matching& m);

std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m);
Matching augment(const Graph& g, const Matching& m, const AlternatingPath& p);

// Maximum by Berge's criterion: grown by augmentation until find_augmenting_path
// certifies that none remains.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

// True iff alpha'(g - v) < alpha'(g).
bool covered_by_every_maximum_matching(const Graph& g, int v);

}  // namespace mpc
