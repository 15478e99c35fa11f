#include <random>

#include "doctest.h"
#include "mpc/extremal.hpp"
#include "mpc/graph.hpp"
#include "mpc/matching.hpp"
#include "mpc/trees.hpp"
#include "mpc/verify.hpp"
#include "oracles.hpp"

using namespace mpc;

TEST_CASE("matching validity and partner maps") {
  Graph p4 = Graph::path(4);
  Matching m{{{0, 1}, {2, 3}}};
  CHECK(is_valid_matching(p4, m));
  CHECK(partner_map(p4, m) == std::vector<int>{1, 0, 3, 2});
  CHECK_FALSE(is_valid_matching(p4, Matching{{{0, 1}, {1, 2}}}));  // shared vertex
  CHECK_FALSE(is_valid_matching(p4, Matching{{{0, 2}}}));          // not an edge
  Matching empty;
  CHECK(is_valid_matching(p4, empty));
  CHECK(partner_map(p4, empty) == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("augmenting paths alternate and flip correctly") {
  Graph p4 = Graph::path(4);
  Matching m{{{1, 2}}};
  auto p = find_augmenting_path(p4, m);
  REQUIRE(p.has_value());
  CHECK(p->vertices.size() == 4);
  Matching bigger = augment(p4, m, *p);
  CHECK(bigger.size() == 2);
  CHECK(is_valid_matching(p4, bigger));
  CHECK_FALSE(find_augmenting_path(p4, bigger).has_value());

  // maximum matching of P3 admits no augmenting path
  CHECK_FALSE(find_augmenting_path(Graph::path(3), Matching{{{0, 1}}}).has_value());

  // flawed path arguments are rejected
  CHECK_THROWS_AS(augment(p4, m, AlternatingPath{{0, 1}}), std::invalid_argument);
}

TEST_CASE("augmentation through an odd cycle") {
  // triangle 2-3-4 hanging off a matched stem, free ends 0 and 5
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
  Matching m{{{1, 2}, {3, 4}}};
  auto p = find_augmenting_path(g, m);
  REQUIRE(p.has_value());
  Matching full = augment(g, m, *p);
  CHECK(full.size() == 3);
  CHECK(is_valid_matching(g, full));
  CHECK(matching_number(g) == 3);

  // odd component forces one exposed vertex
  Graph blossom_tip(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  CHECK(matching_number(blossom_tip) == 2);
  CHECK_FALSE(find_augmenting_path(blossom_tip, Matching{{{1, 2}, {3, 4}}}).has_value());
}

TEST_CASE("matching numbers on named graphs") {
  CHECK(matching_number(Graph(1)) == 0);
  CHECK(matching_number(Graph(3)) == 0);
  CHECK(matching_number(Graph::star(5)) == 1);
  CHECK(matching_number(Graph::path(5)) == 2);
  CHECK(matching_number(Graph::cycle(5)) == 2);
  CHECK(matching_number(Graph::cycle(6)) == 3);
  CHECK(matching_number(Graph::complete(7)) == 3);
  CHECK(matching_number(build_subdivided_star(3)) == 3);
  CHECK(matching_number(Graph(6, {{0, 1}, {2, 3}})) == 2);  // disconnected
}

TEST_CASE("maximum matchings agree with the branching oracle") {
  for (int n = 1; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) {
      Matching m = maximum_matching(t);
      CHECK(is_valid_matching(t, m));
      CHECK(m.size() == oracle::matching_number(t));
    }

  auto corpus = sample_connected(300, 2, 10, 2024, 0);
  for (const Graph& g : corpus) {
    Matching m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK_FALSE(find_augmenting_path(g, m).has_value());
    CHECK(m.size() == oracle::matching_number(g));
  }

  // disconnected graphs: random bipartition of edges over two shifted copies
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    Graph a = random_connected_graph(3 + static_cast<int>(rng() % 4), 0.5, rng());
    Graph b = random_connected_graph(3 + static_cast<int>(rng() % 4), 0.5, rng());
    std::vector<Edge> e = a.edges();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    Graph both(a.order() + b.order(), e);
    CHECK(matching_number(both) == oracle::matching_number(both));
    CHECK(matching_number(both) == matching_number(a) + matching_number(b));
  }
}

TEST_CASE("membership in every maximum matching") {
  Graph p3 = Graph::path(3);
  CHECK(covered_by_every_maximum_matching(p3, 1));
  CHECK_FALSE(covered_by_every_maximum_matching(p3, 0));
  CHECK_FALSE(covered_by_every_maximum_matching(p3, 2));
  for (int v = 0; v < 4; ++v) CHECK(covered_by_every_maximum_matching(Graph::path(4), v));
  CHECK_THROWS_AS(covered_by_every_maximum_matching(p3, 3), std::invalid_argument);
}
