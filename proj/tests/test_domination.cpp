#include <vector>

#include "doctest.h"
#include "mpc/caps.hpp"
#include "mpc/domination.hpp"
#include "mpc/extremal.hpp"
#include "mpc/graph.hpp"
#include "mpc/trees.hpp"
#include "mpc/verify.hpp"
#include "oracles.hpp"

using namespace mpc;

namespace {

std::vector<int> set_of(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("domination checkers on hand-worked sets") {
  Graph p3 = Graph::path(3);
  CHECK(is_dominating(p3, set_of({1})));
  CHECK_FALSE(is_dominating(p3, set_of({0})));
  CHECK_FALSE(is_total_dominating(p3, set_of({1})));  // the center has no neighbor inside
  CHECK(is_total_dominating(p3, set_of({0, 1})));
  CHECK_FALSE(is_ntd(p3, set_of({1})));  // neighborhood {0,2} induces no edge
  CHECK(is_ntd(p3, set_of({0, 1})));

  // two stars joined at the centers: centers form a total dominating set
  Graph dstar(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  CHECK(is_total_dominating(dstar, set_of({2, 3})));
  CHECK(is_ntd(dstar, set_of({2, 3})));
  CHECK_FALSE(is_dominating(dstar, set_of({2})));

  CHECK(is_dominating(Graph(2), set_of({0, 1})));        // isolated vertices dominate themselves
  CHECK_FALSE(is_total_dominating(Graph(2), set_of({0, 1})));

  CHECK_THROWS_AS(is_dominating(p3, set_of({3})), std::invalid_argument);
  CHECK_THROWS_AS(is_dominating(p3, set_of({1, 1})), std::invalid_argument);
}

TEST_CASE("domination numbers on named graphs") {
  CHECK(gamma(Graph(1)).number == 1);
  CHECK(gamma(Graph::cycle(5)).number == 2);
  CHECK(gamma_t(Graph::cycle(5)).number == 3);
  CHECK(gamma_nt(Graph::cycle(5)).number == 3);
  CHECK(gamma(Graph::star(3)).number == 1);
  CHECK(gamma_t(Graph::star(3)).number == 2);
  CHECK(gamma_nt(Graph::star(3)).number == 2);
  CHECK(gamma_nt(Graph::path(3)).number == 2);
  CHECK(gamma_nt(Graph::path(5)).number == 3);
  CHECK(gamma(Graph(4, {{0, 1}, {2, 3}})).number == 2);  // disconnected, no isolated vertex
  CHECK(gamma_t(Graph(4, {{0, 1}, {2, 3}})).number == 4);
}

TEST_CASE("witnesses are minimum, admissible, and lexicographically least") {
  auto d = gamma(Graph::cycle(5));
  CHECK(d.witness == set_of({0, 2}));
  CHECK(is_dominating(Graph::cycle(5), d.witness));

  auto t = gamma_t(Graph::cycle(5));
  CHECK(t.witness == set_of({0, 1, 2}));
  CHECK(is_total_dominating(Graph::cycle(5), t.witness));

  auto nt = gamma_nt(Graph::cycle(5));
  CHECK(nt.witness == set_of({0, 1, 2}));
  CHECK(is_ntd(Graph::cycle(5), nt.witness));

  auto s = gamma_nt(Graph::star(3));
  CHECK(s.witness == set_of({0, 1}));
}

TEST_CASE("solvers refuse graphs they cannot answer for") {
  CHECK_THROWS_AS(gamma(Graph(0)), std::invalid_argument);
  CHECK_THROWS_WITH_AS(gamma_t(Graph(1)), "graph has an isolated vertex", std::invalid_argument);
  CHECK_THROWS_WITH_AS(gamma_nt(Graph(3, {{0, 1}})), "graph has an isolated vertex", std::invalid_argument);
  CHECK_THROWS_AS(gamma(Graph::cycle(25)), CapExceeded);
  CHECK_THROWS_AS(gamma_nt(Graph::cycle(70), 80), CapExceeded);  // beyond the 64-bit mask
}

TEST_CASE("chain gamma <= gamma_nt <= gamma_t and gamma <= matching number") {
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) {
      if (has_isolated_vertex(t)) continue;
      int d = gamma(t).number, dnt = gamma_nt(t).number, dt = gamma_t(t).number;
      CHECK(d <= dnt);
      CHECK(dnt <= dt);
    }
  auto corpus = sample_connected(400, 2, 10, 31415, 0);
  for (const Graph& g : corpus) {
    int d = gamma(g).number, dnt = gamma_nt(g).number, dt = gamma_t(g).number;
    CHECK(d <= dnt);
    CHECK(dnt <= dt);
  }
}

TEST_CASE("solvers agree with the subset-scan oracle") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : all_trees(n)) {
      CHECK(gamma(t).number == oracle::domination_number(t));
      if (!has_isolated_vertex(t)) {
        CHECK(gamma_t(t).number == oracle::total_domination_number(t));
        CHECK(gamma_nt(t).number == oracle::neighborhood_total_domination_number(t));
      }
    }
  auto corpus = sample_connected(300, 2, 9, 2718, 0);
  for (const Graph& g : corpus) {
    CHECK(gamma(g).number == oracle::domination_number(g));
    CHECK(gamma_t(g).number == oracle::total_domination_number(g));
    CHECK(gamma_nt(g).number == oracle::neighborhood_total_domination_number(g));
  }
}

TEST_CASE("half-order bound with its exact equality class") {
  // connected graphs reaching 2*gamma_nt = n+1 are the 5-cycle and spiders
  // with every leg subdivided once
  CHECK(2 * gamma_nt(Graph::cycle(5)).number == 6);
  for (int n = 3; n <= 10; ++n)
    for (const Graph& t : all_trees(n)) {
      int gnt = gamma_nt(t).number;
      CHECK(2 * gnt <= n + 1);
      bool spider = n % 2 == 1 && canonical_form(t) == canonical_form(build_subdivided_star((n - 1) / 2));
      CHECK((2 * gnt == n + 1) == spider);
    }
  for (int n = 3; n <= 9; ++n) {
    Graph c = Graph::cycle(n);
    CHECK((2 * gamma_nt(c).number == n + 1) == (n == 5));
  }
}
