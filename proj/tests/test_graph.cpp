#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mpc/caps.hpp"
#include "mpc/graph.hpp"
#include "mpc/graph_io.hpp"
#include "mpc/trees.hpp"

using namespace mpc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("graph construction and accessors") {
  Graph p3 = Graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));
  CHECK(p3.degree(1) == 2);
  CHECK(p3.neighbors(1) == std::vector<int>{0, 2});
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3 == Graph(3, {{1, 2}, {1, 0}}));  // normalization

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);

  CHECK(Graph::path(1).size() == 0);
  CHECK(Graph::path(5).size() == 4);
  CHECK(Graph::cycle(5).size() == 5);
  CHECK(Graph::star(3).size() == 3);
  CHECK(Graph::star(3).degree(0) == 3);
  CHECK(Graph::complete(5).size() == 10);
}

TEST_CASE("connectivity and shape helpers") {
  CHECK(is_connected(Graph::path(6)));
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
  CHECK(is_tree(Graph::star(5)));
  CHECK_FALSE(is_tree(Graph::cycle(4)));
  CHECK_FALSE(is_tree(Graph(3, {{0, 1}})));
  CHECK(min_degree(Graph::star(4)) == 1);
  CHECK(has_isolated_vertex(Graph(2)));
  CHECK_FALSE(has_isolated_vertex(Graph::path(2)));
  CHECK(is_path_graph(Graph::path(4)));
  CHECK(is_path_graph(Graph(1)));
  CHECK_FALSE(is_path_graph(Graph::star(4)));
  CHECK_FALSE(is_path_graph(Graph::cycle(4)));
  CHECK(is_cycle_graph(Graph::cycle(3)));
  CHECK_FALSE(is_cycle_graph(Graph::path(3)));

  auto comp = components(Graph(5, {{0, 3}, {1, 2}}));
  REQUIRE(comp.size() == 3);
  std::set<std::vector<int>> cs(comp.begin(), comp.end());
  CHECK(cs.count({0, 3}) == 1);
  CHECK(cs.count({1, 2}) == 1);
  CHECK(cs.count({4}) == 1);
}

TEST_CASE("vertex surgery keeps indices dense") {
  Graph c5 = Graph::cycle(5);
  Graph g = remove_vertex(c5, 2);  // path 3-4-0-1 after reindexing
  CHECK(g.order() == 4);
  CHECK(is_path_graph(g));

  Graph sub = induced_subgraph(c5, std::vector<int>{0, 1, 2});
  CHECK(sub.order() == 3);
  CHECK(is_path_graph(sub));

  std::vector<int> perm{4, 3, 2, 1, 0};
  Graph rev = permuted(Graph::path(5), perm);
  CHECK(is_path_graph(rev));
  CHECK(rev.has_edge(4, 3));
}

TEST_CASE("rooted tree decomposition") {
  // star with a tail: 0 center; leaves 1,2; tail 2-3
  Graph g(4, {{0, 1}, {0, 2}, {2, 3}});
  RootedTree rt = root_tree(g, 0);
  CHECK(rt.parent[0] == -1);
  CHECK(rt.parent[3] == 2);
  CHECK(rt.depth[3] == 2);
  auto sub = subtree_vertices(rt, 2);
  std::sort(sub.begin(), sub.end());
  CHECK(sub == std::vector<int>{2, 3});
}

TEST_CASE("graph6 frozen decodings") {
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("B_") == Graph(3, {{0, 1}}));          // one edge plus an isolated vertex
  CHECK(parse_graph6("BW") == Graph(3, {{0, 2}, {1, 2}}));  // a path through vertex 2
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6("Dhc") == Graph::cycle(5));
  CHECK(parse_graph6(">>graph6<<A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("A_\r\n") == Graph(2, {{0, 1}}));
}

TEST_CASE("graph6 round trip including long headers") {
  auto rt = [](const Graph& g) { return parse_graph6(write_graph6(g)); };
  for (const Graph& g : {Graph(0), Graph(1), Graph::path(2), Graph::cycle(5), Graph::complete(7),
                         Graph::star(62), Graph::star(63), Graph::star(70), Graph::path(100)})
    CHECK(rt(g) == g);
  CHECK(write_graph6(Graph::cycle(5)) == "Dhc");
  CHECK(write_graph6(Graph::star(70))[0] == '~');
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse_graph6("B"), "graph6: truncated bit field at byte 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("B!"), "graph6: byte outside graph6 range at byte 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("@@"), "graph6: unexpected trailing byte at byte 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("A@"), "graph6: nonzero padding bit at byte 1", ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6(">>graph6<<"), ParseError);
}

TEST_CASE("edge list round trip and fixtures") {
  Graph p3 = parse_edge_list("n 3\n0 1\n1 2\n");
  CHECK(p3 == Graph::path(3));
  CHECK(to_edge_list(p3) == "n 3\n0 1\n1 2\n");
  CHECK(parse_edge_list(to_edge_list(Graph::cycle(6))) == Graph::cycle(6));
  CHECK(parse_edge_list("n 2\n") == Graph(2));
  CHECK(parse_edge_list("\n n 3 \n\n 0   1 \n1 2\n\n") == Graph::path(3));  // tolerant spacing

  CHECK(parse_edge_list(slurp(std::string(TEST_DATA_DIR) + "/p3.edges")) == Graph::path(3));
  CHECK(parse_graph6(slurp(std::string(TEST_DATA_DIR) + "/c5.g6")) == Graph::cycle(5));
}

TEST_CASE("edge list parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list("n x\n"), "edge list: malformed header at line 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n"), "edge list: malformed header at line 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0\n"), "edge list: malformed edge at line 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 3\n"), "edge list: vertex out of range at line 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n1 1\n"), "edge list: self-loop at line 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 1\n1 0\n"), "edge list: duplicate edge at line 3", ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("dot output names every vertex and edge") {
  std::string dot = to_dot(Graph(3, {{0, 2}}));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.find("1;") != std::string::npos);  // isolated vertex still listed
}

TEST_CASE("tree centers") {
  CHECK(tree_centers(Graph::path(5)) == std::vector<int>{2});
  CHECK(tree_centers(Graph::path(4)) == std::vector<int>{1, 2});
  CHECK(tree_centers(Graph::star(7)) == std::vector<int>{0});
  CHECK(tree_centers(Graph(1)) == std::vector<int>{0});
}

TEST_CASE("canonical form is an isomorphism invariant") {
  CHECK(canonical_form(Graph::path(3)) == canonical_form(Graph(3, {{0, 2}, {2, 1}})));
  CHECK(canonical_form(Graph::path(4)) != canonical_form(Graph::star(4)));

  std::mt19937 rng(7);
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : all_trees(n)) {
      auto base = canonical_form(t);
      std::vector<int> perm(static_cast<size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int rep = 0; rep < 20; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(t, perm)) == base);
      }
    }
  }
}

TEST_CASE("tree enumeration matches the unlabeled census") {
  const std::vector<size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    auto ts = all_trees(n, 12);
    CHECK(ts.size() == counts[static_cast<size_t>(n - 1)]);
    std::set<std::string> codes;
    for (const Graph& t : ts) {
      CHECK(is_tree(t));
      CHECK(t.order() == n);
      codes.insert(canonical_form(t).code);
    }
    CHECK(codes.size() == ts.size());  // pairwise non-isomorphic
  }
  CHECK_THROWS_AS(all_trees(13, 12), CapExceeded);
  CHECK_THROWS_AS(all_trees(0), std::invalid_argument);
}

TEST_CASE("leaf-extension enumeration agrees with decoded labeled sequences") {
  // independent cross-check: decode every labeled tree on n vertices and
  // compare canonical code sets
  for (int n = 3; n <= 8; ++n) {
    std::set<std::string> from_enum;
    for (const Graph& t : all_trees(n)) from_enum.insert(canonical_form(t).code);

    std::set<std::string> from_seq;
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    for (;;) {
      from_seq.insert(canonical_form(tree_from_pruefer(seq)).code);
      int i = static_cast<int>(seq.size()) - 1;
      while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++seq[static_cast<size_t>(i)];
    }
    CHECK(from_enum == from_seq);
  }
  CHECK(tree_from_pruefer(std::vector<int>{}) == Graph::path(2));
  CHECK(tree_from_pruefer(std::vector<int>{0, 0}) == Graph::star(3));
  CHECK_THROWS_AS(tree_from_pruefer(std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("seeded random connected graphs") {
  Graph a = random_connected_graph(8, 0.4, 99);
  Graph b = random_connected_graph(8, 0.4, 99);
  CHECK(a == b);  // determinism
  CHECK(is_connected(a));
  CHECK(random_connected_graph(6, 1.0, 1) == Graph::complete(6));
  CHECK(random_connected_graph(1, 0.5, 1) == Graph(1));
  CHECK_THROWS_AS(random_connected_graph(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_connected_graph(5, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_connected_graph(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_WITH_AS(random_connected_graph(60, 0.001, 7, 50),
                       "no connected sample after 50 attempts (n=60, p=0.001000)", std::runtime_error);
}
