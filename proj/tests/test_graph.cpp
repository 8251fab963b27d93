#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circuit21/catalog.hpp"
#include "circuit21/graph.hpp"
#include "oracles.hpp"

using namespace c21;

TEST_CASE("edge list parsing and exact round trip") {
  Graph k5 = parse_graph("5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(k5 == complete_graph(5));
  CHECK(k5.simple);

  Graph r0 = parse_graph("1 2\n0 0\n0 0\n");
  CHECK(r0.n() == 1);
  CHECK(r0.m() == 2);
  CHECK(r0.loop_count(0) == 2);
  CHECK(!r0.simple);

  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 5\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("x y\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("-1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("3 4\n0 1\n0 2\n"), parse_error);  // truncated

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; trial++) {
    Graph g = oracle::random_graph(rng, 7, true);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("graph6 input for simple graphs") {
  Graph k5 = parse_graph6(to_graph6(complete_graph(5)));
  CHECK(k5 == complete_graph(5));
  Graph oct = octahedron();
  CHECK(parse_graph6(to_graph6(oct)) == to_dense_labels(oct));
  // parse_graph falls back to graph6 when the header is not "<n> <m>"
  CHECK(parse_graph(to_graph6(oct) + "\n") == to_dense_labels(oct));
  CHECK_THROWS(to_graph6(parse_graph("1 2\n0 0\n0 0\n")));
}

TEST_CASE("degree and induced count conventions") {
  Graph r0 = parse_graph("1 2\n0 0\n0 0\n");
  CHECK(r0.degree(0) == 4);            // loops count twice toward degree
  CHECK(induced_count(r0, {0}) == 2);  // and once toward i(X)
  CHECK(r0.m() == 2);

  Graph k5 = complete_graph(5);
  CHECK(induced_count(k5, {0, 1, 2}) == 3);
  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  CHECK(s5.n() == 9);
  CHECK(induced_count(s5, {0, 1, 2, 3, 4}) == 9);  // the K5-e block
  CHECK_THROWS(induced_count(k5, {0, 9}));
}

TEST_CASE("vertex connectivity") {
  CHECK(is_k_connected(complete_graph(5), 3));
  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  CHECK(!is_k_connected(s5, 2));  // cut vertex between the blocks
  Graph c6 = make_graph({0, 1, 2, 3, 4, 5},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(is_k_connected(c6, 2));
  CHECK(!is_k_connected(c6, 3));
  CHECK(!is_k_connected(make_graph({}, {}), 1));
  CHECK_THROWS(is_k_connected(c6, 4));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; trial++) {
    Graph g = oracle::random_graph(rng, 7, false);
    for (int k = 1; k <= 3; k++) CHECK(is_k_connected(g, k) == oracle::k_connected(g, k));
  }
}

TEST_CASE("non-trivial edge cuts") {
  CHECK(nontrivial_edge_cuts(complete_graph(5), 4).empty());
  CHECK(essentially_k_edge_connected(octahedron(), 5));

  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  auto cuts = nontrivial_edge_cuts(s5, 3);
  bool found_block_cut = false;
  for (auto& c : cuts) {
    if (c.side_a == std::vector<int>{0, 1, 2, 3} && c.cut_edges.size() == 3)
      found_block_cut = true;
  }
  CHECK(found_block_cut);  // 3 edges isolate the block whose missing edge sits at the cut-vertex

  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; trial++) {
    Graph g = oracle::random_graph(rng, 7, false);
    if (g.n() < 4) continue;
    auto mine = nontrivial_edge_cuts(g, 4);
    auto ref = oracle::nontrivial_cuts(g, 4);
    CHECK(mine.size() == ref.size());
  }
}

TEST_CASE("cut vertices and cut pairs with side decompositions") {
  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  auto cuts = find_cut_vertices(s5);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].cut == std::vector<int>{4});
  REQUIRE(cuts[0].components.size() == 2);
  CHECK(cuts[0].components[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(cuts[0].components[1] == std::vector<int>{5, 6, 7, 8});

  CHECK(find_cut_vertices(complete_graph(5)).empty());
  CHECK(find_cut_pairs(complete_graph(5)).empty());

  // two K4 blocks sharing two nonadjacent vertices
  Graph two_blocks = make_graph({0, 1, 2, 3, 4, 5},
                                {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                 {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
  auto pairs = find_cut_pairs(two_blocks);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].cut == std::vector<int>{0, 1});

  // members of a cut pair that are themselves cut vertices are not reported
  auto vcuts = find_cut_vertices(s5);
  for (auto& p : find_cut_pairs(s5))
    for (int v : p.cut) CHECK(v != vcuts[0].cut[0]);
}

TEST_CASE("d_between counts edges across the difference sets") {
  Graph k5 = complete_graph(5);
  CHECK(d_between(k5, {0, 1}, {2, 3}) == 4);
  CHECK(d_between(k5, {0, 1, 2}, {2, 3}) == 2);  // edges at the shared vertex do not count
}
