#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circuit21/canonical.hpp"
#include "circuit21/catalog.hpp"
#include "circuit21/engine.hpp"
#include "circuit21/moves.hpp"
#include "circuit21/sparsity.hpp"
#include "oracles.hpp"

using namespace c21;

TEST_CASE("one extension") {
  Graph k5 = complete_graph(5);
  Graph g = one_extension(k5, 0, 1, 2);
  CHECK(g.n() == 6);
  CHECK(g.m() == 12);
  CHECK(is_circuit(g));
  CHECK(isomorphic(g, g60()));  // the unique 1-extension of K5

  Graph oct = octahedron();
  Graph h = one_extension(oct, 0, 1, 2);
  CHECK(h.n() == 7);
  CHECK(is_circuit(h));

  CHECK_THROWS(one_extension(octahedron(), 0, 3, 1));  // 0-3 is a deleted edge
  CHECK_THROWS(one_extension(k5, 0, 1, 0));            // z coincides with an endpoint
}

TEST_CASE("one reduction") {
  Graph g = g60();  // unique node is 4, neighbours {2,3,5}
  CHECK(g.degree(4) == 3);
  Graph red = one_reduction(g, 4, 2, 3);
  CHECK(isomorphic(red, complete_graph(5)));
  CHECK_THROWS(one_reduction(g, 4, 2, 5));  // 2-5 already an edge
  CHECK_THROWS(one_reduction(g, 0, 1, 2));  // degree 4, not a node
}

TEST_CASE("extension and reduction invert each other on labels") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; trial++) {
    Graph g = oracle::random_move_circuit(rng, 8);
    std::vector<std::pair<int, int>> distinct = g.edges;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto [x, y] = distinct[rng() % distinct.size()];
    std::vector<int> zs;
    for (int z : g.verts)
      if (z != x && z != y) zs.push_back(z);
    int z = zs[rng() % zs.size()];
    Graph ext = one_extension(g, x, y, z);
    int v = ext.max_label();
    CHECK(one_reduction(ext, v, x, y) == g);
  }
}

TEST_CASE("X-replacement and its inverse") {
  Graph oct = octahedron();
  // two vertex-disjoint edges of the octahedron
  Graph g = x_replacement(oct, 0, 1, 3, 4);
  CHECK(g.n() == 7);
  CHECK(g.min_degree() == 4);
  CHECK(is_circuit(g));
  int v = g.max_label();
  CHECK(inverse_x_replacement(g, v, 0, 1, 3, 4) == oct);

  CHECK_THROWS(x_replacement(oct, 0, 1, 1, 2));  // edges share a vertex
  for (int v5 : complete_graph(5).verts) {
    auto nb = complete_graph(5).neighbors(v5);
    CHECK_THROWS(inverse_x_replacement(complete_graph(5), v5, nb[0], nb[1], nb[2], nb[3]));
  }
}

TEST_CASE("forward moves preserve circuits") {
  std::mt19937 rng(43);
  int done = 0;
  while (done < 500) {
    Graph g = oracle::random_move_circuit(rng, 9);
    std::vector<std::pair<int, int>> distinct = g.edges;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (rng() % 2 == 0) {
      auto [x, y] = distinct[rng() % distinct.size()];
      std::vector<int> zs;
      for (int z : g.verts)
        if (z != x && z != y) zs.push_back(z);
      CHECK(is_circuit(one_extension(g, x, y, zs[rng() % zs.size()])));
      done++;
    } else {
      std::vector<std::array<int, 4>> cands;
      for (size_t i = 0; i < distinct.size(); i++)
        for (size_t j = i + 1; j < distinct.size(); j++) {
          auto [a, b] = distinct[i];
          auto [c, d] = distinct[j];
          if (a != c && a != d && b != c && b != d) cands.push_back({a, b, c, d});
        }
      if (cands.empty()) continue;
      auto& m = cands[rng() % cands.size()];
      CHECK(is_circuit(x_replacement(g, m[0], m[1], m[2], m[3])));
      done++;
    }
  }
}

TEST_CASE("sum case 1: split and join around a cut vertex") {
  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  Separation sep;
  sep.kind = SumCase::sum1;
  sep.side_a = {0, 1, 2, 3, 4};
  sep.side_b = {4, 5, 6, 7, 8};
  sep.cut_vertices = {4};
  sep.count_a = sep.count_b = 9;
  auto sr = sum_split(s5, sep);
  CHECK(is_circuit(sr.part_a));
  CHECK(is_circuit(sr.part_b));
  CHECK(isomorphic(sr.part_a, s5));  // the fixed point of the block sum
  CHECK(isomorphic(sr.part_b, s5));
  CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == s5);  // exact labels
}

TEST_CASE("sum case 2a: the double-gadget graph is its own join") {
  // T1 completed with the K4 gadget: a 10-vertex 4-regular circuit
  Graph t1 = t1_gadget();
  Graph d = t1;
  for (int v : {6, 7, 8, 9}) d = add_vertex(d, v);
  for (auto [u, v] : {std::pair{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}})
    d = add_edge(d, u, v);
  for (auto [u, v] : {std::pair{0, 6}, {0, 7}, {3, 8}, {3, 9}}) d = add_edge(d, u, v);
  CHECK(is_circuit(d));
  CHECK(d.min_degree() == 4);

  Separation sep;
  sep.kind = SumCase::sum2a;
  sep.side_a = {0, 1, 2, 3, 4, 5};
  sep.side_b = {0, 3, 6, 7, 8, 9};
  sep.cut_vertices = {0, 3};
  sep.count_a = sep.count_b = 10;
  auto sr = sum_split(d, sep);
  CHECK(isomorphic(sr.part_a, d));
  CHECK(isomorphic(sr.part_b, d));
  CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == d);

  // the cut-pair vertex is admissible by an inverse X-replacement
  auto mv = find_admissible_degree4(d);
  REQUIRE(mv.has_value());
  // and two such reductions land on S1
  Graph r1 = mv->reduced;
  auto mv2 = find_admissible_degree4(r1);
  REQUIRE(mv2.has_value());
  auto s1 = base_graphs(BaseFamily::g_simple)[6].graph;
  CHECK(isomorphic(mv2->reduced, s1));
}

TEST_CASE("sum case 3: parts drop the cut edge") {
  // K4 + K4 with an adjacent cut pair {4,5}
  Graph g = make_graph({0, 1, 2, 3, 4, 5, 6, 7},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                        {0, 4}, {0, 5}, {1, 4}, {2, 5}});
  CHECK(is_circuit(g));
  auto seps = classify_separation(g);
  const Separation* case3 = nullptr;
  for (auto& s : seps)
    if (s.kind == SumCase::sum3) case3 = &s;
  REQUIRE(case3 != nullptr);
  auto sr = sum_split(g, *case3);
  CHECK(is_circuit(sr.part_a));
  CHECK(is_circuit(sr.part_b));
  CHECK(!sr.part_a.has_edge(4, 5));
  CHECK(!sr.part_b.has_edge(4, 5));
  CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == g);
}

TEST_CASE("sum case 4 with all wires on one gadget vertex") {
  // apex side from a 6-vertex base, K5-f side built on S5's pattern
  Graph g57 = base_graphs(BaseFamily::g_simple)[1].graph;
  Graph s5 = base_graphs(BaseFamily::g_simple).back().graph;
  // S5 holds the case-4 B-pattern: block {4..8} with 3 wires out of vertex 4
  JoinSpec spec;
  spec.kind = SumCase::sum4;
  spec.kind_a = Sum5Side::apex;
  int apex = -1;
  for (int v : g57.verts)
    if (g57.degree(v) == 3) apex = v;
  REQUIRE(apex >= 0);
  auto nb = g57.neighbors(apex);
  spec.gadget_a = {apex};
  spec.gadget_b = {4, 5, 6, 7, 8};
  spec.cross = {{nb[0], 1}, {nb[1], 2}, {nb[2], 3}};
  Graph joined = sum_join(spec, g57, s5);
  CHECK(is_circuit(joined));
  CHECK(joined.n() == g57.n() - 1 + s5.n() - 5);
  // the B side keeps a degree-3 vertex where the gadget was stripped away
  CHECK(joined.degree(0) == 3);

  // corrupting one part makes the join fail
  Graph broken = remove_edge(g57, nb[0], apex);
  CHECK_THROWS(sum_join(spec, broken, s5));
}

TEST_CASE("sum case 5: S1 is the join of two K5 parts") {
  auto s1 = base_graphs(BaseFamily::g_simple)[6].graph;
  auto seps = classify_separation(s1);
  const Separation* case5 = nullptr;
  for (auto& s : seps)
    if (s.kind == SumCase::sum5) case5 = &s;
  REQUIRE(case5 != nullptr);
  auto sr = sum_split(s1, *case5);
  CHECK(isomorphic(sr.part_a, complete_graph(5)));
  CHECK(isomorphic(sr.part_b, complete_graph(5)));
  CHECK(sr.spec.kind_a == Sum5Side::apex);
  CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == s1);
}

TEST_CASE("sum case 5 side conditions on critical sets") {
  // K4+K4 with a (2,1,1) x (1,1,1,1) cut: the 3-distinct side becomes a K4
  // gadget part whose type tag constrains its proper critical sets
  Graph w = make_graph({0, 1, 2, 3, 4, 5, 6, 7},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                        {0, 4}, {0, 5}, {1, 6}, {2, 7}});
  CHECK(is_circuit(w));
  CHECK(!has_proper_critical_set(w));
  auto seps = classify_separation(w);
  REQUIRE(!seps.empty());
  for (auto& sr : sum_split_variants(w, seps[0])) {
    for (auto side : {std::pair{&sr.part_a, sr.spec.kind_a},
                      std::pair{&sr.part_b, sr.spec.kind_b}}) {
      auto pcs = all_proper_critical_sets(*side.first);
      if (side.second == Sum5Side::k4_type2) CHECK(pcs.size() == 1);
      else CHECK(pcs.empty());
    }
    // and the joined graph always comes back
    CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == w);
  }
}

TEST_CASE("join round trips on randomly generated separable circuits") {
  std::mt19937 rng(47);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 60; trial++) {
    auto g = oracle::random_sum_circuit(rng, 12);
    if (!g) continue;
    auto seps = classify_separation(*g);
    if (seps.empty()) continue;
    for (auto& sep : seps) {
      std::vector<SplitResult> variants;
      try {
        variants = sum_split_variants(*g, sep, 4);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (auto& sr : variants) {
        CHECK(is_circuit(sr.part_a));
        CHECK(is_circuit(sr.part_b));
        CHECK(sum_join(sr.spec, sr.part_a, sr.part_b) == *g);
      }
      done++;
    }
  }
  CHECK(done >= 30);
}
