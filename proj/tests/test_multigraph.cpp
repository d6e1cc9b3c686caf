#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "kirchhoff/linalg.hpp"
#include "kirchhoff/multigraph.hpp"
#include "oracle.hpp"

using namespace kirchhoff;
namespace oracle = kirchhoff::testing;

TEST_CASE("construction normalizes endpoints and rejects junk") {
  MultiGraph g(4, {{2, 0}, {3, 1}, {1, 3}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 0, 2});
  CHECK(g.edges()[1] == Edge{1, 1, 3});
  CHECK(g.edges()[2] == Edge{2, 1, 3});  // parallel to id 1
  CHECK(g.has_edge_id(2));
  CHECK_FALSE(g.has_edge_id(3));
  CHECK_THROWS(MultiGraph(3, {{0, 0}}));   // self-loop
  CHECK_THROWS(MultiGraph(3, {{0, 5}}));   // endpoint out of range
}

TEST_CASE("tree counts via cofactor match the classic closed forms") {
  // Complete graphs: n^(n-2).
  for (int n = 1; n <= 8; ++n)
    CHECK(tree_count_cofactor(MultiGraph::complete(n)) ==
          (n == 1 ? Int(1) : int_pow(Int(n), static_cast<unsigned long>(n - 2))));
  // Complete bipartite: m^(n-1) * n^(m-1).
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(tree_count_cofactor(MultiGraph::complete_bipartite(m, n)) ==
            int_pow(Int(m), static_cast<unsigned long>(n - 1)) *
                int_pow(Int(n), static_cast<unsigned long>(m - 1)));
  // Parallel edges each count.
  MultiGraph doubled(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(tree_count_cofactor(doubled) == 3);
  // Disconnected graphs have no spanning tree.
  MultiGraph split(4, {{0, 1}, {2, 3}});
  CHECK(tree_count_cofactor(split) == 0);
  CHECK_FALSE(split.is_connected());
}

TEST_CASE("laplacian has zero row sums and degree diagonal") {
  MultiGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  ExactMatrix l = laplacian(g);
  CHECK(l.at(0, 0) == 2);
  CHECK(l.at(1, 1) == 3);
  CHECK(l.at(2, 2) == 1);
  CHECK(l.at(0, 1) == -2);
  for (int r = 0; r < 3; ++r) {
    Rat sum = 0;
    for (int c = 0; c < 3; ++c) sum += l.at(r, c);
    CHECK(sum == 0);
  }
  // Any diagonal cofactor gives the same count.
  CHECK(cofactor(l, 0, 0) == cofactor(l, 1, 1));
  CHECK(cofactor(l, 0, 0) == cofactor(l, 2, 2));
}

TEST_CASE("enumeration agrees with the subset-scan oracle and the cofactor") {
  auto check_graph = [](const MultiGraph& g) {
    auto enumerated = enumerate_spanning_trees(g);
    auto brute = oracle::brute_force_spanning_trees(g);
    auto sorted = enumerated;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute);
    CHECK(Int(static_cast<long>(enumerated.size())) == tree_count_cofactor(g));
  };
  check_graph(MultiGraph::complete(4));
  check_graph(MultiGraph::complete_bipartite(2, 3));
  check_graph(MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}));
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial)
    check_graph(oracle::random_connected_graph(rng, 6, 12));
}

TEST_CASE("enumeration order is deterministic depth-first include-first") {
  MultiGraph g = MultiGraph::complete(3);  // edges 0:(0,1) 1:(0,2) 2:(1,2)
  auto trees = enumerate_spanning_trees(g);
  REQUIRE(trees.size() == 3);
  CHECK(trees[0] == std::vector<int>{0, 1});
  CHECK(trees[1] == std::vector<int>{0, 2});
  CHECK(trees[2] == std::vector<int>{1, 2});
}

TEST_CASE("enumeration guards: disconnected graphs and the edge cap") {
  CHECK_THROWS(enumerate_spanning_trees(MultiGraph(4, {{0, 1}, {2, 3}})));
  CHECK_THROWS(enumerate_spanning_trees(MultiGraph::complete(8)));  // 28 > 24 default cap
  CHECK_NOTHROW(enumerate_spanning_trees(MultiGraph::complete(8), 28));

  // KIRCHHOFF_EDGE_CAP overrides the default.
  setenv("KIRCHHOFF_EDGE_CAP", "28", 1);
  CHECK(edge_cap_from_env() == 28);
  setenv("KIRCHHOFF_EDGE_CAP", "junk", 1);
  CHECK(edge_cap_from_env() == kDefaultEdgeCap);
  unsetenv("KIRCHHOFF_EDGE_CAP");
  CHECK(edge_cap_from_env() == kDefaultEdgeCap);
}

TEST_CASE("contraction keeps surviving ids and relabels by smallest member") {
  MultiGraph g = MultiGraph::complete_bipartite(2, 3);
  // Edge ids: 0:(0,2) 1:(0,3) 2:(0,4) 3:(1,2) 4:(1,3) 5:(1,4).
  MultiGraph c = contract(g, {0, 1});
  CHECK(c.vertex_count() == 3);
  REQUIRE(c.edge_count() == 4);
  // Classes {0,2,3} -> 0, {1} -> 1, {4} -> 2.
  CHECK(c.edges()[0] == Edge{2, 0, 2});
  CHECK(c.edges()[1] == Edge{3, 0, 1});
  CHECK(c.edges()[2] == Edge{4, 0, 1});  // now parallel with id 3
  CHECK(c.edges()[3] == Edge{5, 1, 2});

  // Contracting a cycle is rejected: ids 3 and 4 are parallel in c.
  CHECK_THROWS(contract(c, {3, 4}));
  // So is a triangle in the complete graph.
  CHECK_THROWS(contract(MultiGraph::complete(3), {0, 1, 2}));
  CHECK_THROWS(contract(g, {0, 0}));
  CHECK_THROWS(contract(g, {99}));
}

TEST_CASE("trees containing given edges: contraction route vs filtered enumeration") {
  MultiGraph g = MultiGraph::complete_bipartite(2, 3);
  auto trees = enumerate_spanning_trees(g);
  CHECK(trees_containing(g, {0, 1}) == 5);
  CHECK(trees_containing(g, {0, 3}) == 4);
  CHECK(trees_containing(g, {0, 4}) == 5);
  CHECK(trees_containing(g, {}) == 12);
  CHECK(oracle::count_containing(oracle::brute_force_spanning_trees(g), {0, 1}) == 5);

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    MultiGraph h = oracle::random_connected_graph(rng, 6, 12);
    auto brute = oracle::brute_force_spanning_trees(h);
    std::vector<int> pick = oracle::random_forest_edges(rng, h);
    CHECK(trees_containing(h, pick) == Int(oracle::count_containing(brute, pick)));
  }
}

TEST_CASE("forest bookkeeping over the host vertices") {
  MultiGraph k9 = MultiGraph::complete(9);
  // Pick a forest with component sizes 4, 3, 2: edges on {0,1,2,3}, {4,5,6}, {7,8}.
  auto id_of = [&](int u, int v) {
    for (const Edge& e : k9.edges())
      if (e.u == u && e.v == v) return e.id;
    REQUIRE(false);
    return -1;
  };
  Forest f(k9, {id_of(0, 1), id_of(1, 2), id_of(2, 3), id_of(4, 5), id_of(5, 6), id_of(7, 8)});
  CHECK(f.component_count() == 3);
  CHECK(f.component_sizes() == std::vector<int>{4, 3, 2});
  CHECK(moon_count(9, f) == Int(9) * (4 * 3 * 2));  // 9^(3-2) * 4*3*2 = 216

  CHECK_THROWS(Forest(k9, {id_of(0, 1), id_of(1, 2), id_of(0, 2)}));
  // The same forest does not fit in a smaller complete graph.
  CHECK_THROWS(moon_count(5, f));
}

TEST_CASE("forest tree-extension counts match filtered enumeration") {
  std::mt19937_64 rng(303);
  for (int n = 4; n <= 6; ++n) {
    MultiGraph g = MultiGraph::complete(n);
    auto trees = enumerate_spanning_trees(g);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> ids = oracle::random_forest_edges(rng, g);
      Forest f(g, ids);
      CHECK(moon_count(n, f) == Int(oracle::count_containing(trees, ids)));
      // Same answer through the contraction route.
      CHECK(moon_count(n, f) == trees_containing(g, ids));
    }
  }
}
