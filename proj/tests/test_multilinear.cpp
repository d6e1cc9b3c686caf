#include <doctest.h>

#include <random>

#include "kirchhoff/multilinear.hpp"
#include "oracle.hpp"

using namespace kirchhoff;
namespace oracle = kirchhoff::testing;

namespace {

std::vector<Rat> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rat> p(static_cast<size_t>(n));
  for (auto& x : p) {
    x = Rat(oracle::test_draw(rng, 1, 9), oracle::test_draw(rng, 1, 4));
    x.canonicalize();
  }
  return p;
}

}  // namespace

TEST_CASE("spanning-tree polynomial of the triangle") {
  MultilinearPoly f = kirchhoff_polynomial(MultiGraph::complete(3));
  CHECK(f.universe() == std::vector<int>{0, 1, 2});
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  REQUIRE(f.terms().size() == 3);
  // Terms sorted by mask: {0,1} -> 3, {0,2} -> 5, {1,2} -> 6.
  CHECK(f.serialize() == "1: e_0 e_1\n1: e_0 e_2\n1: e_1 e_2\n");
  CHECK(f.evaluate({Rat(1), Rat(1), Rat(1)}) == 3);
  CHECK(f.evaluate({Rat(2), Rat(3), Rat(5)}) == 2 * 3 + 2 * 5 + 3 * 5);
}

TEST_CASE("evaluation at all-ones is the tree count") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 6; ++trial) {
    MultiGraph g = oracle::random_connected_graph(rng, 6, 12);
    MultilinearPoly f = kirchhoff_polynomial(g);
    std::vector<Rat> ones(static_cast<size_t>(g.edge_count()), Rat(1));
    CHECK(f.evaluate(ones) == Rat(tree_count_cofactor(g)));
    CHECK(f.degree() == g.vertex_count() - 1);
    CHECK(f.is_homogeneous());
  }
}

TEST_CASE("homogeneity under scaling") {
  std::mt19937_64 rng(505);
  MultiGraph g = MultiGraph::complete_bipartite(2, 3);
  MultilinearPoly f = kirchhoff_polynomial(g);
  std::vector<Rat> p = random_point(rng, g.edge_count());
  Rat t(7, 3);
  std::vector<Rat> scaled = p;
  for (auto& x : scaled) x *= t;
  CHECK(f.evaluate(scaled) == rat_pow(t, g.vertex_count() - 1) * f.evaluate(p));
}

TEST_CASE("differential operators on squarefree terms") {
  MultilinearPoly f = kirchhoff_polynomial(MultiGraph::complete(3));
  // d/de_0 (e0e1 + e0e2 + e1e2) = e1 + e2.
  MultilinearPoly df = apply_operator(f, DiffOperator{{1, 0, 0}});
  MultilinearPoly expected({0, 1, 2});
  expected.add_term(0b010, 1);
  expected.add_term(0b100, 1);
  CHECK(df == expected);

  // Any square kills a multilinear polynomial.
  CHECK(apply_operator(f, DiffOperator{{2, 0, 0}}).is_zero());
  // Mixed partials commute.
  MultilinearPoly d01 = apply_operator(apply_operator(f, DiffOperator{{1, 0, 0}}),
                                       DiffOperator{{0, 1, 0}});
  MultilinearPoly d10 = apply_operator(apply_operator(f, DiffOperator{{0, 1, 0}}),
                                       DiffOperator{{1, 0, 0}});
  CHECK(d01 == d10);
  CHECK(d01 == apply_operator(f, DiffOperator{{1, 1, 0}}));
  CHECK_THROWS(apply_operator(f, DiffOperator{{1, 0}}));
}

TEST_CASE("second-derivative matrix: triangle at all-ones") {
  MultilinearPoly f = kirchhoff_polynomial(MultiGraph::complete(3));
  ExactMatrix h = hessian_at(f, {Rat(1), Rat(1), Rat(1)});
  ExactMatrix expected = ExactMatrix::all_ones(3, 3) - ExactMatrix::identity(3);
  CHECK(h == expected);
  CHECK(h == graph_hessian_at_ones(MultiGraph::complete(3)));
}

TEST_CASE("second-derivative matrix agrees with iterated operators at random points") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    MultiGraph g = oracle::random_connected_graph(rng, 6, 10);
    MultilinearPoly f = kirchhoff_polynomial(g);
    std::vector<Rat> p = random_point(rng, g.edge_count());
    ExactMatrix h = hessian_at(f, p);
    CHECK(h.is_symmetric());
    for (int i = 0; i < g.edge_count(); ++i) {
      CHECK(h.at(i, i) == 0);  // squarefree: no repeated factor survives
      for (int j = 0; j < g.edge_count(); ++j) {
        DiffOperator op{std::vector<int>(static_cast<size_t>(g.edge_count()), 0)};
        op.exponents[static_cast<size_t>(i)] += 1;
        op.exponents[static_cast<size_t>(j)] += 1;
        CHECK(h.at(i, j) == apply_operator(f, op).evaluate(p));
      }
    }
  }
}

TEST_CASE("contraction route to the all-ones matrix handles parallel edges") {
  // Contracting two pendant edges of the complete bipartite (2,3) graph
  // leaves a multigraph with a parallel pair (ids 3 and 4).
  MultiGraph g = contract(MultiGraph::complete_bipartite(2, 3), {0, 1});
  ExactMatrix h = graph_hessian_at_ones(g);
  MultilinearPoly f = kirchhoff_polynomial(g);
  std::vector<Rat> ones(static_cast<size_t>(g.edge_count()), Rat(1));
  CHECK(h == hessian_at(f, ones));
  // Universe positions of ids 3 and 4 are 1 and 2; no tree holds both.
  CHECK(h.at(1, 2) == 0);
  CHECK(h.at(0, 1) != 0);
}

TEST_CASE("term accumulation and universe guards") {
  MultilinearPoly p({2, 5, 9});
  p.add_term(0b011, 4);
  p.add_term(0b011, -4);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  CHECK_THROWS(p.add_term(0b1000, 1));
  CHECK_THROWS(MultilinearPoly({3, 1}));            // not increasing
  CHECK(p.position_of(5) == 1);
  CHECK_THROWS(p.position_of(4));
  CHECK_THROWS(p.evaluate({Rat(1)}));
}
