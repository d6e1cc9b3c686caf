#pragma once

// Test-side oracles: deliberately independent implementations used to
// cross-check the library.  Nothing here calls the production enumeration,
// cofactor, or reduction code paths.

#include <random>
#include <vector>

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/multigraph.hpp"

namespace kirchhoff::testing {

// All spanning trees by scanning every edge subset of size V-1 (union-find
// acyclicity/spanning test).  Each tree is a sorted id vector; the list is
// sorted.  Only sensible for small edge counts.
std::vector<std::vector<int>> brute_force_spanning_trees(const MultiGraph& g);

// How many of the listed trees contain all the given edge ids.
long count_containing(const std::vector<std::vector<int>>& trees, const std::vector<int>& ids);

// Rank over the field with p elements (p prime, entries' denominators must be
// invertible mod p).  A cheap independent check of the rational rank.
int rank_mod_p(const ExactMatrix& m, long p = 1000003);

// Deterministic inclusive draw used by the seeded test generators.
long test_draw(std::mt19937_64& rng, long lo, long hi);

// Random connected multigraph: a random spanning tree plus random extra edges
// (parallels allowed), at most max_edges edges total.
MultiGraph random_connected_graph(std::mt19937_64& rng, int max_vertices = 8, int max_edges = 16);

// Random acyclic edge subset of the host graph.
std::vector<int> random_forest_edges(std::mt19937_64& rng, const MultiGraph& host);

// For the rotation-orbit block form of the complete graph on n vertices:
// maps each orbit position to the index of its edge in complete(n).edges().
std::vector<int> orbit_to_edge_index(int n);

}  // namespace kirchhoff::testing
