#pragma once

#include <string>
#include <vector>

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Undirected edge with a stable integer id.  Endpoints are normalized u < v;
// self-loops are rejected (they can never sit inside a spanning tree).
// Parallel edges are distinct edges sharing endpoints.
struct Edge {
  int id;
  int u, v;
  Edge(int id, int a, int b);  // normalizes endpoint order, rejects a == b
  bool operator==(const Edge&) const = default;
};

// Finite undirected multigraph on vertices 0..vertex_count-1.  Edge ids stay
// stable under contraction, so a contracted graph may carry non-contiguous
// ids; edges() is always sorted by id.
class MultiGraph {
 public:
  // Edges get ids 0..E-1 in input order; endpoints are normalized.
  MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& pairs);
  // Internal/contraction constructor: explicit edges, must be id-sorted.
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  static MultiGraph complete(int n);
  // X vertices 0..m-1, Y vertices m..m+n-1; edge (x_i, y_j) has id i*n + j.
  static MultiGraph complete_bipartite(int m, int n);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_by_id(int id) const;  // throws on unknown id
  bool has_edge_id(int id) const;
  bool is_connected() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;  // sorted by id
};

// Merges the endpoint classes of the given edges, drops the contracted edges
// and any resulting self-loops, keeps surviving ids.  Vertex classes are
// relabeled 0..k-1 in increasing order of their smallest original member.
// Throws if the edge set contains a cycle (e.g. both edges of a parallel
// pair) or an unknown/duplicate id.
MultiGraph contract(const MultiGraph& g, const std::vector<int>& edge_ids);

// Combinatorial Laplacian: degree matrix minus (multi-)adjacency matrix.
ExactMatrix laplacian(const MultiGraph& g);

// Spanning tree count via any Laplacian cofactor (they all agree).
Int tree_count_cofactor(const MultiGraph& g);

inline constexpr int kDefaultEdgeCap = 24;
// Resolves KIRCHHOFF_EDGE_CAP from the environment, else kDefaultEdgeCap.
int edge_cap_from_env();

// All spanning trees as sorted edge-id vectors, in depth-first
// include-edge-first order over the id-sorted edge list (with a connectivity
// prune on every skip).  Deterministic.  Throws if the graph is disconnected
// or has more than `edge_cap` edges.
std::vector<std::vector<int>> enumerate_spanning_trees(const MultiGraph& g,
                                                       int edge_cap = kDefaultEdgeCap);

// Number of spanning trees containing every listed edge, by contracting the
// listed edges and counting via cofactor.  Throws if the edges contain a
// cycle.  Empty list = plain tree count.
Int trees_containing(const MultiGraph& g, const std::vector<int>& edge_ids);

// An acyclic edge subset of a host graph, with component bookkeeping over
// all host vertices (isolated vertices count as singleton components).
class Forest {
 public:
  Forest(const MultiGraph& host, std::vector<int> edge_ids);  // throws on cycle

  const MultiGraph& host() const { return *host_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }
  int component_count() const { return static_cast<int>(component_sizes_.size()); }
  const std::vector<int>& component_sizes() const { return component_sizes_; }

 private:
  const MultiGraph* host_;
  std::vector<int> edge_ids_;          // sorted
  std::vector<int> component_sizes_;   // descending
};

// Count of spanning trees of the complete graph on n vertices containing the
// forest f: n^(k-2) * prod of component sizes, where k is the number of
// components of f viewed inside that complete graph.  Exact for every k >= 1
// (k = 1 means f is already spanning, giving 1).  Throws if f uses a vertex
// outside 0..n-1.
Int moon_count(int n, const Forest& f);

}  // namespace kirchhoff
