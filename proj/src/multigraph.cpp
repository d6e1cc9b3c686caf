#include "kirchhoff/multigraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kirchhoff/linalg.hpp"

namespace kirchhoff {

namespace {

// Union-find keeping the smallest member as representative, so merged vertex
// classes have deterministic names.
struct MinUnionFind {
  std::vector<int> parent;
  explicit MinUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  }
  // Returns false if already in the same class.
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    if (a < b) parent[b] = a; else parent[a] = b;
    return true;
  }
};

void check_endpoint(int v, int vertex_count) {
  if (v < 0 || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
}

}  // namespace

Edge::Edge(int id, int a, int b) : id(id), u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("Edge: self-loop rejected");
}

MultiGraph::MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& pairs)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("MultiGraph: negative vertex count");
  edges_.reserve(pairs.size());
  int id = 0;
  for (auto [u, v] : pairs) {
    check_endpoint(u, vertex_count);
    check_endpoint(v, vertex_count);
    if (u == v) throw std::invalid_argument("MultiGraph: self-loop rejected");
    edges_.push_back(Edge{id++, std::min(u, v), std::max(u, v)});
  }
}

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    check_endpoint(e.u, vertex_count_);
    check_endpoint(e.v, vertex_count_);
    if (i > 0 && edges_[i - 1].id >= e.id)
      throw std::invalid_argument("MultiGraph: edge ids not strictly increasing");
  }
}

MultiGraph MultiGraph::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return MultiGraph(n, pairs);
}

MultiGraph MultiGraph::complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: need m, n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) pairs.emplace_back(i, m + j);
  return MultiGraph(m + n, pairs);
}

const Edge& MultiGraph::edge_by_id(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) throw std::out_of_range("edge_by_id: unknown id");
  return *it;
}

bool MultiGraph::has_edge_id(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int key) { return e.id < key; });
  return it != edges_.end() && it->id == id;
}

bool MultiGraph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  MinUnionFind uf(vertex_count_);
  int components = vertex_count_;
  for (const Edge& e : edges_)
    if (uf.unite(e.u, e.v)) --components;
  return components == 1;
}

MultiGraph contract(const MultiGraph& g, const std::vector<int>& edge_ids) {
  std::set<int> ids(edge_ids.begin(), edge_ids.end());
  if (ids.size() != edge_ids.size()) throw std::invalid_argument("contract: duplicate edge id");
  MinUnionFind uf(g.vertex_count());
  for (int id : ids) {
    const Edge& e = g.edge_by_id(id);
    if (!uf.unite(e.u, e.v)) throw std::invalid_argument("contract: edge set contains a cycle");
  }
  // New labels: classes ordered by smallest original member.
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) label[v] = next++;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (ids.count(e.id)) continue;
    int u = label[uf.find(e.u)], v = label[uf.find(e.v)];
    if (u == v) continue;  // self-loop after merging: dropped
    kept.push_back(Edge{e.id, std::min(u, v), std::max(u, v)});
  }
  return MultiGraph(next, std::move(kept));
}

ExactMatrix laplacian(const MultiGraph& g) {
  ExactMatrix l(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    l.at(e.u, e.u) += 1;
    l.at(e.v, e.v) += 1;
    l.at(e.u, e.v) -= 1;
    l.at(e.v, e.u) -= 1;
  }
  return l;
}

Int tree_count_cofactor(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  if (g.vertex_count() == 1) return 1;
  Rat c = cofactor(laplacian(g), 0, 0);
  if (c.get_den() != 1 || c < 0) throw std::logic_error("tree_count_cofactor: non-integral count");
  return Int(c.get_num());
}

int edge_cap_from_env() {
  if (const char* s = std::getenv("KIRCHHOFF_EDGE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultEdgeCap;
}

std::vector<std::vector<int>> enumerate_spanning_trees(const MultiGraph& g, int edge_cap) {
  if (g.edge_count() > edge_cap)
    throw std::runtime_error("enumerate_spanning_trees: edge cap exceeded");
  if (!g.is_connected())
    throw std::runtime_error("enumerate_spanning_trees: graph is disconnected");
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::vector<int>> trees;
  if (n <= 1) { trees.push_back({}); return trees; }

  std::vector<int> chosen;
  chosen.reserve(n - 1);

  // Depth-first over edges in id order, include-first.  The union-find of the
  // chosen edges is threaded down by value; a skip is pruned when the chosen
  // edges plus the untouched suffix can no longer connect.
  auto step = [&](auto&& self, size_t next, const MinUnionFind& uf, int components) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      trees.push_back(chosen);
      return;
    }
    if (next == edges.size()) return;
    const Edge& e = edges[next];
    MinUnionFind with = uf;
    if (with.unite(e.u, e.v)) {
      chosen.push_back(e.id);
      self(self, next + 1, with, components - 1);
      chosen.pop_back();
    }
    MinUnionFind without = uf;
    int reach = components;
    for (size_t i = next + 1; i < edges.size() && reach > 1; ++i)
      if (without.unite(edges[i].u, edges[i].v)) --reach;
    if (reach == 1) self(self, next + 1, uf, components);
  };
  step(step, 0, MinUnionFind(n), n);
  return trees;
}

Int trees_containing(const MultiGraph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return tree_count_cofactor(g);
  return tree_count_cofactor(contract(g, edge_ids));
}

Forest::Forest(const MultiGraph& host, std::vector<int> edge_ids)
    : host_(&host), edge_ids_(std::move(edge_ids)) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
  if (std::adjacent_find(edge_ids_.begin(), edge_ids_.end()) != edge_ids_.end())
    throw std::invalid_argument("Forest: duplicate edge id");
  MinUnionFind uf(host.vertex_count());
  for (int id : edge_ids_) {
    const Edge& e = host.edge_by_id(id);
    if (!uf.unite(e.u, e.v)) throw std::invalid_argument("Forest: edge set contains a cycle");
  }
  std::vector<int> size(host.vertex_count(), 0);
  for (int v = 0; v < host.vertex_count(); ++v) ++size[uf.find(v)];
  for (int v = 0; v < host.vertex_count(); ++v)
    if (size[v] > 0) component_sizes_.push_back(size[v]);
  std::sort(component_sizes_.rbegin(), component_sizes_.rend());
}

Int moon_count(int n, const Forest& f) {
  if (n < 1) throw std::invalid_argument("moon_count: need n >= 1");
  for (int id : f.edge_ids()) {
    const Edge& e = f.host().edge_by_id(id);
    if (e.v >= n) throw std::invalid_argument("moon_count: forest does not fit in the complete graph");
  }
  // Components inside the complete graph on n vertices: the forest's
  // components plus a singleton for every host vertex >= n... the host may be
  // smaller than n too, adding singletons below.
  std::vector<int> sizes = f.component_sizes();
  int covered = f.host().vertex_count();
  for (int v = covered; v < n; ++v) sizes.push_back(1);
  if (covered > n) {
    // Host vertices beyond n-1 are only legal if they are isolated in f
    // (checked above via edge endpoints); drop their singleton components.
    int drop = covered - n;
    for (auto it = sizes.begin(); it != sizes.end() && drop > 0;) {
      if (*it == 1) { it = sizes.erase(it); --drop; } else ++it;
    }
    if (drop > 0) throw std::invalid_argument("moon_count: forest does not fit in the complete graph");
  }
  int k = static_cast<int>(sizes.size());
  Int prod = 1;
  for (int s : sizes) prod *= s;
  if (k >= 2) return int_pow(Int(n), static_cast<unsigned long>(k - 2)) * prod;
  // k = 1: the forest is already a spanning tree; exactly one tree contains it.
  return 1;
}

}  // namespace kirchhoff
