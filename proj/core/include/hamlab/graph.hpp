#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamlab {

/// Hard order cap. Adjacency rows are single 64-bit words and every exact
/// search in this library is exponential anyway, so 64 vertices is far
/// beyond what the solvers can digest.
constexpr int kMaxOrder = 64;

/// Subset of {0..n-1} as a bit mask.
using VertexSet = std::uint64_t;

inline int vs_size(VertexSet s) { return __builtin_popcountll(s); }
inline bool vs_test(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet vs_bit(int v) { return std::uint64_t{1} << v; }
inline VertexSet vs_full(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}
std::vector<int> vs_elements(VertexSet s);

/// Finite simple undirected graph on vertices 0..n-1. One bit row per
/// vertex; rows stay symmetric and irreflexive by construction. Graphs are
/// plain values: copy freely, never mutated by any algorithm in this
/// library, safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an explicit edge list; duplicate edges collapse.
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph empty_graph(int n);

  int order() const { return n_; }
  /// Number of edges.
  int size() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return vs_size(adj_[v]); }
  VertexSet vertices() const { return vs_full(n_); }

  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint copies of g and h plus every edge between them.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // new label -> original label
};

/// Subgraph induced by `members`, relabeled to 0..|members|-1 in ascending
/// label order. Throws if `members` leaves the vertex range.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet members);

/// New graph with vertex v renamed to perm[v]; perm must be a permutation
/// of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

int components(const Graph& g);
inline bool is_connected(const Graph& g) { return components(g) <= 1; }

}  // namespace hamlab
