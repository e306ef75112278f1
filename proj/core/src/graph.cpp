#include "hamlab/graph.hpp"

#include <stdexcept>
#include <string>

namespace hamlab {

std::vector<int> vs_elements(VertexSet s) {
  std::vector<int> out;
  out.reserve(vs_size(s));
  while (s) {
    int v = __builtin_ctzll(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in [0, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = vs_full(n) & ~vs_bit(v);
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += vs_size(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge rejected");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  adj_[u] |= vs_bit(v);
  adj_[v] |= vs_bit(u);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  Graph out(ng + nh);
  for (int v = 0; v < ng; ++v)
    for (int u : vs_elements(g.neighbors(v)))
      if (u > v) out.add_edge(v, u);
  for (int v = 0; v < nh; ++v)
    for (int u : vs_elements(h.neighbors(v)))
      if (u > v) out.add_edge(ng + v, ng + u);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  Graph out = disjoint_union(g, h);
  for (int v = 0; v < ng; ++v)
    for (int u = 0; u < nh; ++u) out.add_edge(v, ng + u);
  return out;
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph out(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet members) {
  if (members & ~g.vertices())
    throw std::invalid_argument("vertex set member out of range");
  InducedSubgraph out;
  out.vertices = vs_elements(members);
  int m = static_cast<int>(out.vertices.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.vertices[i], out.vertices[j])) out.graph.add_edge(i, j);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  Graph out(n);
  for (int v = 0; v < n; ++v)
    for (int u : vs_elements(g.neighbors(v)))
      if (u > v) out.add_edge(perm[v], perm[u]);
  return out;
}

int components(const Graph& g) {
  VertexSet todo = g.vertices();
  int count = 0;
  while (todo) {
    ++count;
    VertexSet comp = vs_bit(__builtin_ctzll(todo));
    for (;;) {
      VertexSet grown = comp;
      VertexSet frontier = comp;
      while (frontier) {
        int v = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        grown |= g.neighbors(v) & todo;
      }
      if (grown == comp) break;
      comp = grown;
    }
    todo &= ~comp;
  }
  return count;
}

}  // namespace hamlab
