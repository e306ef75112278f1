#include "hamlab/invariants.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hamlab {

namespace {

bool is_complete(const Graph& g) {
  int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

int components_of_mask(const Graph& g, VertexSet sub) {
  VertexSet todo = sub;
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

// Unit-capacity max-flow on the split-vertex network, counting internally
// disjoint s-t paths. Aborts once the flow reaches `limit`.
int disjoint_path_count(const Graph& g, int s, int t, int limit) {
  int n = g.order();
  int nodes = 2 * n;  // v_in = 2v, v_out = 2v+1
  const int big = n + 1;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
  for (int v = 0; v < n; ++v)
    for (int u : vs_elements(g.neighbors(v))) {
      cap[2 * v + 1][2 * u] = big;
      cap[2 * u + 1][2 * v] = big;
    }
  int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (flow < limit) {
    std::vector<int> prev(nodes, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[sink] < 0) break;
    for (int y = sink; y != source; y = prev[y]) {
      cap[prev[y]][y] -= 1;
      cap[y][prev[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

// Greedy clique cover of `cand`; the number of cliques bounds the
// independence number of the induced subgraph from above.
int clique_cover_bound(const Graph& g, VertexSet cand) {
  int cliques = 0;
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= ~vs_bit(v);
    ++cliques;
    VertexSet common = g.neighbors(v) & cand;
    while (common) {
      int u = __builtin_ctzll(common);
      cand &= ~vs_bit(u);
      common &= g.neighbors(u) & ~vs_bit(u);
    }
  }
  return cliques;
}

struct AlphaSearch {
  const Graph& g;
  int best = 0;

  void run(VertexSet cand, int cur) {
    if (cur > best) best = cur;
    if (!cand) return;
    if (cur + clique_cover_bound(g, cand) <= best) return;
    int pick = -1, pick_deg = -1;
    VertexSet scan = cand;
    while (scan) {
      int v = __builtin_ctzll(scan);
      scan &= scan - 1;
      int d = vs_size(g.neighbors(v) & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    run(cand & ~(g.neighbors(pick) | vs_bit(pick)), cur + 1);
    run(cand & ~vs_bit(pick), cur);
  }
};

}  // namespace

int min_degree(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("min_degree of the empty graph");
  int d = n;
  for (int v = 0; v < n; ++v) d = std::min(d, g.degree(v));
  return d;
}

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        best = std::min(best, disjoint_path_count(g, u, v, best));
  return best;
}

int independence_number(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("independence number of the empty graph");
  AlphaSearch search{g};
  search.run(g.vertices(), 0);
  return search.best;
}

Toughness toughness(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("toughness of the empty graph");
  if (n > kMaxToughnessOrder)
    throw std::invalid_argument("exact toughness limited to order <= " +
                                std::to_string(kMaxToughnessOrder));
  if (is_complete(g)) return Toughness::infinite();
  if (!is_connected(g)) return Toughness::finite(Rational(0));

  std::optional<Rational> best;
  for (int k = 1; k <= n - 2; ++k) {
    // Even with every remaining vertex isolated the ratio is k/(n-k),
    // which grows with k; once it passes the incumbent we are done.
    if (best && Rational(k, n - k) > *best) break;
    VertexSet sub = vs_full(k);
    VertexSet end = vs_full(k) << (n - k);
    for (;;) {
      int comps = components_of_mask(g, g.vertices() & ~sub);
      if (comps > 1) {
        Rational r(k, comps);
        if (!best || r < *best) best = r;
      }
      if (sub == end) break;
      // Gosper's hack: next k-subset in lexicographic mask order.
      VertexSet c = sub & -sub;
      VertexSet r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  return Toughness::finite(*best);
}

bool is_t_tough(const Graph& g, const Rational& t) {
  return toughness(g).at_least(t);
}

InvariantRecord compute_invariants(const Graph& g) {
  InvariantRecord rec;
  rec.n = g.order();
  if (rec.n == 0) throw std::invalid_argument("invariants of the empty graph");
  rec.q = g.size();
  rec.min_degree = min_degree(g);
  rec.kappa = vertex_connectivity(g);
  rec.alpha = independence_number(g);
  rec.tau = toughness(g);
  rec.components = components(g);
  rec.connected = rec.components <= 1;
  return rec;
}

}  // namespace hamlab
