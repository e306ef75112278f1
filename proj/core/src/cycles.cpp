#include "hamlab/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

// --- anchored subset DP -----------------------------------------------
//
// Cycles are enumerated by their minimum vertex a. The window holds the
// vertices above a; for each window subset S, ends[S] is the set of window
// vertices v reachable from a by a simple path spanning exactly S ∪ {a}.
// A cycle on S ∪ {a} exists iff some endpoint in ends[S] sees a.

struct AnchorWindow {
  int m = 0;                       // window size
  std::uint32_t anchor_adj = 0;    // window vertices adjacent to the anchor
  std::vector<std::uint32_t> adj;  // window-internal adjacency rows

  AnchorWindow(const Graph& g, int a) {
    int n = g.order();
    m = n - a - 1;
    adj.resize(m);
    anchor_adj = static_cast<std::uint32_t>(g.neighbors(a) >> (a + 1));
    for (int i = 0; i < m; ++i)
      adj[i] = static_cast<std::uint32_t>(g.neighbors(a + 1 + i) >> (a + 1));
  }
};

void run_anchor_dp(const AnchorWindow& w, std::vector<std::uint32_t>& ends) {
  int m = w.m;
  ends.assign(std::size_t{1} << m, 0);
  std::uint32_t seeds = w.anchor_adj;
  while (seeds) {
    int i = __builtin_ctz(seeds);
    seeds &= seeds - 1;
    ends[std::uint32_t{1} << i] = std::uint32_t{1} << i;
  }
  const std::uint32_t full = (m >= 32) ? ~0u : (std::uint32_t{1} << m) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t e = ends[s];
    if (!e) continue;
    std::uint32_t avail = full & ~s;
    while (avail) {
      int i = __builtin_ctz(avail);
      avail &= avail - 1;
      if (e & w.adj[i]) ends[s | (std::uint32_t{1} << i)] |= std::uint32_t{1}
                                                             << i;
    }
  }
}

// Collects longest-cycle vertex sets (real cycles only, length >= 3).
// With collect_all=false only one witness set is kept.
struct CycleDpResult {
  int length = 0;  // 0 when the graph has no real cycle
  std::vector<VertexSet> sets;
  bool truncated = false;
};

CycleDpResult longest_cycle_dp(const Graph& g, std::size_t cap,
                               bool collect_all) {
  int n = g.order();
  CycleDpResult out;
  std::vector<std::uint32_t> ends;
  for (int a = 0; a + 2 < n; ++a) {
    int window = n - a;  // largest cycle with minimum vertex a
    if (window < out.length || (!collect_all && window == out.length)) break;
    AnchorWindow w(g, a);
    run_anchor_dp(w, ends);
    const std::uint32_t full =
        (w.m >= 32) ? ~0u : (std::uint32_t{1} << w.m) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
      std::uint32_t e = ends[s];
      if (!e || !(e & w.anchor_adj)) continue;
      int len = __builtin_popcount(s) + 1;
      if (len < 3 || len < out.length) continue;
      if (len > out.length) {
        out.length = len;
        out.sets.clear();
        out.truncated = false;
      } else if (!collect_all) {
        continue;
      }
      if (!out.sets.empty() && !collect_all) continue;
      VertexSet vs = vs_bit(a);
      std::uint32_t bits = s;
      while (bits) {
        int i = __builtin_ctz(bits);
        bits &= bits - 1;
        vs |= vs_bit(a + 1 + i);
      }
      if (out.sets.size() >= cap) {
        out.truncated = true;
      } else {
        out.sets.push_back(vs);
      }
    }
  }
  return out;
}

// Reachable vertices from v using only `allowed` (v need not be allowed).
VertexSet reachable_from(const Graph& g, int v, VertexSet allowed) {
  VertexSet seen = vs_bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int x = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(x) & allowed & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen;
}

struct CycleBnb {
  const Graph& g;
  int anchor = 0;
  int best = 0;
  std::vector<int> path;
  std::vector<int> best_path;

  void dfs(int v, VertexSet visited) {
    int len = static_cast<int>(path.size());
    if (len >= 3 && g.adjacent(v, anchor) && len > best) {
      best = len;
      best_path = path;
    }
    VertexSet allowed = ~visited & ~(vs_full(anchor + 1)) & g.vertices();
    VertexSet reach = reachable_from(g, v, allowed);
    if (len + vs_size(reach & ~vs_bit(v)) <= best) return;
    // Any longer cycle must come back to the anchor through new vertices.
    if (!(reach & ~vs_bit(v) & g.neighbors(anchor))) return;
    VertexSet cand = g.neighbors(v) & allowed;
    while (cand) {
      int w = __builtin_ctzll(cand);
      cand &= cand - 1;
      path.push_back(w);
      dfs(w, visited | vs_bit(w));
      path.pop_back();
    }
  }
};

// Exact longest real cycle for orders beyond the DP limit; returns length
// and a witness sequence (empty when no real cycle exists).
std::pair<int, std::vector<int>> longest_cycle_bnb(const Graph& g) {
  int n = g.order();
  CycleBnb search{g};
  for (int a = 0; a + 2 < n; ++a) {
    if (n - a <= search.best) break;
    search.anchor = a;
    search.path = {a};
    search.dfs(a, vs_bit(a));
  }
  return {search.best, search.best_path};
}

int longest_path_dp(const Graph& g) {
  int n = g.order();
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  std::vector<std::uint32_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  int best = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t e = ends[s];
    if (!e) continue;
    best = std::max(best, __builtin_popcount(s) - 1);
    std::uint32_t avail = full & ~s;
    while (avail) {
      int i = __builtin_ctz(avail);
      avail &= avail - 1;
      if (e & adj[i]) ends[s | (std::uint32_t{1} << i)] |= std::uint32_t{1} << i;
    }
  }
  return best;
}

struct PathBnb {
  const Graph& g;
  int best = 0;

  void dfs(int v, VertexSet visited) {
    best = std::max(best, vs_size(visited) - 1);
    VertexSet reach = reachable_from(g, v, ~visited & g.vertices());
    if (vs_size(visited) - 1 + vs_size(reach & ~vs_bit(v)) <= best) return;
    VertexSet cand = g.neighbors(v) & ~visited;
    while (cand) {
      int w = __builtin_ctzll(cand);
      cand &= cand - 1;
      dfs(w, visited | vs_bit(w));
    }
  }
};

// Spanning cycle sequence of a graph known to be hamiltonian (order >= 3).
std::vector<int> extract_spanning_cycle(const Graph& h) {
  int n = h.order();
  AnchorWindow w(h, 0);
  std::vector<std::uint32_t> ends;
  run_anchor_dp(w, ends);
  const std::uint32_t full = (std::uint32_t{1} << w.m) - 1;
  std::uint32_t closing = ends[full] & w.anchor_adj;
  if (!closing) throw std::logic_error("spanning cycle extraction failed");
  std::vector<int> seq;
  std::uint32_t s = full;
  std::uint32_t e = static_cast<std::uint32_t>(1) << __builtin_ctz(closing);
  while (s) {
    int i = __builtin_ctz(e);
    seq.push_back(i + 1);
    s &= ~e;
    if (!s) break;
    std::uint32_t prev = ends[s] & w.adj[i];
    if (!prev) throw std::logic_error("spanning cycle extraction failed");
    e = static_cast<std::uint32_t>(1) << __builtin_ctz(prev);
  }
  seq.push_back(0);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

int degenerate_circumference(const Graph& g) { return g.size() > 0 ? 2 : 1; }

}  // namespace

VertexSet CycleCertificate::vertex_set() const {
  VertexSet s = 0;
  for (int v : vertices_) s |= vs_bit(v);
  return s;
}

bool CycleCertificate::valid_in(const Graph& g) const {
  int len = length();
  if (len == 0) return false;
  VertexSet seen = 0;
  for (int v : vertices_) {
    if (v < 0 || v >= g.order() || vs_test(seen, v)) return false;
    seen |= vs_bit(v);
  }
  if (len == 1) return true;
  if (len == 2) return g.adjacent(vertices_[0], vertices_[1]);
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(vertices_[i], vertices_[(i + 1) % len])) return false;
  return true;
}

int circumference(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("circumference of the empty graph");
  int real = 0;
  if (n <= kMaxCycleDpOrder) {
    real = longest_cycle_dp(g, 1, false).length;
  } else {
    real = longest_cycle_bnb(g).first;
  }
  return std::max(real, degenerate_circumference(g));
}

CycleCertificate longest_cycle(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("longest_cycle of the empty graph");
  if (n <= kMaxCycleDpOrder) {
    CycleDpResult r = longest_cycle_dp(g, 1, false);
    if (r.length >= 3) {
      InducedSubgraph sub = induced_subgraph(g, r.sets.front());
      std::vector<int> seq = extract_spanning_cycle(sub.graph);
      for (int& v : seq) v = sub.vertices[v];
      return CycleCertificate(std::move(seq));
    }
  } else {
    auto [len, seq] = longest_cycle_bnb(g);
    if (len >= 3) return CycleCertificate(std::move(seq));
  }
  // No real cycle: fall back to an edge or a vertex.
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v))
      return CycleCertificate({v, __builtin_ctzll(g.neighbors(v))});
  return CycleCertificate({0});
}

bool is_hamiltonian(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("is_hamiltonian of the empty graph");
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  if (n > kMaxCycleDpOrder) return longest_cycle_bnb(g).first == n;
  AnchorWindow w(g, 0);
  std::vector<std::uint32_t> ends;
  run_anchor_dp(w, ends);
  const std::uint32_t full = (std::uint32_t{1} << w.m) - 1;
  return (ends[full] & w.anchor_adj) != 0;
}

int longest_path_edges(const Graph& g) {
  int n = g.order();
  if (n == 0) return -1;
  if (g.size() == 0) return 0;
  if (n <= kMaxPathDpOrder) return longest_path_dp(g);
  PathBnb search{g};
  for (int v = 0; v < n; ++v) search.dfs(v, vs_bit(v));
  return search.best;
}

LongestCycleSets all_longest_cycle_sets(const Graph& g, std::size_t cap) {
  int n = g.order();
  if (n == 0)
    throw std::invalid_argument("cycle enumeration of the empty graph");
  if (n > kMaxCycleDpOrder)
    throw UndecidedError("longest-cycle enumeration limited to order <= " +
                         std::to_string(kMaxCycleDpOrder));
  if (cap < 1) throw std::invalid_argument("cycle set cap must be >= 1");
  CycleDpResult r = longest_cycle_dp(g, cap, true);
  LongestCycleSets out;
  if (r.length >= 3) {
    out.length = r.length;
    out.sets = std::move(r.sets);
    out.truncated = r.truncated;
    return out;
  }
  // Degenerate longest cycles: all edges, or all single vertices.
  out.length = degenerate_circumference(g);
  if (out.length == 2) {
    for (int v = 0; v < n && !out.truncated; ++v)
      for (int u : vs_elements(g.neighbors(v) & ~vs_full(v + 1))) {
        if (out.sets.size() >= cap) {
          out.truncated = true;
          break;
        }
        out.sets.push_back(vs_bit(v) | vs_bit(u));
      }
  } else {
    for (int v = 0; v < n; ++v) {
      if (out.sets.size() >= cap) {
        out.truncated = true;
        break;
      }
      out.sets.push_back(vs_bit(v));
    }
  }
  return out;
}

LongestCycles all_longest_cycles(const Graph& g, std::size_t cap) {
  LongestCycleSets sets = all_longest_cycle_sets(g, cap);
  LongestCycles out;
  out.truncated = sets.truncated;
  out.cycles.reserve(sets.sets.size());
  for (VertexSet s : sets.sets) {
    std::vector<int> members = vs_elements(s);
    if (sets.length <= 2) {
      out.cycles.emplace_back(std::move(members));
      continue;
    }
    InducedSubgraph sub = induced_subgraph(g, s);
    std::vector<int> seq = extract_spanning_cycle(sub.graph);
    for (int& v : seq) v = sub.vertices[v];
    out.cycles.emplace_back(std::move(seq));
  }
  return out;
}

ResidualParams residual_params_for_set(const Graph& g, VertexSet cycle_set) {
  VertexSet rest = g.vertices() & ~cycle_set;
  if (!rest) return {-1, 0};
  InducedSubgraph sub = induced_subgraph(g, rest);
  return {longest_path_edges(sub.graph), circumference(sub.graph)};
}

ResidualParams residual_params(const Graph& g, const CycleCertificate& c) {
  if (!c.valid_in(g))
    throw std::invalid_argument("certificate is not a cycle of the graph");
  return residual_params_for_set(g, c.vertex_set());
}

bool is_dominating(const Graph& g, const CycleCertificate& c) {
  if (!c.valid_in(g))
    throw std::invalid_argument("certificate is not a cycle of the graph");
  VertexSet rest = g.vertices() & ~c.vertex_set();
  VertexSet scan = rest;
  while (scan) {
    int v = __builtin_ctzll(scan);
    scan &= scan - 1;
    if (g.neighbors(v) & rest) return false;
  }
  return true;
}

bool is_cd_cycle(const Graph& g, const CycleCertificate& c, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  return residual_is_cd(residual_params(g, c), lambda);
}

bool is_pd_cycle(const Graph& g, const CycleCertificate& c, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  return residual_is_pd(residual_params(g, c), lambda);
}

}  // namespace hamlab
