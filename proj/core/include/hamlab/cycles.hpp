#pragma once

#include <cstddef>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Anchored subset DP handles orders up to this; past it the longest-cycle
/// search falls back to depth-first branch and bound (length only).
constexpr int kMaxCycleDpOrder = 24;
constexpr int kMaxPathDpOrder = 20;

/// Default cap on collected longest-cycle vertex sets per graph. Exceeding
/// it marks the result truncated; checkers that quantify over every longest
/// cycle must then report "undecided" instead of a verdict.
constexpr std::size_t kDefaultCycleSetCap = 1'000'000;

/// Vertex sequence witnessing a cycle. Degenerate lengths are legal and
/// used throughout: a single vertex is a 1-cycle, an edge a 2-cycle.
class CycleCertificate {
 public:
  CycleCertificate() = default;
  explicit CycleCertificate(std::vector<int> vertices)
      : vertices_(std::move(vertices)) {}

  int length() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  VertexSet vertex_set() const;
  bool valid_in(const Graph& g) const;

 private:
  std::vector<int> vertices_;
};

/// Length of a longest cycle, degenerate cycles included, so any vertex
/// gives at least 1 and any edge at least 2. Exact for every order; above
/// kMaxCycleDpOrder it switches to branch and bound.
int circumference(const Graph& g);

/// A longest cycle with its witness sequence.
CycleCertificate longest_cycle(const Graph& g);

/// circumference == n (K_1 and K_2 count as hamiltonian by the degenerate
/// cycle convention).
bool is_hamiltonian(const Graph& g);

/// Length of a longest simple path in edges; 0 for a nonempty edgeless
/// graph, -1 for the graph with no vertices.
int longest_path_edges(const Graph& g);

struct LongestCycleSets {
  int length = 0;
  std::vector<VertexSet> sets;  // distinct vertex sets of longest cycles
  bool truncated = false;
};

/// Every vertex set carrying a cycle of maximum length. Deduplication is
/// by vertex set, not by traversal order. Throws UndecidedError above
/// kMaxCycleDpOrder.
LongestCycleSets all_longest_cycle_sets(const Graph& g,
                                        std::size_t cap = kDefaultCycleSetCap);

struct LongestCycles {
  std::vector<CycleCertificate> cycles;
  bool truncated = false;
};

LongestCycles all_longest_cycles(const Graph& g,
                                 std::size_t cap = kDefaultCycleSetCap);

/// Parameters of the graph left after deleting a cycle's vertices:
/// longest path in edges (-1 when nothing remains) and longest cycle in
/// vertices under the degenerate convention (0 when nothing remains, so a
/// nonempty residual always gives at least 1 and a residual edge 2).
struct ResidualParams {
  int path_edges = -1;
  int cycle_order = 0;
};

ResidualParams residual_params(const Graph& g, const CycleCertificate& c);
ResidualParams residual_params_for_set(const Graph& g, VertexSet cycle_set);

/// A cycle dominates the graph when every edge has an endpoint on it,
/// i.e. the residual is edgeless.
bool is_dominating(const Graph& g, const CycleCertificate& c);

/// CD_lambda: no residual cycle of length >= lambda survives. CD_1 is the
/// Hamilton property, CD_2 the dominating-cycle property. (Some sources
/// write QD_lambda for the same notion.)
bool is_cd_cycle(const Graph& g, const CycleCertificate& c, int lambda);

/// PD_lambda: no residual path of length >= lambda (in edges) survives.
bool is_pd_cycle(const Graph& g, const CycleCertificate& c, int lambda);

inline bool residual_is_dominating(const ResidualParams& r) {
  return r.cycle_order <= 1;
}
inline bool residual_is_cd(const ResidualParams& r, int lambda) {
  // For lambda <= 1 "no residual cycle of length >= lambda" means no
  // residual vertex at all, since single vertices are 1-cycles.
  return r.cycle_order <= (lambda > 1 ? lambda - 1 : 0);
}
inline bool residual_is_pd(const ResidualParams& r, int lambda) {
  return r.path_edges <= lambda - 1;
}

}  // namespace hamlab
