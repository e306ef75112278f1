#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hamlab/cycles.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/invariants.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

/// Per-graph cache shared by the theorem checkers. Cheap invariants and
/// the circumference are computed up front; independence number, toughness,
/// the longest-cycle sets and the existential dominating-cycle search are
/// filled in on first use. Instances are not thread-safe; build one per
/// worker.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(const Graph& g,
                         std::size_t cycle_cap = kDefaultCycleSetCap);

  const Graph& graph() const { return graph_; }
  int order() const { return n_; }
  int edge_count() const { return q_; }
  int min_degree() const { return min_degree_; }
  int kappa() const { return kappa_; }
  bool connected() const { return components_ <= 1; }
  int component_count() const { return components_; }
  int circumference() const { return circumference_; }
  bool hamiltonian() const { return circumference_ == n_; }

  int alpha() const;
  const Toughness& tau() const;

  /// Vertex sets of all longest cycles plus their residual parameters.
  /// Throws UndecidedError when the enumeration cap was exceeded, since a
  /// universally quantified conclusion can no longer be decided.
  const std::vector<VertexSet>& longest_sets() const;
  const std::vector<ResidualParams>& residuals() const;
  bool sets_truncated() const;

  /// Index of the first longest cycle whose residual still carries a cycle
  /// of length >= lambda, or -1 when none does.
  int find_non_cd(int lambda) const;
  int find_non_dominating() const { return find_non_cd(2); }
  bool every_longest_dominating() const { return find_non_dominating() < 0; }

  /// Whether any cycle of the graph (longest or not, degenerate included)
  /// dominates every edge.
  bool has_dominating_cycle() const;

  InvariantRecord invariant_record() const;

 private:
  void ensure_sets() const;

  Graph graph_;
  std::size_t cycle_cap_;
  int n_, q_, min_degree_, kappa_, components_, circumference_;

  mutable std::optional<int> alpha_;
  mutable std::optional<Toughness> tau_;
  mutable std::optional<LongestCycleSets> sets_;
  mutable std::vector<ResidualParams> residuals_;
  mutable std::optional<bool> has_dominating_;
};

}  // namespace hamlab
