#include "hamlab/analysis.hpp"

#include <stdexcept>

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

// Dominating cycles are exactly the spanning cycles of V minus an
// independent set, so enumerate independent sets and test the rest.
bool dominating_cycle_search(const Graph& g, VertexSet avail, VertexSet taken) {
  VertexSet rest = g.vertices() & ~taken;
  if (rest) {
    int m = vs_size(rest);
    bool ok;
    if (m == 1) {
      ok = true;
    } else if (m == 2) {
      std::vector<int> pair = vs_elements(rest);
      ok = g.adjacent(pair[0], pair[1]);
    } else {
      ok = is_hamiltonian(induced_subgraph(g, rest).graph);
    }
    if (ok) return true;
  }
  while (avail) {
    int v = __builtin_ctzll(avail);
    avail &= avail - 1;
    if (dominating_cycle_search(g, avail & ~g.neighbors(v), taken | vs_bit(v)))
      return true;
  }
  return false;
}

}  // namespace

GraphAnalysis::GraphAnalysis(const Graph& g, std::size_t cycle_cap)
    : graph_(g), cycle_cap_(cycle_cap) {
  n_ = g.order();
  if (n_ == 0) throw std::invalid_argument("analysis of the empty graph");
  q_ = g.size();
  min_degree_ = hamlab::min_degree(g);
  kappa_ = vertex_connectivity(g);
  components_ = components(g);
  circumference_ = hamlab::circumference(g);
}

int GraphAnalysis::alpha() const {
  if (!alpha_) alpha_ = independence_number(graph_);
  return *alpha_;
}

const Toughness& GraphAnalysis::tau() const {
  if (!tau_) tau_ = toughness(graph_);
  return *tau_;
}

void GraphAnalysis::ensure_sets() const {
  if (sets_) return;
  sets_ = all_longest_cycle_sets(graph_, cycle_cap_);
  residuals_.reserve(sets_->sets.size());
  for (VertexSet s : sets_->sets)
    residuals_.push_back(residual_params_for_set(graph_, s));
}

const std::vector<VertexSet>& GraphAnalysis::longest_sets() const {
  ensure_sets();
  return sets_->sets;
}

const std::vector<ResidualParams>& GraphAnalysis::residuals() const {
  ensure_sets();
  return residuals_;
}

bool GraphAnalysis::sets_truncated() const {
  ensure_sets();
  return sets_->truncated;
}

int GraphAnalysis::find_non_cd(int lambda) const {
  ensure_sets();
  if (sets_->truncated)
    throw UndecidedError(
        "longest-cycle enumeration truncated at cap; universal check "
        "undecided");
  for (std::size_t i = 0; i < residuals_.size(); ++i)
    if (!residual_is_cd(residuals_[i], lambda)) return static_cast<int>(i);
  return -1;
}

bool GraphAnalysis::has_dominating_cycle() const {
  if (!has_dominating_)
    has_dominating_ = dominating_cycle_search(graph_, graph_.vertices(), 0);
  return *has_dominating_;
}

InvariantRecord GraphAnalysis::invariant_record() const {
  InvariantRecord rec;
  rec.n = n_;
  rec.q = q_;
  rec.min_degree = min_degree_;
  rec.kappa = kappa_;
  rec.alpha = alpha();
  rec.tau = tau();
  rec.components = components_;
  rec.connected = connected();
  return rec;
}

}  // namespace hamlab
