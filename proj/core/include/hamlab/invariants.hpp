#pragma once

#include "hamlab/graph.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

/// Exact toughness computation is a subset sweep; refuse anything bigger.
constexpr int kMaxToughnessOrder = 26;

int min_degree(const Graph& g);  // throws on the 0-vertex graph

/// Minimum number of vertices whose removal disconnects the graph or
/// reduces it to K_1. Complete K_n gives n-1 (K_1 gives 0), disconnected
/// graphs give 0; otherwise a minimum vertex cut via unit-capacity
/// max-flow over all non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Exact maximum independent set size, branch and bound (branch on a
/// maximum-degree vertex, greedy clique cover as the upper bound).
int independence_number(const Graph& g);

/// Exact rational min |S| / s(G\S) over all S with s(G\S) > 1, by subset
/// enumeration ascending in |S|; infinite for complete graphs.
Toughness toughness(const Graph& g);

bool is_t_tough(const Graph& g, const Rational& t);

struct InvariantRecord {
  int n = 0;
  int q = 0;           // edge count
  int min_degree = 0;
  int kappa = 0;       // vertex connectivity
  int alpha = 0;       // independence number
  Toughness tau = Toughness::infinite();
  bool connected = false;
  int components = 0;
};

InvariantRecord compute_invariants(const Graph& g);

}  // namespace hamlab
