#pragma once

#include "hamlab/graph.hpp"
#include "hamlab/rational.hpp"

// Deliberately naive reference implementations, kept independent of the
// library's solver paths. They only read adjacency through Graph::adjacent
// and exist to cross-check the engine at small orders.
namespace oracle {

int circumference(const hamlab::Graph& g);
int longest_path_edges(const hamlab::Graph& g);
bool hamiltonian(const hamlab::Graph& g);
int independence_number(const hamlab::Graph& g);
int max_clique(const hamlab::Graph& g);
int vertex_connectivity(const hamlab::Graph& g);
hamlab::Toughness toughness(const hamlab::Graph& g);

/// Number of isomorphism classes of order-n graphs, counted by minimizing
/// the adjacency bit string over all n! permutations of every labeled
/// graph. Exponential twice over; fine for n <= 6.
long long isomorphism_class_count(int n, bool connected_only);

}  // namespace oracle
