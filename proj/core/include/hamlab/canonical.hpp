#pragma once

#include <string>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Largest order canonical_form accepts; the search is a pruned sweep over
/// vertex permutations and is not meant to scale past desk-size graphs.
constexpr int kMaxCanonicalOrder = 10;

/// Canonical key: the lexicographically smallest upper-triangle bit string
/// over admissible relabelings, returned as a graph6 line. Two graphs get
/// equal keys iff they are isomorphic. Throws std::invalid_argument above
/// kMaxCanonicalOrder.
std::string canonical_form(const Graph& g);

/// Isomorphism test via canonical keys (same order cap applies).
bool isomorphic(const Graph& g, const Graph& h);

}  // namespace hamlab
