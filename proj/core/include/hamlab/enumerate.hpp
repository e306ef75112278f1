#pragma once

#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Built-in isomorph-free enumeration stops here; larger orders are meant
/// to be piped in as graph6 from an external generator.
constexpr int kMaxEnumerationOrder = 8;

/// All non-isomorphic graphs of the given order, one canonical
/// representative per class, sorted by canonical key (so the order is
/// stable across runs). Built by extending each smaller graph with one new
/// vertex over every attachment subset and deduplicating canonically.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace hamlab
