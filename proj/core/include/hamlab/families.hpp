#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// m disjoint copies of K_a joined completely to K_b (b may be 0).
Graph mka_plus_kb(int m, int a, int b);

/// Two copies of K_{delta+1} sharing exactly one vertex, i.e. K_1 joined
/// to 2 K_delta. Order 2*delta+1, size delta^2+delta, never hamiltonian
/// past delta = 0 thanks to the cut vertex.
Graph k1_plus_2kd(int delta);

/// (kappa+1) K_{delta-kappa+1} joined to K_kappa: the hub construction
/// attaining the residual-parameter bounds with equality. Requires
/// 1 <= kappa <= delta.
Graph hub_family(int kappa, int delta);

/// t K_a joined to the independent set on t vertices, plus a fresh K_b
/// whose vertices are wired to k designated independent-set vertices.
/// Requires a, b, t >= 1 and 0 <= k <= t.
Graph h_graph(int a, int b, int t, int k);

/// 3 K_delta joined to a single hub vertex, plus a triangle on one
/// designated vertex from each copy.
Graph l_graph(int delta);

/// Three-part construction of odd order n >= 15: an independent set of
/// (n-1)/2 vertices, a universal K_delta, and a clique on (n+1)/2 - delta
/// vertices matched into the independent part. 1-tough but not
/// hamiltonian. Requires 3*delta >= n and 2*delta <= n-5.
Graph g_n(int n, int delta);

/// g_n with the universal clique replaced by a universal independent set
/// and delta fixed to (n-5)/2.
Graph g_star(int n);

Graph petersen();

/// The 8-vertex, 9-edge hexagon-plus-path graph showing the size threshold
/// of theorem T15 is tight: its longest cycles are 6-cycles and none of
/// them dominates.
Graph t15_graph();

enum class Family {
  Hub,
  MkaKb,
  K1TwoKd,
  H,
  L,
  Gn,
  GStar,
  Petersen,
  T15,
};

std::optional<Family> parse_family(const std::string& name);
std::string to_string(Family family);
/// Parameter names in CLI order, e.g. {"kappa", "delta"} for Hub.
std::vector<std::string> family_parameters(Family family);

struct FamilySpec {
  Family family;
  std::map<std::string, int> params;
};

/// Instantiates a family; throws std::invalid_argument for missing or
/// invalid parameters.
Graph make_family(const FamilySpec& spec);

}  // namespace hamlab
