#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hamlab/cycles.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph.hpp"
#include "support/oracles.hpp"

using namespace hamlab;

namespace {

Graph hexagon_plus_path() { return t15_graph(); }

}  // namespace

TEST_CASE("circumference examples") {
  CHECK(circumference(petersen()) == 9);
  CHECK(oracle::circumference(petersen()) == 9);  // no 10-cycle exists
  // two hub vertices admit at most two clique segments: 3K_3 + K_2
  Graph hub = hub_family(2, 4);
  CHECK(hub == mka_plus_kb(3, 3, 2));
  CHECK(circumference(hub) == 8);
  CHECK(circumference(Graph::complete(1)) == 1);
  CHECK(circumference(Graph::from_edges(2, {{0, 1}})) == 2);
  CHECK(circumference(Graph::empty_graph(3)) == 1);
  CHECK_THROWS_AS(circumference(Graph(0)), std::invalid_argument);
}

TEST_CASE("longest cycle certificates validate") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      CycleCertificate c = longest_cycle(g);
      CHECK(c.valid_in(g));
      CHECK(c.length() == circumference(g));
    }
}

TEST_CASE("hamiltonicity convention on tiny graphs") {
  CHECK(is_hamiltonian(Graph(1)));
  CHECK(is_hamiltonian(Graph::complete(2)));
  CHECK(!is_hamiltonian(Graph(2)));
  CHECK(!is_hamiltonian(k1_plus_2kd(2)));  // cut vertex
  CHECK(is_hamiltonian(Graph::complete(4)));
}

TEST_CASE("longest path edge counts") {
  CHECK(longest_path_edges(Graph(0)) == -1);
  CHECK(longest_path_edges(Graph::empty_graph(3)) == 0);
  CHECK(longest_path_edges(Graph::complete(4)) == 3);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(longest_path_edges(g) == oracle::longest_path_edges(g));
}

TEST_CASE("all longest cycles, deduplicated by vertex set") {
  CHECK(all_longest_cycles(Graph::complete(3)).cycles.size() == 1);

  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                   {5, 0}});
  CHECK(all_longest_cycles(c6).cycles.size() == 1);

  // the hexagon-plus-path graph has exactly three longest (6-)cycles: the
  // hexagon itself and two cycles through the path vertices 6,7
  LongestCycleSets sets = all_longest_cycle_sets(hexagon_plus_path());
  CHECK(sets.length == 6);
  REQUIRE(sets.sets.size() == 3);
  VertexSet hexagon = vs_full(6);
  CHECK(std::count(sets.sets.begin(), sets.sets.end(), hexagon) == 1);
  for (VertexSet s : sets.sets)
    if (s != hexagon) CHECK((vs_test(s, 6) && vs_test(s, 7)));
}

TEST_CASE("cycle set cap truncates with a flag") {
  // the empty graph on 8 vertices has 8 degenerate 1-cycles
  LongestCycleSets sets = all_longest_cycle_sets(Graph(8), 3);
  CHECK(sets.truncated);
  CHECK(sets.sets.size() == 3);
  CHECK_THROWS_AS(all_longest_cycle_sets(Graph(25)), UndecidedError);
}

TEST_CASE("residual parameters") {
  Graph hub = hub_family(2, 4);
  LongestCycleSets sets = all_longest_cycle_sets(hub);
  REQUIRE(sets.length == 8);
  for (VertexSet s : sets.sets) {
    ResidualParams r = residual_params_for_set(hub, s);
    CHECK(r.path_edges == 2);  // residual K_3
    CHECK(r.cycle_order == 3);
  }

  Graph k4 = Graph::complete(4);
  ResidualParams ham = residual_params(k4, longest_cycle(k4));
  CHECK(ham.path_edges == -1);
  CHECK(ham.cycle_order == 0);

  CycleCertificate hexagon(std::vector<int>{0, 1, 2, 3, 4, 5});
  ResidualParams t15 = residual_params(hexagon_plus_path(), hexagon);
  CHECK(t15.path_edges == 1);  // residual is the edge 6-7
  CHECK(t15.cycle_order == 2);

  CycleCertificate bogus(std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(residual_params(hexagon_plus_path(), bogus),
                  std::invalid_argument);
}

TEST_CASE("domination predicates") {
  Graph t15 = hexagon_plus_path();
  CycleCertificate hexagon(std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(!is_dominating(t15, hexagon));
  CHECK(!is_cd_cycle(t15, hexagon, 2));
  CHECK(is_cd_cycle(t15, hexagon, 3));
  CHECK(is_pd_cycle(t15, hexagon, 2));
  CHECK(!is_pd_cycle(t15, hexagon, 1));
  CHECK_THROWS_AS(is_cd_cycle(t15, hexagon, 0), std::invalid_argument);

  Graph k4 = Graph::complete(4);
  CHECK(is_dominating(k4, longest_cycle(k4)));
}

TEST_CASE("convention coherence: CD_1 is Hamilton, CD_2 is dominating") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (const CycleCertificate& c : all_longest_cycles(g).cycles) {
        CHECK(is_cd_cycle(g, c, 1) == (c.length() == g.order()));
        CHECK(is_cd_cycle(g, c, 2) == is_dominating(g, c));
      }
}

TEST_CASE("CD and PD are monotone in lambda") {
  for (const Graph& g : enumerate_graphs(6, true))
    for (const CycleCertificate& c : all_longest_cycles(g).cycles) {
      ResidualParams r = residual_params(g, c);
      for (int lambda = 1; lambda <= 6; ++lambda) {
        if (residual_is_cd(r, lambda)) CHECK(residual_is_cd(r, lambda + 1));
        if (residual_is_pd(r, lambda)) CHECK(residual_is_pd(r, lambda + 1));
      }
    }
}

TEST_CASE("circumference equals the brute-force search up to order 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      int c = circumference(g);
      CHECK(c == oracle::circumference(g));
      LongestCycleSets sets = all_longest_cycle_sets(g);
      CHECK(sets.length == c);
      for (VertexSet s : sets.sets) CHECK(vs_size(s) == std::max(c, 1));
    }
}

TEST_CASE("circumference matches the oracle on every connected order-8 graph") {
  for (const Graph& g : enumerate_graphs(8, true))
    CHECK(circumference(g) == oracle::circumference(g));
}

TEST_CASE("branch-and-bound path beyond the DP order limit") {
  // 30-cycle with two chords; circumference stays 30
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 30; ++i) edges.push_back({i, (i + 1) % 30});
  edges.push_back({0, 15});
  edges.push_back({5, 22});
  Graph g = Graph::from_edges(30, edges);
  CHECK(circumference(g) == 30);
  CHECK(is_hamiltonian(g));
  CycleCertificate c = longest_cycle(g);
  CHECK(c.valid_in(g));
  CHECK(c.length() == 30);

  // same ring with one vertex pinched off the cycle
  std::vector<std::pair<int, int>> edges2 = edges;
  Graph g2 = Graph::from_edges(31, edges2);
  g2.add_edge(30, 0);
  CHECK(circumference(g2) == 30);
  CHECK(!is_hamiltonian(g2));
  CHECK(longest_path_edges(g2) == 30);
}
