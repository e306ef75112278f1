#include "doctest.h"
#include "hamlab/enumerate.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/invariants.hpp"
#include "support/oracles.hpp"

using namespace hamlab;

TEST_CASE("degree, size, order, components examples") {
  Graph p = petersen();
  CHECK(min_degree(p) == 3);
  CHECK(p.size() == 15);
  CHECK(p.order() == 10);

  Graph bowtie = k1_plus_2kd(2);
  CHECK(min_degree(bowtie) == 2);
  CHECK(bowtie.size() == 6);

  CHECK(components(Graph::empty_graph(5)) == 5);
  CHECK_THROWS_AS(min_degree(Graph(0)), std::invalid_argument);
}

TEST_CASE("vertex connectivity examples") {
  CHECK(vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity(Graph::complete(1)) == 0);
  CHECK(vertex_connectivity(Graph::complete(2)) == 1);
  Graph p = petersen();
  CHECK(vertex_connectivity(p) == 3);
  CHECK(vertex_connectivity(p) == oracle::vertex_connectivity(p));
  // delta=5, kappa=2: the two designated independent vertices cut off K_b
  Graph h = h_graph(1, 4, 5, 2);
  CHECK(min_degree(h) == 5);
  CHECK(vertex_connectivity(h) == 2);
}

TEST_CASE("independence number examples") {
  CHECK(independence_number(Graph::complete(7)) == 1);
  CHECK(independence_number(Graph::empty_graph(7)) == 7);
  Graph p = petersen();
  CHECK(independence_number(p) == 4);
  CHECK(independence_number(p) == oracle::independence_number(p));
}

TEST_CASE("toughness examples") {
  CHECK(toughness(Graph::complete(1)).is_infinite());
  CHECK(toughness(Graph::complete(6)).is_infinite());
  Graph p = petersen();
  Toughness tp = toughness(p);
  REQUIRE(!tp.is_infinite());
  CHECK(tp.value() == Rational(4, 3));
  CHECK(tp == oracle::toughness(p));
  // the order-15 three-part construction is exactly 1-tough, not hamiltonian
  Graph g15 = g_n(15, 5);
  CHECK(is_t_tough(g15, Rational(1)));
  CHECK(toughness(g15) == Toughness::finite(Rational(1)));
  CHECK(toughness(Graph::from_edges(4, {{0, 1}, {2, 3}})) ==
        Toughness::finite(Rational(0)));
}

TEST_CASE("is_t_tough is monotone in t") {
  for (const Graph& g : enumerate_graphs(5, true)) {
    Toughness tau = toughness(g);
    for (int num = 0; num <= 6; ++num) {
      Rational t(num, 3);
      bool tough_here = is_t_tough(g, t);
      CHECK(tough_here == tau.at_least(t));
      if (tough_here && num >= 1) CHECK(is_t_tough(g, Rational(num - 1, 3)));
    }
    if (tau.greater_than(Rational(1))) CHECK(is_t_tough(g, Rational(1)));
  }
}

TEST_CASE("Whitney chain kappa <= delta on every graph up to order 7") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(vertex_connectivity(g) <= min_degree(g));
}

TEST_CASE("alpha equals the complement's max clique up to order 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(independence_number(g) == oracle::max_clique(complement(g)));
}

TEST_CASE("connectivity agrees with brute-force cuts up to order 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
}

TEST_CASE("toughness agrees with subset enumeration up to order 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(toughness(g) == oracle::toughness(g));
}

TEST_CASE("invariant record assembles the engine values") {
  InvariantRecord rec = compute_invariants(petersen());
  CHECK(rec.n == 10);
  CHECK(rec.q == 15);
  CHECK(rec.min_degree == 3);
  CHECK(rec.kappa == 3);
  CHECK(rec.alpha == 4);
  CHECK(rec.tau == Toughness::finite(Rational(4, 3)));
  CHECK(rec.connected);
  CHECK_THROWS_AS(compute_invariants(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(toughness(Graph(27)), std::invalid_argument);
}
