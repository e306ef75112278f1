#include "doctest.h"
#include "hamlab/canonical.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/invariants.hpp"

using namespace hamlab;

TEST_CASE("mka_plus_kb orders and sizes") {
  Graph g = mka_plus_kb(2, 3, 1);  // 2K_3 + K_1
  CHECK(g.order() == 7);
  CHECK(g.size() == 2 * 3 + 6);  // two triangles plus the join star
  CHECK(mka_plus_kb(1, 2, 3) == Graph::complete(5));
  Graph hub = mka_plus_kb(3, 3, 2);  // kappa=2, delta=4 hub instance
  CHECK(hub.order() == 11);
  CHECK(min_degree(hub) == 4);
  CHECK(vertex_connectivity(hub) == 2);
  CHECK_THROWS_AS(mka_plus_kb(0, 1, 1), std::invalid_argument);
}

TEST_CASE("k1_plus_2kd is two cliques sharing a vertex") {
  Graph bowtie = k1_plus_2kd(2);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.size() == 6);  // delta^2 + delta
  CHECK(!is_hamiltonian(bowtie));
  CHECK(vertex_connectivity(bowtie) == 1);

  Graph p3 = k1_plus_2kd(1);
  CHECK(isomorphic(p3, Graph::from_edges(3, {{0, 1}, {1, 2}})));

  Graph d3 = k1_plus_2kd(3);
  CHECK(d3.size() == 12);
  CHECK(vertex_connectivity(d3) == 1);
  for (int delta = 1; delta <= 5; ++delta)
    CHECK(k1_plus_2kd(delta).size() == delta * delta + delta);
}

TEST_CASE("h_graph structure") {
  // a=1: K_{t,t} plus K_b wired to k designated vertices
  Graph h = h_graph(1, 4, 5, 2);
  CHECK(h.order() == 14);  // t*a + t + b
  CHECK(min_degree(h) == 5);
  CHECK(vertex_connectivity(h) == 2);
  CHECK(!is_hamiltonian(h));

  Graph tiny = h_graph(1, 1, 1, 1);
  CHECK(isomorphic(tiny, Graph::from_edges(3, {{0, 1}, {1, 2}})));

  Graph t5 = h_graph(1, 2, 4, 3);  // instance used by several audits
  CHECK(t5.order() == 10);

  CHECK_THROWS_AS(h_graph(1, 1, 2, 3), std::invalid_argument);  // k > t
  CHECK_THROWS_AS(h_graph(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("h_graph family role grid") {
  // h_graph(1, delta-kappa+1, delta, kappa) keeps its stated min degree and
  // connectivity, and the independent middle layer kills hamiltonicity
  for (int kappa = 2; kappa <= 6; ++kappa)
    for (int delta = kappa; delta <= 6; ++delta) {
      Graph g = h_graph(1, delta - kappa + 1, delta, kappa);
      CHECK(g.order() == 3 * delta - kappa + 1);
      CHECK(min_degree(g) == delta);
      CHECK(vertex_connectivity(g) == kappa);
      CHECK(!is_hamiltonian(g));
    }
}

TEST_CASE("l_graph structure") {
  CHECK(isomorphic(l_graph(1), Graph::complete(4)));
  Graph l2 = l_graph(2);
  CHECK(l2.order() == 7);
  CHECK(min_degree(l2) == 2);
  Graph l3 = l_graph(3);
  CHECK(l3.order() == 10);
  CHECK(l3.size() == 9 + 9 + 3);  // three K_3, the hub star, the triangle
}

TEST_CASE("g_n and g_star structure") {
  Graph g15 = g_n(15, 5);
  CHECK(g15.order() == 15);
  CHECK(min_degree(g15) == 5);
  CHECK(is_t_tough(g15, Rational(1)));
  CHECK(!is_hamiltonian(g15));

  Graph gs = g_star(15);
  CHECK(gs.order() == 15);
  CHECK(min_degree(gs) == 5);
  CHECK(is_t_tough(gs, Rational(1)));
  CHECK(!is_hamiltonian(gs));

  CHECK_THROWS_AS(g_n(14, 5), std::invalid_argument);
  CHECK_THROWS_AS(g_n(15, 4), std::invalid_argument);  // below n/3
  CHECK_THROWS_AS(g_n(15, 6), std::invalid_argument);  // above (n-5)/2
  CHECK_THROWS_AS(g_n(13, 5), std::invalid_argument);
}

TEST_CASE("petersen basics") {
  Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(circumference(p) == 9);
  CHECK(toughness(p) == Toughness::finite(Rational(4, 3)));
}

TEST_CASE("t15 graph matches its stated invariants") {
  Graph g = t15_graph();
  CHECK(g.order() == 8);
  CHECK(g.size() == 9);
  CHECK(min_degree(g) == 2);
  CHECK(vertex_connectivity(g) == 2);
  CHECK(circumference(g) == 6);
}

TEST_CASE("family specs instantiate from names") {
  CHECK(parse_family("hub") == Family::Hub);
  CHECK(parse_family("rings") == std::nullopt);
  FamilySpec spec{Family::Hub, {{"kappa", 2}, {"delta", 4}}};
  CHECK(make_family(spec) == hub_family(2, 4));
  FamilySpec missing{Family::Hub, {{"kappa", 2}}};
  CHECK_THROWS_AS(make_family(missing), std::invalid_argument);
  FamilySpec pet{Family::Petersen, {}};
  CHECK(make_family(pet) == petersen());
  for (Family f : {Family::Hub, Family::MkaKb, Family::K1TwoKd, Family::H,
                   Family::L, Family::Gn, Family::GStar, Family::Petersen,
                   Family::T15})
    CHECK(parse_family(to_string(f)) == f);
}
