#include <random>
#include <set>

#include "doctest.h"
#include "hamlab/canonical.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/graph6.hpp"

using namespace hamlab;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("from_edges builds the expected graphs") {
  Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.order() == 3);
  CHECK(triangle.size() == 3);
  CHECK(triangle == Graph::complete(3));

  Graph k1 = Graph::from_edges(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  // hexagon + path through two extra vertices, 9 edges
  Graph t15 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                    {5, 0}, {0, 6}, {6, 7}, {7, 3}});
  CHECK(t15.size() == 9);
  CHECK(t15.degree(6) == 2);

  // duplicates collapse
  Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.size() == 1);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("complete and empty graphs") {
  CHECK(Graph::complete(4).size() == 6);
  CHECK(Graph::complete(1).size() == 0);
  CHECK(Graph::empty_graph(5).size() == 0);
  CHECK(components(Graph::empty_graph(5)) == 5);
}

TEST_CASE("join, union, complement basics") {
  CHECK(join(Graph::complete(2), Graph::complete(3)) == Graph::complete(5));
  Graph three_k2 = disjoint_union(
      disjoint_union(Graph::complete(2), Graph::complete(2)),
      Graph::complete(2));
  CHECK(three_k2.order() == 6);
  CHECK(three_k2.size() == 3);
  CHECK(components(three_k2) == 3);
  CHECK(complement(Graph::empty_graph(4)) == Graph::complete(4));
}

TEST_CASE("join arities over random pairs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(2 + trial % 6, 0.4, rng);
    Graph h = random_graph(1 + trial % 5, 0.6, rng);
    Graph j = join(g, h);
    CHECK(j.order() == g.order() + h.order());
    CHECK(j.size() == g.size() + h.size() + g.order() * h.order());
    Graph u = disjoint_union(g, h);
    CHECK(u.size() == g.size() + h.size());
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs relabel densely") {
  auto sub = induced_subgraph(Graph::complete(5), 0b10101);
  CHECK(sub.graph == Graph::complete(3));
  CHECK(sub.vertices == std::vector<int>{0, 2, 4});

  Graph t15 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                    {5, 0}, {0, 6}, {6, 7}, {7, 3}});
  auto rest = induced_subgraph(t15, vs_bit(6) | vs_bit(7));
  CHECK(rest.graph.order() == 2);
  CHECK(rest.graph.size() == 1);

  auto none = induced_subgraph(t15, 0);
  CHECK(none.graph.order() == 0);

  CHECK_THROWS_AS(induced_subgraph(Graph(3), vs_bit(3)),
                  std::invalid_argument);
}

TEST_CASE("graph6 hand-checked encodings") {
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph::complete(3)) == "Bw");
  CHECK(write_graph6(Graph::complete(4)) == "C~");
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  // 5-cycle on labels 0..4 in order: body bits 101001 100100 -> "Dhc"
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(write_graph6(c5) == "Dhc");
}

TEST_CASE("graph6 extended size header") {
  // order 63 needs the '~' header: 63 = 0,0,63 in 6-bit groups
  Graph g(63);
  g.add_edge(0, 62);
  std::string s = write_graph6(g);
  CHECK(s.substr(0, 4) == "~??~");
  CHECK(parse_graph6(s) == g);

  Graph g64(64);
  g64.add_edge(10, 53);
  CHECK(parse_graph6(write_graph6(g64)) == g64);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  // byte below 63 inside the body
  try {
    parse_graph6("B1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  // truncated body: K_4 needs one body byte
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  // trailing bytes
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  // an order past the engine cap (n = 100)
  CHECK_THROWS_AS(parse_graph6("~?Ac"), ParseError);
}

TEST_CASE("graph6 round trip over every graph up to order 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 round trip on random order-8 graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(8, 0.3 + 0.05 * (trial % 10), rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("canonical form identifies relabelings") {
  Graph path_abc = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph path_cba = Graph::from_edges(3, {{2, 1}, {1, 0}});
  CHECK(canonical_form(path_abc) == canonical_form(path_cba));
  CHECK(canonical_form(Graph::complete(3)) != canonical_form(path_abc));
  CHECK_THROWS_AS(canonical_form(Graph(11)), std::invalid_argument);
}

TEST_CASE("canonical form separates the 11 order-4 classes") {
  std::set<std::string> keys;
  for (const Graph& g : enumerate_graphs(4, false))
    keys.insert(canonical_form(g));
  CHECK(keys.size() == 11);
}

TEST_CASE("canonical form invariant under 1000 random relabelings") {
  std::mt19937 rng(42);
  std::vector<Graph> samples;
  for (const Graph& g : enumerate_graphs(4, false)) samples.push_back(g);
  samples.push_back(random_graph(7, 0.35, rng));
  samples.push_back(random_graph(8, 0.5, rng));
  for (const Graph& g : samples) {
    std::string key = canonical_form(g);
    for (int trial = 0; trial < 1000; ++trial) {
      Graph h = relabel(g, random_permutation(g.order(), rng));
      CHECK(canonical_form(h) == key);
    }
  }
}

TEST_CASE("isomorphic helper") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph c5b = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(isomorphic(c5, c5b));
  CHECK(!isomorphic(c5, Graph::complete(5)));
}
