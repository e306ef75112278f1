#include <set>

#include "doctest.h"
#include "hamlab/canonical.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/graph6.hpp"
#include "support/oracles.hpp"

using namespace hamlab;

TEST_CASE("enumeration counts match the published values up to order 7") {
  const long long all[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  const long long connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_graphs(n, false).size()) == all[n]);
    CHECK(static_cast<long long>(enumerate_graphs(n, true).size()) ==
          connected[n]);
  }
}

TEST_CASE("enumeration counts match the brute-force class count") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<long long>(enumerate_graphs(n, false).size()) ==
          oracle::isomorphism_class_count(n, false));
    CHECK(static_cast<long long>(enumerate_graphs(n, true).size()) ==
          oracle::isomorphism_class_count(n, true));
  }
}

TEST_CASE("order-6 brute-force cross-check" * doctest::timeout(120)) {
  CHECK(oracle::isomorphism_class_count(6, false) == 156);
  CHECK(oracle::isomorphism_class_count(6, true) == 112);
}

TEST_CASE("representatives are canonical, distinct and ordered") {
  std::vector<Graph> graphs = enumerate_graphs(6, false);
  std::set<std::string> keys;
  std::string prev;
  for (const Graph& g : graphs) {
    std::string key = canonical_form(g);
    CHECK(write_graph6(g) == key);  // the representative is its own key
    CHECK(keys.insert(key).second);
    CHECK(prev < key);
    prev = key;
  }
}

TEST_CASE("enumeration rejects out-of-range orders") {
  CHECK_THROWS_AS(enumerate_graphs(0, false), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(9, false), std::invalid_argument);
}
