#include "hamlab/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "hamlab/canonical.hpp"
#include "hamlab/graph6.hpp"

namespace hamlab {

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("built-in enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  std::set<std::string> keys = {canonical_form(Graph(1))};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> next;
    for (const std::string& key : keys) {
      Graph base = parse_graph6(key);
      // Every m-vertex graph arises from some (m-1)-vertex graph by adding
      // one vertex, so sweeping all attachment subsets covers every class.
      for (VertexSet mask = 0; mask < vs_bit(m - 1); ++mask) {
        Graph g(m);
        for (int v = 0; v < m - 1; ++v)
          for (int u : vs_elements(base.neighbors(v)))
            if (u > v) g.add_edge(v, u);
        for (int v : vs_elements(mask)) g.add_edge(v, m - 1);
        next.insert(canonical_form(g));
      }
    }
    keys = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const std::string& key : keys) {
    Graph g = parse_graph6(key);
    if (!connected_only || is_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace hamlab
