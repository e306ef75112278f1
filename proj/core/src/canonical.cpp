#include "hamlab/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hamlab/graph6.hpp"

namespace hamlab {

namespace {

// Iterated neighborhood refinement. Colors are ranks of label-independent
// signatures, so isomorphic graphs produce matching color multisets and the
// per-position color sequence below is itself canonical.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : vs_elements(g.neighbors(v))) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    if (next == color) return color;
    color = std::move(next);
  }
}

struct Search {
  const Graph& g;
  int n;
  std::vector<int> slot_color;  // color required at each position
  std::vector<int> perm;        // position -> vertex
  VertexSet used = 0;
  std::vector<int> colors;

  std::vector<std::uint8_t> cur;   // upper triangle, column order
  std::vector<std::uint8_t> best;
  bool have_best = false;

  explicit Search(const Graph& graph) : g(graph), n(graph.order()) {
    colors = refine_colors(g);
    slot_color = colors;
    std::sort(slot_color.begin(), slot_color.end());
    perm.assign(n, -1);
    cur.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  }

  // pos = next position to fill; lt = current prefix already beats best.
  // Returns whether best was replaced somewhere below; after that the
  // prefix ties the new best, so siblings must compare afresh.
  bool extend(int pos, bool lt) {
    if (pos == n) {
      if (lt || !have_best) {
        best = cur;
        have_best = true;
        return true;
      }
      return false;
    }
    bool replaced = false;
    std::size_t base = static_cast<std::size_t>(pos) * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (vs_test(used, v) || colors[v] != slot_color[pos]) continue;
      bool branch_lt = lt;
      bool prune = false;
      for (int i = 0; i < pos; ++i) {
        std::uint8_t bit = g.adjacent(perm[i], v) ? 1 : 0;
        cur[base + i] = bit;
        if (!branch_lt && have_best) {
          if (bit > best[base + i]) {
            prune = true;
            break;
          }
          if (bit < best[base + i]) branch_lt = true;
        }
      }
      if (prune) continue;
      perm[pos] = v;
      used |= vs_bit(v);
      if (extend(pos + 1, branch_lt)) {
        replaced = true;
        lt = false;
      }
      used &= ~vs_bit(v);
    }
    return replaced;
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form limited to order <= " +
                                std::to_string(kMaxCanonicalOrder));
  if (n <= 1) return write_graph6(g);

  Search search(g);
  search.extend(0, false);

  Graph canon(n);
  std::size_t k = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (search.best[k++]) canon.add_edge(row, col);
  return write_graph6(canon);
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace hamlab
