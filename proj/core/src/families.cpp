#include "hamlab/families.hpp"

#include <stdexcept>

namespace hamlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int get_param(const FamilySpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  require(it != spec.params.end(),
          "family " + to_string(spec.family) + " needs parameter '" + name +
              "'");
  return it->second;
}

}  // namespace

Graph mka_plus_kb(int m, int a, int b) {
  require(m >= 1 && a >= 1 && b >= 0, "mka_plus_kb needs m,a >= 1 and b >= 0");
  Graph copies = Graph::complete(a);
  for (int i = 1; i < m; ++i) copies = disjoint_union(copies, Graph::complete(a));
  return join(copies, Graph::complete(b));
}

Graph k1_plus_2kd(int delta) {
  require(delta >= 1, "k1_plus_2kd needs delta >= 1");
  Graph two = disjoint_union(Graph::complete(delta), Graph::complete(delta));
  return join(Graph::complete(1), two);
}

Graph hub_family(int kappa, int delta) {
  require(kappa >= 1 && delta >= kappa, "hub_family needs 1 <= kappa <= delta");
  return mka_plus_kb(kappa + 1, delta - kappa + 1, kappa);
}

Graph h_graph(int a, int b, int t, int k) {
  require(a >= 1 && b >= 1 && t >= 1, "h_graph needs a, b, t >= 1");
  require(k >= 0 && k <= t, "h_graph needs 0 <= k <= t");
  // Layout: t*a clique vertices, then the independent t, then K_b.
  Graph g(t * a + t + b);
  for (int copy = 0; copy < t; ++copy)
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) g.add_edge(copy * a + i, copy * a + j);
  for (int v = 0; v < t * a; ++v)
    for (int w = 0; w < t; ++w) g.add_edge(v, t * a + w);
  int base = t * a + t;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) g.add_edge(base + i, base + j);
  // The k designated independent vertices are the lowest-labeled ones; the
  // construction is isomorphic for any choice.
  for (int w = 0; w < k; ++w)
    for (int i = 0; i < b; ++i) g.add_edge(t * a + w, base + i);
  return g;
}

Graph l_graph(int delta) {
  require(delta >= 1, "l_graph needs delta >= 1");
  Graph copies = Graph::complete(delta);
  for (int i = 1; i < 3; ++i) copies = disjoint_union(copies, Graph::complete(delta));
  Graph g = join(copies, Graph::complete(1));  // hub gets label 3*delta
  g.add_edge(0, delta);
  g.add_edge(0, 2 * delta);
  g.add_edge(delta, 2 * delta);
  return g;
}

namespace {

Graph g_n_impl(int n, int delta, bool universal_part_is_clique) {
  if (n % 2 == 0 || n < 15)
    throw std::invalid_argument("g_n needs odd order n >= 15");
  if (3 * delta < n || 2 * delta > n - 5)
    throw std::invalid_argument("g_n needs n/3 <= delta <= (n-5)/2");
  int ia = (n - 1) / 2;            // independent part
  int ic = (n + 1) / 2 - delta;    // matched clique part
  // Layout: independent part, universal part, matched clique.
  Graph g(n);
  int ub = ia, cb = ia + delta;
  if (universal_part_is_clique)
    for (int i = 0; i < delta; ++i)
      for (int j = i + 1; j < delta; ++j) g.add_edge(ub + i, ub + j);
  for (int i = 0; i < delta; ++i)
    for (int v = 0; v < n; ++v)
      if (v < ub || v >= cb) g.add_edge(ub + i, v);
  for (int i = 0; i < ic; ++i)
    for (int j = i + 1; j < ic; ++j) g.add_edge(cb + i, cb + j);
  for (int i = 0; i < ic; ++i) g.add_edge(cb + i, i);  // the matching
  return g;
}

}  // namespace

Graph g_n(int n, int delta) { return g_n_impl(n, delta, true); }

Graph g_star(int n) {
  if (n % 2 == 0 || n < 15)
    throw std::invalid_argument("g_star needs odd order n >= 15");
  return g_n_impl(n, (n - 5) / 2, false);
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer 5-cycle
    g.add_edge(i, i + 5);            // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph t15_graph() {
  return Graph::from_edges(8, {{0, 1},
                               {1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 5},
                               {5, 0},
                               {0, 6},
                               {6, 7},
                               {7, 3}});
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "hub") return Family::Hub;
  if (name == "mka_kb") return Family::MkaKb;
  if (name == "k1_2kd") return Family::K1TwoKd;
  if (name == "h") return Family::H;
  if (name == "l") return Family::L;
  if (name == "gn") return Family::Gn;
  if (name == "gstar") return Family::GStar;
  if (name == "petersen") return Family::Petersen;
  if (name == "t15") return Family::T15;
  return std::nullopt;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Hub: return "hub";
    case Family::MkaKb: return "mka_kb";
    case Family::K1TwoKd: return "k1_2kd";
    case Family::H: return "h";
    case Family::L: return "l";
    case Family::Gn: return "gn";
    case Family::GStar: return "gstar";
    case Family::Petersen: return "petersen";
    case Family::T15: return "t15";
  }
  return "?";
}

std::vector<std::string> family_parameters(Family family) {
  switch (family) {
    case Family::Hub: return {"kappa", "delta"};
    case Family::MkaKb: return {"m", "a", "b"};
    case Family::K1TwoKd: return {"delta"};
    case Family::H: return {"a", "b", "t", "k"};
    case Family::L: return {"delta"};
    case Family::Gn: return {"n", "delta"};
    case Family::GStar: return {"n"};
    case Family::Petersen:
    case Family::T15: return {};
  }
  return {};
}

Graph make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Hub:
      return hub_family(get_param(spec, "kappa"), get_param(spec, "delta"));
    case Family::MkaKb:
      return mka_plus_kb(get_param(spec, "m"), get_param(spec, "a"),
                         get_param(spec, "b"));
    case Family::K1TwoKd:
      return k1_plus_2kd(get_param(spec, "delta"));
    case Family::H:
      return h_graph(get_param(spec, "a"), get_param(spec, "b"),
                     get_param(spec, "t"), get_param(spec, "k"));
    case Family::L:
      return l_graph(get_param(spec, "delta"));
    case Family::Gn:
      return g_n(get_param(spec, "n"), get_param(spec, "delta"));
    case Family::GStar:
      return g_star(get_param(spec, "n"));
    case Family::Petersen:
      return petersen();
    case Family::T15:
      return t15_graph();
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace hamlab
