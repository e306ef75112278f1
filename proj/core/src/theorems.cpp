#include "hamlab/theorems.hpp"

#include <array>
#include <stdexcept>

#include "hamlab/canonical.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph6.hpp"

namespace hamlab {

namespace {

constexpr std::array<const char*, 25> kTagNames = {
    "A",  "B",  "C",  "D",  "E",  "F",  "G",  "T1",  "T2",
    "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11",
    "T12", "T13", "T14", "T15", "T16", "T17", "T18"};

bool is_petersen(const Graph& g) {
  if (g.order() != 10 || g.size() != 15) return false;
  for (int v = 0; v < 10; ++v)
    if (g.degree(v) != 3) return false;
  static const std::string key = canonical_form(petersen());
  return canonical_form(g) == key;
}

std::string cycle_note(const GraphAnalysis& a, int index) {
  const ResidualParams& r = a.residuals()[index];
  return "offending longest cycle residual: path_edges=" +
         std::to_string(r.path_edges) +
         ", cycle_order=" + std::to_string(r.cycle_order);
}

// Universal residual-cycle check shared by the dominating/CD conclusions.
ConclusionResult every_longest_cd(const GraphAnalysis& a, int lambda,
                                  const std::string& what) {
  ConclusionResult out;
  int bad = a.find_non_cd(lambda);
  if (bad < 0) {
    out.holds = true;
    return out;
  }
  out.holds = false;
  out.offending_set = bad;
  out.detail = "a longest cycle is not " + what + "; " + cycle_note(a, bad);
  return out;
}

ConclusionResult simple(bool holds, std::string detail_on_fail) {
  ConclusionResult out;
  out.holds = holds;
  if (!holds) out.detail = std::move(detail_on_fail);
  return out;
}

void require_complete_sets(const GraphAnalysis& a) {
  if (a.sets_truncated())
    throw UndecidedError(
        "longest-cycle enumeration truncated at cap; universal check "
        "undecided");
}

ConclusionResult circumference_at_least(const GraphAnalysis& a,
                                        long long bound) {
  long long c = a.circumference();
  return simple(c >= bound, "circumference " + std::to_string(c) +
                                " below bound " + std::to_string(bound));
}

}  // namespace

bool needs_lambda(TheoremTag tag) {
  return tag == TheoremTag::T11 || tag == TheoremTag::T12 ||
         tag == TheoremTag::T13;
}

std::string to_string(TheoremTag tag) {
  return kTagNames[static_cast<int>(tag)];
}

std::string to_string(TheoremId id) {
  std::string s = to_string(id.tag);
  if (needs_lambda(id.tag)) s += ":" + std::to_string(id.lambda);
  return s;
}

std::optional<TheoremTag> parse_tag(const std::string& text) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (text == kTagNames[i]) return static_cast<TheoremTag>(i);
  return std::nullopt;
}

std::vector<TheoremTag> all_tags() {
  std::vector<TheoremTag> tags;
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    tags.push_back(static_cast<TheoremTag>(i));
  return tags;
}

long long t1_bound(int path_edges, int delta) {
  if (delta < 0 || path_edges < -1)
    throw std::invalid_argument("t1_bound parameter out of range");
  return static_cast<long long>(path_edges + 2) * (delta - path_edges);
}

long long t2_bound(int cycle_order, int delta) {
  if (delta < 0 || cycle_order < 0)
    throw std::invalid_argument("t2_bound parameter out of range");
  return static_cast<long long>(cycle_order + 1) * (delta - cycle_order + 1);
}

Rational t3_bound(int cycle_order, int kappa, int delta) {
  if (kappa < 2) throw std::invalid_argument("t3_bound needs kappa >= 2");
  if (delta < 0 || cycle_order < 0)
    throw std::invalid_argument("t3_bound parameter out of range");
  long long c = cycle_order, k = kappa, d = delta;
  if (c >= k) return Rational((c + 1) * k * (d + 2), c + k + 1);
  return Rational((c + 1) * c * (d + 2), 2 * c + 1);
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Inapplicable: return "inapplicable";
    case Verdict::Kind::Holds: return "holds";
    case Verdict::Kind::ExceptionAllowed: return "exception";
    case Verdict::Kind::Violated: return "violated";
  }
  return "?";
}

bool hypothesis_holds(TheoremId id, const GraphAnalysis& a) {
  const int n = a.order();
  const int q = a.edge_count();
  const int d = a.min_degree();
  const int k = a.kappa();
  const int l = id.lambda;
  switch (id.tag) {
    case TheoremTag::A: return 2 * d >= n;
    case TheoremTag::B: return k >= 2;
    case TheoremTag::C: return k >= 2 && 3 * d >= n + 2;
    case TheoremTag::D: return k >= 3;
    case TheoremTag::E: return k >= 2 && d >= a.alpha() && 3 * d >= n + 2;
    case TheoremTag::F: return k >= 3 && d >= a.alpha();
    case TheoremTag::G: return k >= a.alpha();
    case TheoremTag::T1:
    case TheoremTag::T2: return true;
    case TheoremTag::T3: return k >= 2;
    case TheoremTag::T4: return k >= 2 && 3 * d >= n + k;
    case TheoremTag::T5:
      return k >= 3 && 4 * d >= n + 2 * k && d >= a.alpha();
    case TheoremTag::T6: return k >= 3;
    case TheoremTag::T7:
    case TheoremTag::T8: return k >= 4 && d >= a.alpha();
    case TheoremTag::T9:
    case TheoremTag::T10: return k >= 4;
    case TheoremTag::T11:
      // delta >= (n+2)/(l+1) + l - 2, cross-multiplied by l+1.
      return k >= l && (l + 1) * d >= n + 2 + (l - 2) * (l + 1);
    case TheoremTag::T12: return k >= l + 1;
    case TheoremTag::T13: return k >= l + 2 && d >= a.alpha() + l - 1;
    case TheoremTag::T14: return q <= d * d + d - 1;
    case TheoremTag::T15:
      // kappa >= 2 forces d >= 2; the d >= 3 threshold is odd, so compare
      // doubled: 2q <= 3(d-1)(d+2) - 1.
      return k >= 2 && (d == 2 ? q <= 8 : 2 * q <= 3 * (d - 1) * (d + 2) - 1);
    case TheoremTag::T16: return a.tau().greater_than(Rational(1));
    case TheoremTag::T17:
      return a.tau().greater_than(Rational(1)) && 3 * d >= n - 2;
    case TheoremTag::T18:
      return a.tau().at_least(Rational(1)) && 3 * d >= n - 2;
  }
  return false;
}

ConclusionResult conclusion_holds(TheoremId id, const GraphAnalysis& a) {
  const int n = a.order();
  const int d = a.min_degree();
  const int k = a.kappa();
  const int l = id.lambda;
  switch (id.tag) {
    case TheoremTag::A:
    case TheoremTag::E:
    case TheoremTag::G:
    case TheoremTag::T4:
    case TheoremTag::T5:
    case TheoremTag::T14:
      return simple(a.hamiltonian(), "graph is not hamiltonian");
    case TheoremTag::B:
      return circumference_at_least(a, std::min<long long>(n, 2 * d));
    case TheoremTag::C:
    case TheoremTag::T15:
    case TheoremTag::T17:
    case TheoremTag::T18:
      return every_longest_cd(a, 2, "dominating");
    case TheoremTag::D: {
      if (a.circumference() >= 3 * d - 3) return simple(true, "");
      ConclusionResult r = every_longest_cd(a, 2, "dominating");
      if (!r.holds)
        r.detail = "circumference below 3*delta-3 and " + r.detail;
      return r;
    }
    case TheoremTag::F:
      return circumference_at_least(a, std::min<long long>(n, 3 * d - 3));
    case TheoremTag::T1: {
      require_complete_sets(a);
      for (std::size_t i = 0; i < a.residuals().size(); ++i) {
        long long bound = t1_bound(a.residuals()[i].path_edges, d);
        if (a.circumference() < bound) {
          ConclusionResult out;
          out.holds = false;
          out.offending_set = static_cast<int>(i);
          out.detail = "circumference " + std::to_string(a.circumference()) +
                       " below path-residual bound " + std::to_string(bound);
          return out;
        }
      }
      return simple(true, "");
    }
    case TheoremTag::T2: {
      require_complete_sets(a);
      for (std::size_t i = 0; i < a.residuals().size(); ++i) {
        long long bound = t2_bound(a.residuals()[i].cycle_order, d);
        if (a.circumference() < bound) {
          ConclusionResult out;
          out.holds = false;
          out.offending_set = static_cast<int>(i);
          out.detail = "circumference " + std::to_string(a.circumference()) +
                       " below cycle-residual bound " + std::to_string(bound);
          return out;
        }
      }
      return simple(true, "");
    }
    case TheoremTag::T3: {
      require_complete_sets(a);
      for (std::size_t i = 0; i < a.residuals().size(); ++i) {
        Rational bound = t3_bound(a.residuals()[i].cycle_order, k, d);
        if (Rational(a.circumference()) < bound) {
          ConclusionResult out;
          out.holds = false;
          out.offending_set = static_cast<int>(i);
          out.detail = "circumference " + std::to_string(a.circumference()) +
                       " below rational bound " + bound.str();
          return out;
        }
      }
      return simple(true, "");
    }
    case TheoremTag::T6:
      return circumference_at_least(a, std::min<long long>(n, 3 * d - k));
    case TheoremTag::T7:
      return circumference_at_least(a, std::min<long long>(n, 4 * d - 2 * k));
    case TheoremTag::T8:
      return circumference_at_least(a,
                                    std::min<long long>(n, 4 * d - k - 4));
    case TheoremTag::T9: {
      if (a.circumference() >= 4 * d - 2 * k) return simple(true, "");
      return simple(a.has_dominating_cycle(),
                    "circumference below 4*delta-2*kappa and no dominating "
                    "cycle exists");
    }
    case TheoremTag::T10: {
      if (a.circumference() >= 4 * d - k - 4) return simple(true, "");
      ConclusionResult r = every_longest_cd(a, 2, "dominating");
      if (!r.holds)
        r.detail = "circumference below 4*delta-kappa-4 and " + r.detail;
      return r;
    }
    case TheoremTag::T11: {
      // Under the hypothesis min{l, d-l+1} >= 1; residual_is_cd treats any
      // smaller value as "residual must be empty".
      int m = std::min(l, d - l + 1);
      return every_longest_cd(a, m, "CD_" + std::to_string(m));
    }
    case TheoremTag::T12: {
      if (a.circumference() >= static_cast<long long>(l + 1) * (d - l + 1))
        return simple(true, "");
      int m = std::min(l, d - l);
      ConclusionResult r =
          every_longest_cd(a, m, "CD_" + std::to_string(m));
      if (!r.holds)
        r.detail = "circumference below (lambda+1)(delta-lambda+1) and " +
                   r.detail;
      return r;
    }
    case TheoremTag::T13:
      return circumference_at_least(
          a, std::min<long long>(n, static_cast<long long>(l + 2) * (d - l)));
    case TheoremTag::T16:
      return circumference_at_least(a, std::min<long long>(n, 2 * d + 5));
  }
  return simple(false, "unknown theorem");
}

Verdict check_theorem(TheoremId id, const GraphAnalysis& a) {
  if (needs_lambda(id.tag) && id.lambda < 1)
    throw std::invalid_argument("theorem " + to_string(id.tag) +
                                " needs lambda >= 1");
  Verdict v;
  if (!hypothesis_holds(id, a)) {
    v.kind = Verdict::Kind::Inapplicable;
    return v;
  }
  ConclusionResult con = conclusion_holds(id, a);
  if (con.holds) {
    v.kind = Verdict::Kind::Holds;
    return v;
  }

  Verdict::Witness w;
  w.graph6 = write_graph6(a.graph());
  w.invariants = a.invariant_record();
  w.detail = con.detail;
  if (con.offending_set >= 0) {
    VertexSet s = a.longest_sets()[con.offending_set];
    LongestCycles cycles = all_longest_cycles(a.graph());
    for (const CycleCertificate& c : cycles.cycles)
      if (c.vertex_set() == s) {
        w.cycle = c.vertices();
        break;
      }
  }

  if (id.tag == TheoremTag::T16 && is_petersen(a.graph())) {
    w.detail = "conclusion fails on the allowed exception (Petersen graph)";
    v.kind = Verdict::Kind::ExceptionAllowed;
    v.witness = std::move(w);
    return v;
  }
  if (id.tag == TheoremTag::T18) {
    w.detail = "conclusion fails; graph collected as exception candidate";
    v.kind = Verdict::Kind::ExceptionAllowed;
    v.witness = std::move(w);
    return v;
  }
  v.kind = Verdict::Kind::Violated;
  v.witness = std::move(w);
  return v;
}

Verdict check_theorem(TheoremId id, const Graph& g) {
  GraphAnalysis a(g);
  return check_theorem(id, a);
}

std::map<TheoremId, Verdict> check_all(const GraphAnalysis& a,
                                       const std::vector<TheoremTag>& tags,
                                       LambdaRange lambdas) {
  if (lambdas.lo < 1 || lambdas.hi < lambdas.lo)
    throw std::invalid_argument("bad lambda range");
  std::map<TheoremId, Verdict> out;
  for (TheoremTag tag : tags) {
    if (needs_lambda(tag)) {
      for (int l = lambdas.lo; l <= lambdas.hi; ++l)
        out[{tag, l}] = check_theorem({tag, l}, a);
    } else {
      out[{tag, 0}] = check_theorem({tag, 0}, a);
    }
  }
  return out;
}

std::map<TheoremId, Verdict> check_all(const Graph& g, LambdaRange lambdas) {
  GraphAnalysis a(g);
  return check_all(a, all_tags(), lambdas);
}

}  // namespace hamlab
