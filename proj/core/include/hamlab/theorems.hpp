#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/analysis.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/invariants.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

/// The checker's catalog: classical fundamentals A-G (Dirac, Nash-Williams,
/// Jung, Chvatal-Erdos) and the refinements T1-T18 built on connectivity,
/// toughness and the residual parameters of a longest cycle.
enum class TheoremTag {
  A, B, C, D, E, F, G,
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10,
  T11, T12, T13, T14, T15, T16, T17, T18,
};

/// T11-T13 are one-parameter schemas; everything else ignores lambda.
bool needs_lambda(TheoremTag tag);

struct TheoremId {
  TheoremTag tag;
  int lambda = 0;  // >= 1 iff needs_lambda(tag)

  auto operator<=>(const TheoremId&) const = default;
};

std::string to_string(TheoremId id);
std::string to_string(TheoremTag tag);
std::optional<TheoremTag> parse_tag(const std::string& text);
std::vector<TheoremTag> all_tags();

/// Lower bound on |C| from the residual path length (in edges):
/// (p + 2) * (delta - p).
long long t1_bound(int path_edges, int delta);

/// Lower bound on |C| from the residual cycle order:
/// (c + 1) * (delta - c + 1).
long long t2_bound(int cycle_order, int delta);

/// Piecewise rational bound, kappa >= 2 required: for c >= kappa it is
/// (c+1) * kappa * (delta+2) / (c+kappa+1), otherwise
/// (c+1) * c * (delta+2) / (2c+1).
Rational t3_bound(int cycle_order, int kappa, int delta);

struct Verdict {
  enum class Kind { Inapplicable, Holds, ExceptionAllowed, Violated };

  struct Witness {
    std::string graph6;
    InvariantRecord invariants;
    std::vector<int> cycle;  // offending longest cycle, when one exists
    std::string detail;
  };

  Kind kind = Kind::Inapplicable;
  std::optional<Witness> witness;  // always present for Violated
};

std::string to_string(Verdict::Kind kind);

bool hypothesis_holds(TheoremId id, const GraphAnalysis& a);

struct ConclusionResult {
  bool holds = false;
  int offending_set = -1;  // index into analysis.longest_sets()
  std::string detail;
};

/// Conclusion predicate alone, ignoring the hypothesis. Universal checks
/// throw UndecidedError when the cycle enumeration was truncated.
ConclusionResult conclusion_holds(TheoremId id, const GraphAnalysis& a);

Verdict check_theorem(TheoremId id, const GraphAnalysis& a);
Verdict check_theorem(TheoremId id, const Graph& g);

struct LambdaRange {
  int lo = 1;
  int hi = 5;
};

/// Evaluates every theorem in `tags` (expanding the lambda schemas over the
/// range) against one shared analysis.
std::map<TheoremId, Verdict> check_all(
    const GraphAnalysis& a, const std::vector<TheoremTag>& tags,
    LambdaRange lambdas = {});
std::map<TheoremId, Verdict> check_all(const Graph& g, LambdaRange lambdas = {});

}  // namespace hamlab
