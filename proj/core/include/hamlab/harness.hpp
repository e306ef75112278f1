#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/families.hpp"
#include "hamlab/theorems.hpp"

namespace hamlab {

/// Family instances above this order are skipped with a notice rather than
/// handed to the exponential solvers.
constexpr int kMaxAuditOrder = 24;

struct CheckOptions {
  std::vector<TheoremTag> theorems = all_tags();
  LambdaRange lambdas;
  std::size_t cycle_cap = kDefaultCycleSetCap;
  int jobs = 1;
  bool timing = false;
  std::string source = "-";
};

struct TheoremTotals {
  long long inapplicable = 0;
  long long holds = 0;
  long long exception = 0;
  long long violated = 0;
};

struct ViolationRecord {
  std::size_t line = 0;
  TheoremId theorem;
  Verdict::Witness witness;
};

struct ExceptionRecord {
  std::size_t line = 0;
  TheoremId theorem;
  Verdict::Witness witness;
};

struct UndecidedRecord {
  std::size_t line = 0;
  std::string graph6;
  std::string reason;
};

struct InputErrorRecord {
  std::size_t line = 0;
  std::size_t offset = 0;
  std::string message;
};

struct VerificationReport {
  std::map<TheoremId, TheoremTotals> totals;
  std::vector<ViolationRecord> violations;
  std::vector<ExceptionRecord> exceptions;  // T16 Petersen clause, T18 collection
  std::vector<UndecidedRecord> undecided;
  std::vector<InputErrorRecord> input_errors;
  std::size_t graphs = 0;
  CheckOptions options;
  std::optional<double> elapsed_ms;

  bool ok() const { return violations.empty() && input_errors.empty(); }
};

/// Runs the selected theorems over a graph6 stream, one graph per line.
/// Deterministic for fixed input regardless of the worker count: the merge
/// is by input line order.
VerificationReport verify_stream(std::istream& in, const CheckOptions& options);

std::string render_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

// --- sharpness audit ----------------------------------------------------

struct ParamRange {
  int lo = 0;
  int hi = 0;
};

/// Parses "kappa=2..6,delta=4" into named integer ranges.
std::vector<std::pair<std::string, ParamRange>> parse_param_grid(
    const std::string& text);

struct SharpnessInstance {
  std::map<std::string, int> params;
  std::optional<std::string> skipped;  // reason when not evaluated
  std::string graph6;
  int n = 0, q = 0, min_degree = 0, kappa = 0, alpha = 0;
  int circumference = 0;
  bool hamiltonian = false;
  std::string verdict;
  bool hypothesis = false;
  bool conclusion = false;
  /// For bound-style theorems: the claimed lower bound at this instance
  /// (max over longest cycles for the residual-parameter bounds) and
  /// whether the circumference meets it exactly.
  std::optional<std::string> bound;
  std::optional<bool> equality;
  /// For threshold-style theorems with a remarked relaxation: whether the
  /// relaxed hypothesis would admit this (conclusion-violating) instance.
  std::optional<bool> relaxed_falsifies;
};

struct SharpnessReport {
  Family family;
  TheoremId theorem;
  std::vector<SharpnessInstance> instances;
};

SharpnessReport sharpness_audit(
    Family family, const std::vector<std::pair<std::string, ParamRange>>& grid,
    TheoremId theorem, int max_order = kMaxAuditOrder);

std::string render_json(const SharpnessReport& report);
std::string render_text(const SharpnessReport& report);

// --- invariant table ------------------------------------------------------

struct InvariantRow {
  std::size_t line = 0;
  std::string graph6;
  std::optional<InvariantRecord> record;
  std::optional<std::string> error;
};

std::vector<InvariantRow> invariants_stream(std::istream& in);

std::string render_json(const std::vector<InvariantRow>& rows);
std::string render_text(const std::vector<InvariantRow>& rows);

}  // namespace hamlab
