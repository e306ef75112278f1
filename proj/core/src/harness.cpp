#include "hamlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hamlab/errors.hpp"
#include "hamlab/graph6.hpp"

namespace hamlab {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hamlab.report/1";

std::string trimmed(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

struct LineOutcome {
  bool blank = true;
  std::string graph6;
  std::optional<InputErrorRecord> error;
  std::map<TheoremId, Verdict> verdicts;
  std::vector<std::string> undecided_reasons;
};

std::vector<TheoremId> expand_selection(const std::vector<TheoremTag>& tags,
                                        LambdaRange lambdas) {
  std::vector<TheoremId> ids;
  for (TheoremTag tag : tags) {
    if (needs_lambda(tag)) {
      for (int l = lambdas.lo; l <= lambdas.hi; ++l) ids.push_back({tag, l});
    } else {
      ids.push_back({tag, 0});
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

LineOutcome process_line(const std::string& raw, const CheckOptions& options,
                         const std::vector<TheoremId>& ids) {
  LineOutcome out;
  out.graph6 = trimmed(raw);
  if (out.graph6.empty()) return out;
  out.blank = false;
  Graph g;
  try {
    g = parse_graph6(out.graph6);
  } catch (const ParseError& e) {
    out.error = InputErrorRecord{0, e.offset(), e.what()};
    return out;
  }
  if (g.order() == 0) {
    out.error = InputErrorRecord{0, 0, "order-0 graph cannot be checked"};
    return out;
  }
  GraphAnalysis analysis(g, options.cycle_cap);
  for (TheoremId id : ids) {
    try {
      out.verdicts[id] = check_theorem(id, analysis);
    } catch (const UndecidedError& e) {
      out.undecided_reasons.push_back(to_string(id) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      // Solver order caps (e.g. exact toughness) surface here.
      out.undecided_reasons.push_back(to_string(id) + ": " + e.what());
    }
  }
  return out;
}

json to_json(const InvariantRecord& r) {
  return json{{"n", r.n},
              {"q", r.q},
              {"min_degree", r.min_degree},
              {"kappa", r.kappa},
              {"alpha", r.alpha},
              {"tau", r.tau.str()},
              {"connected", r.connected},
              {"components", r.components}};
}

json to_json(const Verdict::Witness& w) {
  json j{{"graph6", w.graph6},
         {"invariants", to_json(w.invariants)},
         {"detail", w.detail}};
  if (!w.cycle.empty()) j["cycle"] = w.cycle;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

VerificationReport verify_stream(std::istream& in,
                                 const CheckOptions& options) {
  auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.options = options;

  std::vector<TheoremId> ids = expand_selection(options.theorems, options.lambdas);
  for (TheoremId id : ids) report.totals[id];  // materialize stable row order

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  std::vector<LineOutcome> outcomes(lines.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1 || lines.size() < 2) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      outcomes[i] = process_line(lines[i], options, ids);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= lines.size()) return;
        outcomes[i] = process_line(lines[i], options, ids);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    LineOutcome& o = outcomes[i];
    if (o.blank) continue;
    std::size_t line_no = i + 1;
    if (o.error) {
      o.error->line = line_no;
      report.input_errors.push_back(*o.error);
      continue;
    }
    ++report.graphs;
    for (auto& [id, verdict] : o.verdicts) {
      TheoremTotals& t = report.totals[id];
      switch (verdict.kind) {
        case Verdict::Kind::Inapplicable: ++t.inapplicable; break;
        case Verdict::Kind::Holds: ++t.holds; break;
        case Verdict::Kind::ExceptionAllowed:
          ++t.exception;
          report.exceptions.push_back({line_no, id, *verdict.witness});
          break;
        case Verdict::Kind::Violated:
          ++t.violated;
          report.violations.push_back({line_no, id, *verdict.witness});
          break;
      }
    }
    if (!o.undecided_reasons.empty()) {
      std::string reason;
      for (const std::string& r : o.undecided_reasons) {
        if (!reason.empty()) reason += "; ";
        reason += r;
      }
      report.undecided.push_back({line_no, o.graph6, reason});
    }
  }

  if (options.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return report;
}

std::string render_json(const VerificationReport& report) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "check";
  json theorems = json::array();
  for (TheoremTag tag : report.options.theorems)
    theorems.push_back(to_string(tag));
  j["meta"] = {{"source", report.options.source},
               {"theorems", theorems},
               {"lambda", {{"lo", report.options.lambdas.lo},
                           {"hi", report.options.lambdas.hi}}},
               {"graphs", report.graphs}};
  json totals = json::array();
  for (const auto& [id, t] : report.totals)
    totals.push_back(json{{"theorem", to_string(id)},
                          {"inapplicable", t.inapplicable},
                          {"holds", t.holds},
                          {"exception", t.exception},
                          {"violated", t.violated}});
  j["totals"] = totals;
  json violations = json::array();
  for (const ViolationRecord& v : report.violations) {
    json row = to_json(v.witness);
    row["line"] = v.line;
    row["theorem"] = to_string(v.theorem);
    violations.push_back(row);
  }
  j["violations"] = violations;
  json exceptions = json::array();
  for (const ExceptionRecord& e : report.exceptions) {
    json row = to_json(e.witness);
    row["line"] = e.line;
    row["theorem"] = to_string(e.theorem);
    exceptions.push_back(row);
  }
  j["exceptions"] = exceptions;
  json undecided = json::array();
  for (const UndecidedRecord& u : report.undecided)
    undecided.push_back(
        json{{"line", u.line}, {"graph6", u.graph6}, {"reason", u.reason}});
  j["undecided"] = undecided;
  json errors = json::array();
  for (const InputErrorRecord& e : report.input_errors)
    errors.push_back(json{
        {"line", e.line}, {"offset", e.offset}, {"message", e.message}});
  j["input_errors"] = errors;
  if (report.elapsed_ms) j["elapsed_ms"] = *report.elapsed_ms;
  return dump(j);
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "graphs checked: " << report.graphs << "  (source: "
      << report.options.source << ")\n";
  out << "theorem      inapplicable      holds  exception   violated\n";
  for (const auto& [id, t] : report.totals) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-10s %14lld %10lld %10lld %10lld\n",
                  to_string(id).c_str(), t.inapplicable, t.holds, t.exception,
                  t.violated);
    out << buf;
  }
  if (!report.violations.empty()) {
    out << "violations:\n";
    for (const ViolationRecord& v : report.violations) {
      out << "  line " << v.line << "  " << to_string(v.theorem) << "  "
          << v.witness.graph6 << "  " << v.witness.detail << "\n";
    }
  } else {
    out << "violations: none\n";
  }
  for (const ExceptionRecord& e : report.exceptions)
    out << "exception: line " << e.line << "  " << to_string(e.theorem) << "  "
        << e.witness.graph6 << "  " << e.witness.detail << "\n";
  for (const UndecidedRecord& u : report.undecided)
    out << "undecided: line " << u.line << "  " << u.graph6 << "  " << u.reason
        << "\n";
  for (const InputErrorRecord& e : report.input_errors)
    out << "input error: line " << e.line << " offset " << e.offset << ": "
        << e.message << "\n";
  if (report.elapsed_ms) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "elapsed: %.1f ms\n", *report.elapsed_ms);
    out << buf;
  }
  return out.str();
}

// --- sharpness -------------------------------------------------------------

std::vector<std::pair<std::string, ParamRange>> parse_param_grid(
    const std::string& text) {
  std::vector<std::pair<std::string, ParamRange>> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid item '" + item + "' missing '='");
    std::string name = trimmed(item.substr(0, eq));
    std::string value = trimmed(item.substr(eq + 1));
    ParamRange range;
    std::size_t dots = value.find("..");
    try {
      if (dots == std::string::npos) {
        range.lo = range.hi = std::stoi(value);
      } else {
        range.lo = std::stoi(value.substr(0, dots));
        range.hi = std::stoi(value.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("grid item '" + item + "' is not an integer "
                                  "or lo..hi range");
    }
    if (range.hi < range.lo)
      throw std::invalid_argument("grid item '" + item + "' has empty range");
    grid.emplace_back(name, range);
  }
  return grid;
}

namespace {

bool bound_mode(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::B:
    case TheoremTag::D:
    case TheoremTag::F:
    case TheoremTag::T1:
    case TheoremTag::T2:
    case TheoremTag::T3:
    case TheoremTag::T6:
    case TheoremTag::T7:
    case TheoremTag::T8:
    case TheoremTag::T9:
    case TheoremTag::T10:
    case TheoremTag::T12:
    case TheoremTag::T13:
    case TheoremTag::T16:
      return true;
    default:
      return false;
  }
}

std::optional<Rational> claimed_bound(TheoremId id, const GraphAnalysis& a) {
  const long long n = a.order(), d = a.min_degree(), k = a.kappa();
  const long long l = id.lambda;
  switch (id.tag) {
    case TheoremTag::B: return Rational(std::min(n, 2 * d));
    case TheoremTag::D: return Rational(3 * d - 3);
    case TheoremTag::F: return Rational(std::min(n, 3 * d - 3));
    case TheoremTag::T6: return Rational(std::min(n, 3 * d - k));
    case TheoremTag::T7: return Rational(std::min(n, 4 * d - 2 * k));
    case TheoremTag::T8: return Rational(std::min(n, 4 * d - k - 4));
    case TheoremTag::T9: return Rational(4 * d - 2 * k);
    case TheoremTag::T10: return Rational(4 * d - k - 4);
    case TheoremTag::T12: return Rational((l + 1) * (d - l + 1));
    case TheoremTag::T13: return Rational(std::min(n, (l + 2) * (d - l)));
    case TheoremTag::T16: return Rational(std::min(n, 2 * d + 5));
    case TheoremTag::T1: {
      std::optional<Rational> best;
      for (const ResidualParams& r : a.residuals()) {
        Rational b(t1_bound(r.path_edges, static_cast<int>(d)));
        if (!best || *best < b) best = b;
      }
      return best;
    }
    case TheoremTag::T2: {
      std::optional<Rational> best;
      for (const ResidualParams& r : a.residuals()) {
        Rational b(t2_bound(r.cycle_order, static_cast<int>(d)));
        if (!best || *best < b) best = b;
      }
      return best;
    }
    case TheoremTag::T3: {
      if (k < 2) return std::nullopt;
      std::optional<Rational> best;
      for (const ResidualParams& r : a.residuals()) {
        Rational b = t3_bound(r.cycle_order, static_cast<int>(k),
                              static_cast<int>(d));
        if (!best || *best < b) best = b;
      }
      return best;
    }
    default:
      return std::nullopt;
  }
}

// Thresholds the audit probes one notch past their stated value, matching
// the remarked "cannot be relaxed" claims.
std::optional<bool> relaxed_hypothesis(TheoremId id, const GraphAnalysis& a) {
  const int n = a.order(), q = a.edge_count(), d = a.min_degree(),
            k = a.kappa();
  switch (id.tag) {
    case TheoremTag::T4:
      return k >= 2 && 3 * d >= n + k - 1;
    case TheoremTag::T5:
      return k >= 3 && 4 * d >= n + 2 * k - 1 && d >= a.alpha();
    case TheoremTag::T14:
      return q <= d * d + d;
    case TheoremTag::T15:
      return k >= 2 &&
             (d == 2 ? q <= 9 : 2 * q <= 3 * (d - 1) * (d + 2) + 1);
    default:
      return std::nullopt;
  }
}

}  // namespace

SharpnessReport sharpness_audit(
    Family family, const std::vector<std::pair<std::string, ParamRange>>& grid,
    TheoremId theorem, int max_order) {
  SharpnessReport report;
  report.family = family;
  report.theorem = theorem;

  std::vector<std::string> names = family_parameters(family);
  for (const auto& [name, range] : grid) {
    (void)range;
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw std::invalid_argument("family " + to_string(family) +
                                  " has no parameter '" + name + "'");
  }
  std::vector<ParamRange> ranges;
  for (const std::string& name : names) {
    auto it = std::find_if(grid.begin(), grid.end(),
                           [&](const auto& p) { return p.first == name; });
    if (it == grid.end())
      throw std::invalid_argument("grid is missing parameter '" + name + "'");
    ranges.push_back(it->second);
  }

  std::vector<int> values;
  for (const ParamRange& r : ranges) values.push_back(r.lo);
  for (;;) {
    SharpnessInstance inst;
    FamilySpec spec{family, {}};
    for (std::size_t i = 0; i < names.size(); ++i)
      spec.params[names[i]] = values[i];
    inst.params = spec.params;
    try {
      Graph g = make_family(spec);
      if (g.order() > max_order) {
        inst.skipped = "order " + std::to_string(g.order()) +
                       " exceeds audit limit " + std::to_string(max_order);
      } else {
        GraphAnalysis a(g);
        inst.graph6 = write_graph6(g);
        inst.n = a.order();
        inst.q = a.edge_count();
        inst.min_degree = a.min_degree();
        inst.kappa = a.kappa();
        inst.alpha = a.alpha();
        inst.circumference = a.circumference();
        inst.hamiltonian = a.hamiltonian();
        inst.verdict = to_string(check_theorem(theorem, a).kind);
        inst.hypothesis = hypothesis_holds(theorem, a);
        inst.conclusion = conclusion_holds(theorem, a).holds;
        if (bound_mode(theorem.tag)) {
          std::optional<Rational> bound = claimed_bound(theorem, a);
          if (bound) {
            inst.bound = bound->str();
            inst.equality = (*bound == Rational(a.circumference()));
          }
        }
        if (auto relaxed = relaxed_hypothesis(theorem, a))
          inst.relaxed_falsifies = *relaxed && !inst.conclusion;
      }
    } catch (const std::invalid_argument& e) {
      inst.skipped = e.what();
    } catch (const UndecidedError& e) {
      inst.skipped = e.what();
    }
    report.instances.push_back(std::move(inst));

    std::size_t pos = values.size();
    while (pos > 0) {
      --pos;
      if (values[pos] < ranges[pos].hi) {
        ++values[pos];
        break;
      }
      values[pos] = ranges[pos].lo;
      if (pos == 0) return report;
    }
    if (names.empty()) return report;
  }
}

std::string render_json(const SharpnessReport& report) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "sharpness";
  j["family"] = to_string(report.family);
  j["theorem"] = to_string(report.theorem);
  json instances = json::array();
  for (const SharpnessInstance& inst : report.instances) {
    json row;
    row["params"] = inst.params;
    if (inst.skipped) {
      row["skipped"] = *inst.skipped;
      instances.push_back(row);
      continue;
    }
    row["graph6"] = inst.graph6;
    row["n"] = inst.n;
    row["q"] = inst.q;
    row["min_degree"] = inst.min_degree;
    row["kappa"] = inst.kappa;
    row["alpha"] = inst.alpha;
    row["circumference"] = inst.circumference;
    row["hamiltonian"] = inst.hamiltonian;
    row["verdict"] = inst.verdict;
    row["hypothesis"] = inst.hypothesis;
    row["conclusion"] = inst.conclusion;
    if (inst.bound) row["bound"] = *inst.bound;
    if (inst.equality) row["equality"] = *inst.equality;
    if (inst.relaxed_falsifies) row["relaxed_falsifies"] = *inst.relaxed_falsifies;
    instances.push_back(row);
  }
  j["instances"] = instances;
  return dump(j);
}

std::string render_text(const SharpnessReport& report) {
  std::ostringstream out;
  out << "sharpness audit: family=" << to_string(report.family)
      << " theorem=" << to_string(report.theorem) << "\n";
  for (const SharpnessInstance& inst : report.instances) {
    out << "  ";
    bool first = true;
    for (const auto& [k, v] : inst.params) {
      if (!first) out << ",";
      out << k << "=" << v;
      first = false;
    }
    if (inst.params.empty()) out << "(no parameters)";
    if (inst.skipped) {
      out << "  skipped: " << *inst.skipped << "\n";
      continue;
    }
    out << "  n=" << inst.n << " q=" << inst.q << " delta=" << inst.min_degree
        << " kappa=" << inst.kappa << " c=" << inst.circumference
        << (inst.hamiltonian ? " hamiltonian" : " non-hamiltonian")
        << " verdict=" << inst.verdict;
    if (inst.bound) {
      out << " bound=" << *inst.bound
          << (inst.equality && *inst.equality ? " (equality)" : "");
    }
    if (inst.relaxed_falsifies)
      out << " relaxed_falsifies=" << (*inst.relaxed_falsifies ? "yes" : "no");
    out << "\n";
  }
  return out.str();
}

// --- invariants -------------------------------------------------------------

std::vector<InvariantRow> invariants_stream(std::istream& in) {
  std::vector<InvariantRow> rows;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string text = trimmed(line);
    if (text.empty()) continue;
    InvariantRow row;
    row.line = line_no;
    row.graph6 = text;
    try {
      Graph g = parse_graph6(text);
      row.record = compute_invariants(g);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_json(const std::vector<InvariantRow>& rows) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "invariants";
  json arr = json::array();
  for (const InvariantRow& row : rows) {
    json r{{"line", row.line}, {"graph6", row.graph6}};
    if (row.record) r["invariants"] = to_json(*row.record);
    if (row.error) r["error"] = *row.error;
    arr.push_back(r);
  }
  j["graphs"] = arr;
  return dump(j);
}

std::string render_text(const std::vector<InvariantRow>& rows) {
  std::ostringstream out;
  out << "graph6                      n    q  delta  kappa  alpha  tau      "
         "connected\n";
  for (const InvariantRow& row : rows) {
    if (row.error) {
      out << row.graph6 << "  error: " << *row.error << "\n";
      continue;
    }
    const InvariantRecord& r = *row.record;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-24s %4d %4d %6d %6d %6d  %-8s %s\n",
                  row.graph6.c_str(), r.n, r.q, r.min_degree, r.kappa, r.alpha,
                  r.tau.str().c_str(), r.connected ? "yes" : "no");
    out << buf;
  }
  return out.str();
}

}  // namespace hamlab
