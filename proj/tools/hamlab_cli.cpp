// hamlab command-line front end: enumerate small graphs, run the theorem
// catalog over graph6 streams, audit sharpness families, print invariants.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hamlab/enumerate.hpp"
#include "hamlab/graph6.hpp"
#include "hamlab/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

hamlab::LambdaRange parse_lambda_range(const std::string& text) {
  hamlab::LambdaRange range;
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(text);
    } else {
      range.lo = std::stoi(text.substr(0, dots));
      range.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--lambda expects K or LO..HI");
  }
  if (range.lo < 1 || range.hi < range.lo)
    throw CLI::ValidationError("--lambda range must satisfy 1 <= lo <= hi");
  return range;
}

std::vector<hamlab::TheoremTag> parse_theorem_selection(
    const std::string& text) {
  if (text == "all") return hamlab::all_tags();
  std::vector<hamlab::TheoremTag> tags;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto tag = hamlab::parse_tag(item);
    if (!tag)
      throw CLI::ValidationError("unknown theorem '" + item +
                                 "' (use A..G, T1..T18 or 'all')");
    tags.push_back(*tag);
  }
  if (tags.empty()) throw CLI::ValidationError("empty theorem selection");
  return tags;
}

// Returns an owning reader for "-" (stdin) or a file path.
std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") {
    return std::make_unique<std::istream>(std::cin.rdbuf());
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open input file: " + path);
  return file;
}

int run_enumerate(int n, bool connected) {
  for (const hamlab::Graph& g : hamlab::enumerate_graphs(n, connected))
    std::cout << hamlab::write_graph6(g) << "\n";
  return kExitOk;
}

int run_check(const std::string& graphs, const std::string& theorems,
              const std::string& lambda, const std::string& format, int jobs,
              bool timing, std::size_t cycle_cap) {
  hamlab::CheckOptions options;
  options.theorems = parse_theorem_selection(theorems);
  options.lambdas = parse_lambda_range(lambda);
  options.jobs = jobs;
  options.timing = timing;
  options.cycle_cap = cycle_cap;
  options.source = graphs;
  auto in = open_input(graphs);
  hamlab::VerificationReport report = hamlab::verify_stream(*in, options);
  std::cout << (format == "json" ? hamlab::render_json(report)
                                 : hamlab::render_text(report));
  if (!report.input_errors.empty()) return kExitError;
  return report.violations.empty() ? kExitOk : kExitViolations;
}

int run_sharpness(const std::string& family_name, const std::string& params,
                  const std::string& theorem, int lambda,
                  const std::string& format, int max_order) {
  auto family = hamlab::parse_family(family_name);
  if (!family)
    throw CLI::ValidationError("unknown family '" + family_name + "'");
  auto tag = hamlab::parse_tag(theorem);
  if (!tag) throw CLI::ValidationError("unknown theorem '" + theorem + "'");
  hamlab::TheoremId id{*tag, hamlab::needs_lambda(*tag) ? lambda : 0};
  auto grid = hamlab::parse_param_grid(params);
  hamlab::SharpnessReport report =
      hamlab::sharpness_audit(*family, grid, id, max_order);
  std::cout << (format == "json" ? hamlab::render_json(report)
                                 : hamlab::render_text(report));
  return kExitOk;
}

int run_invariants(const std::string& graphs, const std::string& format) {
  auto in = open_input(graphs);
  std::vector<hamlab::InvariantRow> rows = hamlab::invariants_stream(*in);
  std::cout << (format == "json" ? hamlab::render_json(rows)
                                 : hamlab::render_text(rows));
  for (const hamlab::InvariantRow& row : rows)
    if (row.error) return kExitError;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact small-graph engine for hamiltonian-type cycle theorems"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand(
      "enumerate", "emit all non-isomorphic graphs of order n as graph6");
  int enum_n = 0;
  bool enum_connected = false;
  enumerate->add_option("--n", enum_n, "graph order (1..8)")->required();
  enumerate->add_flag("--connected", enum_connected,
                      "only connected graphs");

  auto* check = app.add_subcommand(
      "check", "verify theorems over a graph6 stream (exit 1 on violations)");
  std::string check_graphs = "-";
  std::string check_theorems = "all";
  std::string check_lambda = "1..5";
  std::string check_format = "text";
  int check_jobs = 1;
  bool check_timing = false;
  std::size_t check_cycle_cap = hamlab::kDefaultCycleSetCap;
  check->add_option("--graphs", check_graphs, "graph6 file, or - for stdin");
  check->add_option("--theorems", check_theorems,
                    "'all' or comma list, e.g. A,B,T1,T11");
  check->add_option("--lambda", check_lambda,
                    "lambda range LO..HI for T11/T12/T13");
  check->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--jobs", check_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  check->add_flag("--timing", check_timing, "include elapsed time in report");
  check->add_option("--cycle-cap", check_cycle_cap,
                    "longest-cycle sets per graph before 'undecided'");

  auto* sharpness = app.add_subcommand(
      "sharpness", "audit an extremal family against one theorem");
  std::string sh_family, sh_params, sh_theorem;
  std::string sh_format = "text";
  int sh_lambda = 1;
  int sh_max_order = hamlab::kMaxAuditOrder;
  sharpness->add_option("--family", sh_family,
                        "hub|mka_kb|k1_2kd|h|l|gn|gstar|petersen|t15")
      ->required();
  sharpness->add_option("--params", sh_params,
                        "grid, e.g. kappa=2..6,delta=3..6");
  sharpness->add_option("--theorem", sh_theorem, "theorem id, e.g. T1")
      ->required();
  sharpness->add_option("--lambda", sh_lambda, "lambda for T11/T12/T13");
  sharpness->add_option("--format", sh_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sharpness->add_option("--max-order", sh_max_order,
                        "skip instances larger than this");

  auto* invariants = app.add_subcommand(
      "invariants", "per-graph invariant table for a graph6 stream");
  std::string inv_graphs = "-";
  std::string inv_format = "text";
  invariants->add_option("--graphs", inv_graphs,
                         "graph6 file, or - for stdin");
  invariants->add_option("--format", inv_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return run_enumerate(enum_n, enum_connected);
    if (check->parsed())
      return run_check(check_graphs, check_theorems, check_lambda,
                       check_format, check_jobs, check_timing,
                       check_cycle_cap);
    if (sharpness->parsed())
      return run_sharpness(sh_family, sh_params, sh_theorem, sh_lambda,
                           sh_format, sh_max_order);
    if (invariants->parsed()) return run_invariants(inv_graphs, inv_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
