// Command-line front end: per-pair reports, range verification, move
// decompositions and SVG drawings of extended diagrams.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "twobridge/audit.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/report.hpp"
#include "twobridge/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct PairArgs {
  twobridge::Int p = 0;
  twobridge::Int q = 0;
};

struct RangeArgs {
  twobridge::Int max_p = 0;
  std::optional<twobridge::Int> full_q;
  unsigned jobs = 0;
  std::string format = "json";
  std::string out;
  std::optional<long> time_budget_ms;
};

void add_pair_positionals(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("p", args.p, "first pair component")->required();
  cmd->add_option("q", args.q, "second pair component (odd, coprime to p)")->required();
}

void add_range_flags(CLI::App* cmd, RangeArgs& args) {
  cmd->add_option("--max-p", args.max_p, "largest p to enumerate")
      ->required()
      ->check(CLI::Range(twobridge::Int{1}, twobridge::kMaxComponent / 8));
  cmd->add_option("--full-q", args.full_q, "enumerate every q <= N instead of 0 < q < 2p")
      ->check(CLI::Range(twobridge::Int{1}, twobridge::kMaxComponent / 8));
  cmd->add_option("--jobs", args.jobs, "worker threads (default: available parallelism)");
  cmd->add_option("--format", args.format, "per-pair encoding")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", args.out, "write per-pair rows here instead of stdout");
  cmd->add_option("--time-budget-ms", args.time_budget_ms,
                  "stop after this many milliseconds; the report is flagged incomplete")
      ->check(CLI::NonNegativeNumber);
}

int run_info(const PairArgs& args) {
  const auto x = twobridge::AdmissiblePair::make(args.p, args.q);
  const auto report = twobridge::report_for(x);
  std::cout << twobridge::to_json(report).dump() << '\n';
  return report.all_checks_pass() ? kExitOk : kExitChecksFailed;
}

int run_decompose(const PairArgs& args) {
  const auto x = twobridge::AdmissiblePair::make(args.p, args.q);
  std::cout << twobridge::format_moves(twobridge::decompose(x)) << '\n';
  return kExitOk;
}

int run_svg(const PairArgs& args, const std::string& out_path) {
  const auto x = twobridge::AdmissiblePair::make(args.p, args.q);
  const auto doc = twobridge::render_svg(x);
  if (out_path.empty()) {
    std::cout << doc;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kExitUsage;
  }
  out << doc;
  return out ? kExitOk : kExitUsage;
}

int run_range(const RangeArgs& args, unsigned families) {
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) {
      std::cerr << "error: cannot write " << args.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& data = args.out.empty() ? std::cout : file;
  std::ostream& summary = args.out.empty() ? std::cerr : std::cout;

  twobridge::RangeOptions options;
  options.max_p = args.max_p;
  if (args.full_q) options.q_range = twobridge::FullQ{*args.full_q};
  options.families = families;
  options.jobs = args.jobs;
  options.keep_pairs = true;
  if (args.time_budget_ms) options.time_budget = std::chrono::milliseconds(*args.time_budget_ms);

  const auto start = std::chrono::steady_clock::now();
  const auto report = twobridge::audit_range(options);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (args.format == "csv") {
    data << twobridge::csv_header() << '\n';
    for (const auto& pa : report.pairs) data << twobridge::to_csv_row(make_pair_report(pa)) << '\n';
  } else {
    for (const auto& pa : report.pairs) data << twobridge::to_json_line(make_pair_report(pa)) << '\n';
    data << twobridge::aggregate_json(report).dump() << '\n';
  }
  data.flush();
  if (!data) {
    std::cerr << "error: failed writing output\n";
    return kExitUsage;
  }

  for (const auto& f : report.failures) {
    std::cerr << "FAILED " << f.check_id << ' ' << f.pair.to_string() << ' ' << f.details.dump()
              << '\n';
  }
  summary << twobridge::summary_line(report, elapsed) << '\n';
  return report.clean() ? kExitOk : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bridge knot invariants: Alexander polynomial, signature, trapezoid audits"};
  app.require_subcommand(1);

  PairArgs info_args;
  auto* info = app.add_subcommand("info", "JSON report for one pair");
  add_pair_positionals(info, info_args);

  PairArgs decompose_args;
  auto* decompose = app.add_subcommand("decompose", "T-move sequence from (1,1)");
  add_pair_positionals(decompose, decompose_args);

  PairArgs svg_args;
  std::string svg_out;
  auto* svg = app.add_subcommand("svg", "SVG drawing of the extended diagram");
  add_pair_positionals(svg, svg_args);
  svg->add_option("--out", svg_out, "output file (default: stdout)");

  RangeArgs verify_args;
  auto* verify = app.add_subcommand("verify", "audit every check over a range of pairs");
  add_range_flags(verify, verify_args);

  RangeArgs audit_args;
  auto* audit = app.add_subcommand("audit", "verify restricted to the structural checks");
  add_range_flags(audit, audit_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return run_info(info_args);
    if (*decompose) return run_decompose(decompose_args);
    if (*svg) return run_svg(svg_args, svg_out);
    if (*verify) return run_range(verify_args, twobridge::kAllChecks);
    if (*audit) return run_range(audit_args, twobridge::kStructuralChecks);
  } catch (const twobridge::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}
