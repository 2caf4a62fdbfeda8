#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rigidity/edge_list_io.hpp"
#include "rigidity/error.hpp"
#include "rigidity/geometric.hpp"
#include "rigidity/indices.hpp"
#include "rigidity/matroid.hpp"
#include "rigidity/numeric_oracle.hpp"
#include "rigidity/report_io.hpp"
#include "rigidity/sweep.hpp"

namespace rigidity::cli {

namespace {

struct AnalyzeArgs {
  std::string input;
  std::optional<int> k;
  std::string format = "text";
};

struct RggArgs {
  long long nodes = 0;
  double side = 0.0;
  std::uint64_t seed = 0;
  double radius = 0.0;
  std::string out;
};

struct SweepArgs {
  long long nodes = 0;
  double side = 0.0;
  int trials = 0;
  double step = 0.0;
  std::uint64_t seed = 0;
  std::string csv;
  std::string svg;
  bool verbose = false;
};

struct VerifyArgs {
  std::string input;
  int seeds = 5;
};

// Thrown for invalid parameters detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

std::string optional_decimal(const std::optional<double>& v) {
  return v ? format_decimal(*v) : "none";
}

void open_output(std::ofstream& file, const std::string& path) {
  file.open(path, std::ios::binary);
  if (!file) throw UsageError{"cannot write '" + path + "'"};
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(a.input);
  const auto report = analyze(g, a.k);
  write_report(out, report, a.format == "machine" ? ReportFormat::kMachine : ReportFormat::kText);
  if (report.k_error) {
    err << "error: " << *report.k_error << '\n';
    return kExitRangeError;
  }
  return kExitOk;
}

int cmd_rgg(const RggArgs& a, std::ostream& out) {
  if (a.nodes < 0) throw UsageError{"--nodes must be >= 0"};
  if (!(a.side > 0.0)) throw UsageError{"--side must be > 0"};
  if (!(a.radius >= 0.0)) throw UsageError{"--radius must be >= 0"};
  const auto dep = sample_deployment(static_cast<std::size_t>(a.nodes), a.side, a.seed);
  const Graph g = geometric_graph(dep, a.radius);

  const std::string dep_path = a.out + ".deployment";
  const std::string edge_path = a.out + ".edges";
  std::ofstream dep_file;
  open_output(dep_file, dep_path);
  write_deployment(dep_file, dep);
  std::ofstream edge_file;
  open_output(edge_file, edge_path);
  write_edge_list(edge_file, g);

  const auto idx = rigidity_and_redundancy(g);
  out << "deployment=" << dep_path << '\n'
      << "edges_file=" << edge_path << '\n'
      << "n=" << g.vertex_count() << '\n'
      << "m=" << g.edge_count() << '\n'
      << "k_r=" << idx.k_r.str() << '\n'
      << "k_r_decimal=" << format_decimal(idx.k_r.to_double()) << '\n'
      << "k_u=" << idx.k_u.str() << '\n'
      << "k_u_decimal=" << format_decimal(idx.k_u.to_double()) << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.nodes < 0) throw UsageError{"--nodes must be >= 0"};
  if (!(a.side > 0.0)) throw UsageError{"--side must be > 0"};
  if (a.trials < 1) throw UsageError{"--trials must be >= 1"};
  if (!(a.step > 0.0) || a.step > 1.0) throw UsageError{"--step must lie in (0, 1]"};
  const auto grid = ratio_grid(a.step);

  std::ofstream csv;
  open_output(csv, a.csv);
  std::ofstream svg;
  if (!a.svg.empty()) open_output(svg, a.svg);

  const auto curve =
      sweep_average(static_cast<std::size_t>(a.nodes), a.side, a.trials, grid, a.seed);
  write_sweep_csv(csv, curve, a.verbose);
  if (svg.is_open()) write_sweep_svg(svg, curve);

  out << "rows=" << curve.size() << '\n'
      << "rigidity_threshold=" << optional_decimal(threshold_ratio(curve, IndexKind::kRigidity))
      << '\n'
      << "redundancy_threshold="
      << optional_decimal(threshold_ratio(curve, IndexKind::kRedundancy)) << '\n'
      << "relative_increase=" << optional_decimal(relative_increase(curve)) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.seeds < 1) throw UsageError{"--seeds must be >= 1"};
  const Graph g = read_edge_list_file(a.input);
  const std::size_t combinatorial = matroid_rank(g);
  out << "matroid_rank=" << combinatorial << '\n';
  int mismatches = 0;
  for (int s = 1; s <= a.seeds; ++s) {
    const std::size_t numeric = generic_rank(g, static_cast<std::uint64_t>(s));
    out << "generic_rank_seed_" << s << '=' << numeric << '\n';
    mismatches += numeric != combinatorial;
  }
  out << "agree=" << (mismatches == 0 ? "true" : "false") << '\n';
  if (mismatches > 0) {
    err << "error: generic rank disagrees with matroid rank on " << mismatches << " of "
        << a.seeds << " seeds\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity and redundancy indices of graphs and random geometric networks",
               args.empty() ? "rigidity" : args.front()};
  app.require_subcommand(1, 1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Rigidity report for an edge-list file");
  analyze_cmd->add_option("--input", analyze_args.input, "Edge-list file")->required();
  analyze_cmd->add_option("--k", analyze_args.k, "Order of the higher redundancy index");
  analyze_cmd->add_option("--format", analyze_args.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  RggArgs rgg_args;
  auto* rgg_cmd = app.add_subcommand("rgg", "Random deployment and its geometric graph");
  rgg_cmd->add_option("--nodes", rgg_args.nodes, "Number of nodes")->required();
  rgg_cmd->add_option("--side", rgg_args.side, "Side length of the square")->required();
  rgg_cmd->add_option("--seed", rgg_args.seed, "64-bit generator seed")->required();
  rgg_cmd->add_option("--radius", rgg_args.radius, "Sensing radius")->required();
  rgg_cmd->add_option("--out", rgg_args.out,
                      "Output prefix; writes PREFIX.deployment and PREFIX.edges")
      ->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Averaged K_r / K_u curves over r_s/d");
  sweep_cmd->add_option("--nodes", sweep_args.nodes, "Nodes per deployment")->required();
  sweep_cmd->add_option("--side", sweep_args.side, "Side length of the square")->required();
  sweep_cmd->add_option("--trials", sweep_args.trials, "Number of deployments")->required();
  sweep_cmd->add_option("--step", sweep_args.step, "Grid step of r_s/d")->required();
  sweep_cmd->add_option("--seed", sweep_args.seed, "Base seed; trial t uses seed + t")
      ->required();
  sweep_cmd->add_option("--csv", sweep_args.csv, "CSV output path")->required();
  sweep_cmd->add_option("--svg", sweep_args.svg, "Optional SVG chart path");
  sweep_cmd->add_flag("--verbose", sweep_args.verbose, "Add exact rational mean columns");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check matroid rank against rigidity-matrix rank");
  verify_cmd->add_option("--input", verify_args.input, "Edge-list file")->required();
  verify_cmd->add_option("--seeds", verify_args.seeds, "Number of random configurations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out, err);
    if (*rgg_cmd) return cmd_rgg(rgg_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out);
    return cmd_verify(verify_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return e.code() == Errc::kKOutOfRange ? kExitRangeError : kExitInputError;
  }
}

}  // namespace rigidity::cli
