#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chipfire/chain.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/paths.hpp"
#include "chipfire/pencil.hpp"
#include "chipfire/verify.hpp"

namespace {

using namespace chipfire;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string format = "plain";
  double max_seconds = 0.0;
  int jobs = 1;

  bool tsv() const { return format == "tsv"; }
  ExecPolicy policy() const {
    ExecPolicy p;
    p.jobs = jobs;
    if (max_seconds > 0.0) {
      p.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(static_cast<int64_t>(max_seconds * 1000.0));
    }
    return p;
  }
};

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--max-seconds", common.max_seconds,
                  "Soft time budget; suites abort cleanly with a partial report");
  cmd->add_option("--jobs", common.jobs, "Worker threads for rank scans")->check(CLI::Range(1, 256));
}

ModelGraph load_graph(const std::string& graph_file, int chain_g,
                      const std::optional<Rational>& ell, const Rational& m) {
  if (!graph_file.empty() && chain_g > 0) {
    fail(errc::invalid_parameter, "pass either --graph or --chain, not both");
  }
  if (chain_g > 0) {
    ChainOfLoops chain = build_chain_of_loops(chain_g, ell, m);
    if (chain.genericity_warning) {
      std::cerr << "note: ell < 2g-2; edge lengths may not be generic enough\n";
    }
    return chain.graph;
  }
  if (graph_file.empty()) fail(errc::invalid_parameter, "need --graph <file> or --chain <g>");
  std::ifstream in(graph_file);
  if (!in) fail(errc::parse_error, "cannot open graph file: " + graph_file);
  return ModelGraph::parse(in);
}

Divisor load_divisor(const ModelGraph& g, const std::string& divisor_file) {
  std::ifstream in(divisor_file);
  if (!in) fail(errc::parse_error, "cannot open divisor file: " + divisor_file);
  return Divisor::parse(g, in);
}

Rational pick_granularity(const ModelGraph& g, const std::string& granularity) {
  if (!granularity.empty()) return Rational::parse(granularity);
  Rational gcd = g.length_gcd();
  if (!gcd.is_positive()) fail(errc::invalid_input, "graph has no edges");
  return gcd;
}

int run_table(int d_min, int d_max, const CommonOpts& common) {
  std::cout << format_table(pencil_table(d_min, d_max), common.tsv());
  return kExitOk;
}

int run_paths(int g, bool symmetric_only, const CommonOpts&) {
  auto paths = symmetric_only ? enumerate_symmetric_paths(g) : enumerate_paths(g);
  for (const auto& p : paths) std::cout << path_to_string(p) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, int g, int r, int d, const std::string& ell,
               const std::string& granularity, bool allow_large, const CommonOpts& common) {
  SuiteOptions opts;
  if (!ell.empty()) opts.ell = Rational::parse(ell);
  if (!granularity.empty()) opts.granularity = Rational::parse(granularity);
  opts.policy = common.policy();
  opts.allow_large = allow_large;

  VerificationReport report;
  if (suite == "prop2") {
    report = verify_prop2(g, opts);
  } else if (suite == "sigma") {
    report = verify_sigma(g, opts);
  } else if (suite == "bijection") {
    report = verify_bijection(g, opts);
  } else if (suite == "brill-noether") {
    std::cout << "rho = " << brill_noether_rho(g, r, d) << "\n";
    report = verify_brill_noether(g, r, d, opts);
  } else {
    fail(errc::invalid_parameter, "unknown suite: " + suite);
  }
  std::cout << report.to_text(common.tsv());
  return report.failures() == 0 ? kExitOk : kExitVerifyFailed;
}

int run_rank(const std::string& graph_file, int chain_g, const std::string& ell,
             const std::string& divisor_file, const std::string& granularity,
             const CommonOpts& common) {
  std::optional<Rational> ell_opt;
  if (!ell.empty()) ell_opt = Rational::parse(ell);
  ModelGraph graph = load_graph(graph_file, chain_g, ell_opt, Rational(1));
  Divisor divisor = load_divisor(graph, divisor_file);
  RefinedGraph rg = refine(graph, pick_granularity(graph, granularity));
  RankResult result = rank(rg, divisor, common.policy());
  std::cout << "rank " << result.rank << "\n";
  if (!result.witness.is_zero()) {
    std::cout << "witness (degree " << result.witness.degree() << ", |D-E| empty):\n"
              << result.witness.to_text(graph);
  } else {
    std::cout << "witness: empty divisor (|D| itself is empty)\n";
  }
  return kExitOk;
}

int run_reduce(const std::string& graph_file, int chain_g, const std::string& ell,
               const std::string& divisor_file, const std::string& base,
               const std::string& granularity, const CommonOpts&) {
  std::optional<Rational> ell_opt;
  if (!ell.empty()) ell_opt = Rational::parse(ell);
  ModelGraph graph = load_graph(graph_file, chain_g, ell_opt, Rational(1));
  Divisor divisor = load_divisor(graph, divisor_file);
  RefinedGraph rg = refine(graph, pick_granularity(graph, granularity));
  auto base_vertex = graph.find_vertex(base.empty() ? graph.vertex_name(0) : base);
  if (!base_vertex) fail(errc::invalid_parameter, "unknown base vertex: " + base);
  Divisor reduced = reduce(rg, divisor, MetricPoint::at_vertex(*base_vertex));
  std::cout << reduced.to_text(graph);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chip-firing on metric graphs: pencils on chains of loops"};
  app.require_subcommand(1);
  CommonOpts common;

  // table
  auto* table = app.add_subcommand("table", "Pencil counts lambda and lambda' by degree");
  int d_min = 2, d_max = 10;
  table->add_option("--d-min", d_min)->capture_default_str();
  table->add_option("--d-max", d_max)->capture_default_str();
  add_common(table, common);

  // paths
  auto* paths = app.add_subcommand("paths", "Enumerate lattice paths for even genus");
  int paths_g = 0;
  bool symmetric_only = false;
  paths->add_option("--g", paths_g, "Genus (even, >= 2)")->required();
  paths->add_flag("--symmetric", symmetric_only, "Only palindromic paths");
  add_common(paths, common);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int verify_g = 0, bn_r = 1, bn_d = 1;
  std::string verify_ell, verify_granularity;
  bool allow_large = false;
  verify->add_option("suite", suite, "prop2 | sigma | bijection | brill-noether")->required();
  verify->add_option("--g", verify_g, "Genus")->required();
  verify->add_option("--r", bn_r, "Rank (brill-noether)")->capture_default_str();
  verify->add_option("--d", bn_d, "Degree bound (brill-noether)")->capture_default_str();
  verify->add_option("--ell", verify_ell, "Long edge length (default 2g-2)");
  verify->add_option("--granularity", verify_granularity, "Grid step (default gcd of lengths)");
  verify->add_flag("--allow-large", allow_large, "Lift the default genus feasibility bounds");
  add_common(verify, common);

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Rank of a divisor with failing witness");
  std::string rank_graph, rank_div, rank_granularity, rank_ell;
  int rank_chain_g = 0;
  rank_cmd->add_option("--graph", rank_graph, "Graph file");
  rank_cmd->add_option("--chain", rank_chain_g, "Use a chain of loops of this genus");
  rank_cmd->add_option("--ell", rank_ell, "Chain long edge length");
  rank_cmd->add_option("--divisor", rank_div, "Divisor file")->required();
  rank_cmd->add_option("--granularity", rank_granularity, "Grid step");
  add_common(rank_cmd, common);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Base-point reduced form of a divisor");
  std::string red_graph, red_div, red_granularity, red_base, red_ell;
  int red_chain_g = 0;
  reduce_cmd->add_option("--graph", red_graph, "Graph file");
  reduce_cmd->add_option("--chain", red_chain_g, "Use a chain of loops of this genus");
  reduce_cmd->add_option("--ell", red_ell, "Chain long edge length");
  reduce_cmd->add_option("--divisor", red_div, "Divisor file")->required();
  reduce_cmd->add_option("--base", red_base, "Base vertex (default: first vertex)");
  reduce_cmd->add_option("--granularity", red_granularity, "Grid step");
  add_common(reduce_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or error text
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(d_min, d_max, common);
    if (paths->parsed()) return run_paths(paths_g, symmetric_only, common);
    if (verify->parsed()) {
      return run_verify(suite, verify_g, bn_r, bn_d, verify_ell, verify_granularity, allow_large,
                        common);
    }
    if (rank_cmd->parsed()) {
      return run_rank(rank_graph, rank_chain_g, rank_ell, rank_div, rank_granularity, common);
    }
    if (reduce_cmd->parsed()) {
      return run_reduce(red_graph, red_chain_g, red_ell, red_div, red_base, red_granularity,
                        common);
    }
  } catch (const chipfire::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::parse_error:
      case errc::invalid_parameter:
      case errc::invalid_support:
      case errc::invalid_granularity:
      case errc::invalid_input:
      case errc::infeasible:
        return kExitUsage;
      default:
        return kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
