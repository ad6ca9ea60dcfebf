// Argument parsing for the updag binary. All behavior lives in the command
// layer; this file only maps flags to calls and errors to exit codes:
// 0 upward or feasible, 1 not, 2 any error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "updag/commands.hpp"
#include "updag/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Upward planarity of biconnected outerplanar DAGs and its equivalence "
      "with the Partition problem"};
  app.require_subcommand(1);

  std::string reduce_instance, reduce_out;
  bool reduce_json = false;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Compile a partition instance into a DAG plus sidecar");
  reduce->add_option("instance", reduce_instance, "partition instance file")
      ->required();
  reduce
      ->add_option("-o,--out", reduce_out,
                   "output prefix, writes <prefix>.updag and <prefix>.json")
      ->required();
  reduce->add_flag("--json", reduce_json, "print the manifest as JSON");

  std::string test_dag;
  std::vector<int> test_edge;
  bool test_any = false, test_json = false;
  CLI::App* test =
      app.add_subcommand("test", "Test a DAG for upward planarity");
  test->add_option("dag", test_dag, "DAG file")->required();
  CLI::Option* test_edge_opt =
      test->add_option("--edge", test_edge, "prescribed outer edge endpoints U V")
          ->expected(2)
          ->check(CLI::NonNegativeNumber);
  test->add_flag("--any-edge", test_any, "try every outer edge (the default)")
      ->excludes(test_edge_opt);
  test->add_flag("--json", test_json, "print the full report as JSON");

  std::string extract_sidecar, extract_report;
  bool extract_json = false;
  CLI::App* extract = app.add_subcommand(
      "extract", "Read a balanced split out of a witness embedding");
  extract->add_option("sidecar", extract_sidecar, "sidecar file from reduce")
      ->required();
  extract
      ->add_option("report", extract_report,
                   "test --json report or bare embedding JSON")
      ->required();
  extract->add_flag("--json", extract_json, "print the split as JSON");

  std::string solve_instance;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand(
      "solve-partition", "Solve a partition instance directly");
  solve->add_option("instance", solve_instance, "partition instance file")
      ->required();
  solve->add_flag("--json", solve_json, "print the split as JSON");

  std::string oracle_dag;
  std::vector<int> oracle_edge;
  long long oracle_budget = 0;
  bool oracle_json = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force upward planarity by exhaustive enumeration");
  oracle->add_option("dag", oracle_dag, "DAG file")->required();
  oracle
      ->add_option("--edge", oracle_edge,
                   "report feasible angle pairs for this outer edge")
      ->expected(2)
      ->check(CLI::NonNegativeNumber);
  oracle
      ->add_option("--budget", oracle_budget,
                   "enumeration work cap, overrides UPDAG_BUDGET")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--json", oracle_json, "print the verdict as JSON");

  std::string render_dag, render_embedding, render_out;
  CLI::App* render =
      app.add_subcommand("render", "Emit the DAG as DOT text");
  render->add_option("dag", render_dag, "DAG file")->required();
  render->add_option("--embedding", render_embedding,
                     "embedding JSON for labels and face clusters");
  render->add_option("-o,--out", render_out, "output file, stdout when absent");

  std::vector<long long> bench_sizes;
  std::uint64_t bench_seed = 1;
  int bench_repeats = 3;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time reduce and test over random gadget instances");
  bench->add_option("--sizes", bench_sizes, "instance totals n")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "instance stream seed");
  bench->add_option("--repeats", bench_repeats, "runs per size, median wins")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce) {
      return updag::cmd_reduce(reduce_instance, reduce_out, reduce_json,
                               std::cout);
    }
    if (*test) {
      const bool with_edge = !test_edge.empty();
      (void)test_any;
      return updag::cmd_test(test_dag, with_edge ? test_edge[0] : -1,
                             with_edge ? test_edge[1] : -1, test_json,
                             std::cout);
    }
    if (*extract) {
      return updag::cmd_extract(extract_sidecar, extract_report, extract_json,
                                std::cout);
    }
    if (*solve) {
      return updag::cmd_solve_partition(solve_instance, solve_json, std::cout);
    }
    if (*oracle) {
      const bool with_edge = !oracle_edge.empty();
      const long long budget = updag::resolve_oracle_budget(oracle_budget);
      return updag::cmd_oracle(oracle_dag, with_edge ? oracle_edge[0] : -1,
                               with_edge ? oracle_edge[1] : -1, budget,
                               oracle_json, std::cout);
    }
    if (*render) {
      return updag::cmd_render(render_dag, render_embedding, render_out,
                               std::cout);
    }
    if (*bench) {
      return updag::cmd_bench(bench_sizes, bench_seed, bench_repeats,
                              std::cout);
    }
  } catch (const updag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
