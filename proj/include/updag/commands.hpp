#pragma once
// Subcommand implementations behind the updag binary, separated from
// argument parsing so tests can drive them in process. Each command writes
// data to the given stream, returns the process exit code for decided runs
// (0 upward or feasible, 1 not) and throws updag::Error for every input or
// environment problem; the binary maps thrown errors to exit code 2.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace updag {

// Reads a partition instance: whitespace separated positive decimal
// integers, at least one. Throws InvalidInput on junk, non-positive values
// or an empty file.
std::vector<long long> parse_partition_file(const std::string& path);

// Builds the gadget for the instance file and writes out_prefix + ".updag"
// and the sidecar out_prefix + ".json"; prints a manifest. Always returns 0.
int cmd_reduce(const std::string& instance_path, const std::string& out_prefix,
               bool json, std::ostream& out);

// Upward planarity of the DAG in dag_path. With u, v >= 0 the edge joining
// them is prescribed to the outer face; with u = v = -1 every outer edge is
// tried in ascending id order. On an all-edges failure the report carries
// edge -1 and the feasible sets of the lowest outer edge.
int cmd_test(const std::string& dag_path, int u, int v, bool json,
             std::ostream& out);

// Reads a balanced split out of a witness embedding: sidecar_path as written
// by cmd_reduce, report_path either a cmd_test --json report with a witness
// or a bare embedding object. Returns 0; a non-upward embedding throws.
int cmd_extract(const std::string& sidecar_path, const std::string& report_path,
                bool json, std::ostream& out);

// Solves the instance file directly with the subset-sum solver.
int cmd_solve_partition(const std::string& instance_path, bool json,
                        std::ostream& out);

// Brute-force answer by exhaustive enumeration, feasible angle pairs
// included when an edge is given. budget caps the enumeration work.
int cmd_oracle(const std::string& dag_path, int u, int v, long long budget,
               bool json, std::ostream& out);

// DOT text for the DAG, annotated with angle labels and face clusters when
// embedding_path is nonempty. Writes to out_path, or to out when out_path is
// empty. Always returns 0.
int cmd_render(const std::string& dag_path, const std::string& embedding_path,
               const std::string& out_path, std::ostream& out);

// CSV benchmark over gadget instances of the given totals: one row per size,
// header n,k,reduce_ns,test_ns,answer, times the median of `repeats` runs.
int cmd_bench(const std::vector<long long>& sizes, std::uint64_t seed,
              int repeats, std::ostream& out);

// Budget precedence: a positive flag value wins, then the UPDAG_BUDGET
// environment variable, then the built-in default. A malformed or
// non-positive environment value throws InvalidInput.
long long resolve_oracle_budget(long long flag_value);

}  // namespace updag
