#include "updag/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "updag/dag.hpp"
#include "updag/embedding.hpp"
#include "updag/errors.hpp"
#include "updag/feasibility.hpp"
#include "updag/json_io.hpp"
#include "updag/oracle.hpp"
#include "updag/partition.hpp"
#include "updag/reduction.hpp"
#include "updag/rng.hpp"
#include "updag/upward.hpp"

namespace updag {

namespace {

long long sum_of(const std::vector<long long>& values, const std::vector<int>& idx) {
  long long s = 0;
  for (const int i : idx) s += values[static_cast<std::size_t>(i)];
  return s;
}

void print_index_list(std::ostream& out, const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out << (i > 0 ? " " : "") << idx[i];
  }
  if (idx.empty()) out << "-";
}

void print_split(std::ostream& out, const std::vector<long long>& values,
                 const std::vector<int>& s1, const std::vector<int>& s2) {
  out << "side1 (sum " << sum_of(values, s1) << "): ";
  print_index_list(out, s1);
  out << "\nside2 (sum " << sum_of(values, s2) << "): ";
  print_index_list(out, s2);
  out << "\n";
}

Json split_json(bool answer, const std::vector<int>& s1, const std::vector<int>& s2) {
  Json j;
  j["answer"] = answer;
  j["side1"] = s1;
  j["side2"] = s2;
  return j;
}

}  // namespace

// Section: instance parsing ---------------------------------------------------

std::vector<long long> parse_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::vector<long long> values;
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw InvalidInput(path + ": '" + tok + "' is not an integer");
    }
    if (v <= 0) {
      throw InvalidInput(path + ": values must be positive, got " + tok);
    }
    values.push_back(v);
  }
  if (values.empty()) throw InvalidInput(path + ": no values");
  return values;
}

// Section: reduce -------------------------------------------------------------

int cmd_reduce(const std::string& instance_path, const std::string& out_prefix,
               bool json, std::ostream& out) {
  const std::vector<long long> values = parse_partition_file(instance_path);
  const GadgetDag g = build_gadget(values);
  const std::string dag_file = out_prefix + ".updag";
  const std::string sidecar_file = out_prefix + ".json";
  write_dag_file(g.dag, dag_file);
  write_sidecar_file(g, sidecar_file);

  const long long total = std::accumulate(values.begin(), values.end(), 0ll);
  const Edge& pe = g.dag.edge(g.prescribed_edge);
  if (json) {
    Json j;
    j["vertices"] = g.dag.vertex_count();
    j["edges"] = g.dag.edge_count();
    j["cycle_len"] = g.cycle_len;
    j["items"] = values.size();
    j["total"] = total;
    j["prescribed_edge"] = Json::array({pe.tail, pe.head});
    j["dag_file"] = dag_file;
    j["sidecar_file"] = sidecar_file;
    out << dump_json(j);
  } else {
    out << "wrote " << dag_file << " (" << g.dag.vertex_count() << " vertices, "
        << g.dag.edge_count() << " edges) and " << sidecar_file << "\n"
        << "cycle length: " << g.cycle_len << "\n"
        << "items: " << values.size() << ", total: " << total << "\n"
        << "prescribed edge: (" << pe.tail << ", " << pe.head << ")\n";
  }
  return 0;
}

// Section: test ---------------------------------------------------------------

int cmd_test(const std::string& dag_path, int u, int v, bool json,
             std::ostream& out) {
  const Dag d = parse_dag_file(dag_path);
  TestOutcome r;
  if (u >= 0) {
    const int e = d.undirected_edge_id(u, v);
    if (e < 0) {
      throw InvalidInput("no edge joins " + std::to_string(u) + " and " +
                         std::to_string(v));
    }
    r = test_upward_report(d, e);
  } else {
    const OuterplaneEmbedding o = outerplane_embedding(d);
    TestOutcome first;
    bool have_first = false;
    bool found = false;
    for (int e = 0; e < d.edge_count() && !found; ++e) {
      if (!o.edge_on_outer_face(d, e)) continue;
      TestOutcome t = test_upward_report(d, e);
      if (t.upward) {
        r = std::move(t);
        found = true;
      } else if (!have_first) {
        first = std::move(t);
        have_first = true;
      }
    }
    if (!found) {
      if (!have_first) throw InternalError("outer face without outer edges");
      r = std::move(first);
      r.edge = -1;
    }
  }

  if (json) {
    out << dump_json(test_report_json(d, r));
  } else {
    out << "upward: " << (r.upward ? "yes" : "no") << "\n";
    if (r.edge >= 0) {
      const Edge& e = d.edge(r.edge);
      out << "edge: (" << e.tail << ", " << e.head << ")\n";
    } else {
      out << "edge: none\n";
    }
  }
  return r.upward ? 0 : 1;
}

// Section: extract ------------------------------------------------------------

int cmd_extract(const std::string& sidecar_path, const std::string& report_path,
                bool json, std::ostream& out) {
  const GadgetDag g = gadget_from_sidecar_file(sidecar_path);
  const UpwardEmbedding ue = embedding_from_json_file(g.dag, report_path);
  const ExtractedPartition p = extract_partition(g, ue);
  if (json) {
    Json j = split_json(true, p.s1, p.s2);
    j["sums"] = Json::array({sum_of(g.values, p.s1), sum_of(g.values, p.s2)});
    out << dump_json(j);
  } else {
    print_split(out, g.values, p.s1, p.s2);
  }
  return 0;
}

// Section: solve-partition ----------------------------------------------------

int cmd_solve_partition(const std::string& instance_path, bool json,
                        std::ostream& out) {
  const std::vector<long long> values = parse_partition_file(instance_path);
  const PartitionResult r = solve_partition(values);
  if (json) {
    out << dump_json(split_json(r.feasible, r.s1, r.s2));
  } else if (r.feasible) {
    print_split(out, values, r.s1, r.s2);
  } else {
    out << "no equal-sum split exists\n";
  }
  return r.feasible ? 0 : 1;
}

// Section: oracle -------------------------------------------------------------

int cmd_oracle(const std::string& dag_path, int u, int v, long long budget,
               bool json, std::ostream& out) {
  const Dag d = parse_dag_file(dag_path);
  if (u >= 0) {
    const int e = d.undirected_edge_id(u, v);
    if (e < 0) {
      throw InvalidInput("no edge joins " + std::to_string(u) + " and " +
                         std::to_string(v));
    }
    const PairSet pairs = brute_feasible_set(d, e, budget);
    const bool answer = !pairs.empty();
    if (json) {
      Json j;
      j["answer"] = answer;
      j["edge"] = e;
      j["endpoints"] = Json::array({d.edge(e).tail, d.edge(e).head});
      Json pj = Json::array();
      for (const AnglePair& p : pairs) pj.push_back(Json::array({p.first, p.second}));
      j["pairs"] = std::move(pj);
      out << dump_json(j);
    } else {
      out << "upward: " << (answer ? "yes" : "no") << "\n"
          << "edge: (" << d.edge(e).tail << ", " << d.edge(e).head << ")\n"
          << "pairs:";
      for (const AnglePair& p : pairs) {
        out << " (" << p.first << "," << p.second << ")";
      }
      out << "\n";
    }
    return answer ? 0 : 1;
  }

  const bool answer = brute_test_upward(d, budget);
  if (json) {
    Json j;
    j["answer"] = answer;
    j["edge"] = -1;
    j["endpoints"] = nullptr;
    j["pairs"] = nullptr;
    out << dump_json(j);
  } else {
    out << "upward: " << (answer ? "yes" : "no") << "\n";
  }
  return answer ? 0 : 1;
}

// Section: render -------------------------------------------------------------

namespace {

std::string render_dot(const Dag& d, const UpwardEmbedding* ue) {
  std::ostringstream os;
  os << "digraph updag {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    os << "  " << v;
    if (ue != nullptr) {
      os << " [xlabel=\"";
      const std::vector<int>& corners = ue->emb.corner_face[v];
      for (std::size_t t = 0; t < corners.size(); ++t) {
        if (t > 0) os << " ";
        os << "f" << corners[t] << ":" << static_cast<int>(ue->labels.by_corner[v][t]);
      }
      os << "\"]";
    }
    os << ";\n";
  }
  for (const Edge& e : d.edges()) {
    os << "  " << e.tail << " -> " << e.head << ";\n";
  }
  if (ue != nullptr) {
    // DOT assigns a vertex to the first cluster naming it, so shared
    // boundary vertices land in the lowest-id face that touches them.
    for (int f = 0; f < ue->emb.face_count(); ++f) {
      if (f == ue->emb.outer_face) continue;
      os << "  subgraph cluster_face_" << f << " {\n    label=\"face " << f
         << "\";\n   ";
      for (const int v : ue->emb.faces[static_cast<std::size_t>(f)]) {
        os << " " << v << ";";
      }
      os << "\n  }\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

int cmd_render(const std::string& dag_path, const std::string& embedding_path,
               const std::string& out_path, std::ostream& out) {
  const Dag d = parse_dag_file(dag_path);
  std::string dot;
  if (embedding_path.empty()) {
    dot = render_dot(d, nullptr);
  } else {
    const UpwardEmbedding ue = embedding_from_json_file(d, embedding_path);
    dot = render_dot(d, &ue);
  }
  if (out_path.empty()) {
    out << dot;
  } else {
    std::ofstream f(out_path);
    if (!f) throw InvalidInput("cannot open " + out_path + " for writing");
    f << dot;
    f.flush();
    if (!f) throw InvalidInput("write to " + out_path + " failed");
  }
  return 0;
}

// Section: bench --------------------------------------------------------------

namespace {

// Random composition of n into at most `parts` positive values: distinct cut
// points, so duplicates can shrink the part count.
std::vector<long long> random_composition(SplitMix64& rng, long long n, int parts) {
  std::vector<long long> cuts;
  for (int i = 0; i + 1 < parts; ++i) {
    cuts.push_back(1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n))));
  }
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<long long> values;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    values.push_back(cuts[i] - cuts[i - 1]);
  }
  return values;
}

long long median_ns(std::vector<long long> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

}  // namespace

int cmd_bench(const std::vector<long long>& sizes, std::uint64_t seed,
              int repeats, std::ostream& out) {
  if (sizes.empty()) throw InvalidInput("bench needs at least one size");
  for (const long long n : sizes) {
    if (n < 1) throw InvalidInput("bench sizes must be positive");
  }
  if (repeats < 1) throw InvalidInput("bench repeats must be positive");

  using Clock = std::chrono::steady_clock;
  SplitMix64 rng(seed);
  out << "n,k,reduce_ns,test_ns,answer\n";
  for (const long long n : sizes) {
    const std::vector<long long> values = random_composition(rng, n, 8);
    std::vector<long long> reduce_ns, test_ns;
    bool answer = false;
    for (int rep = 0; rep < repeats; ++rep) {
      const auto t0 = Clock::now();
      const GadgetDag g = build_gadget(values);
      const auto t1 = Clock::now();
      const TestOutcome r = test_upward_report(g.dag, g.prescribed_edge);
      const auto t2 = Clock::now();
      reduce_ns.push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      test_ns.push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
      answer = r.upward;
    }
    out << n << "," << values.size() << "," << median_ns(reduce_ns) << ","
        << median_ns(test_ns) << "," << (answer ? 1 : 0) << "\n";
  }
  return 0;
}

// Section: oracle budget ------------------------------------------------------

long long resolve_oracle_budget(long long flag_value) {
  if (flag_value > 0) return flag_value;
  const char* env = std::getenv("UPDAG_BUDGET");
  if (env != nullptr && *env != '\0') {
    long long v = 0;
    const char* last = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, last, v);
    if (ec != std::errc() || ptr != last || v <= 0) {
      throw InvalidInput("UPDAG_BUDGET must be a positive integer, got '" +
                         std::string(env) + "'");
    }
    return v;
  }
  return default_oracle_budget;
}

}  // namespace updag
