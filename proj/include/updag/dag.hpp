#pragma once
// Directed graph core: dense 0-based vertex ids, edge identity fixed by
// input position, underlying undirected graph kept simple. Everything
// downstream (embeddings, dual trees, reports) relies on these conventions
// for deterministic output.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "updag/errors.hpp"

namespace updag {

struct Edge {
  int tail = -1;
  int head = -1;
};

class Dag {
 public:
  Dag() = default;

  // Validates ids, rejects self loops and edges duplicated in either
  // direction. When edge_lines is given (one source line per edge) error
  // messages cite the offending file line instead of the edge index.
  Dag(int vertex_count, std::vector<Edge> edges,
      const std::vector<int>* edge_lines = nullptr);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids of v (both directions) in input order.
  std::span<const int> incident(int v) const {
    return {inc_edges_.data() + inc_offset_[v],
            inc_edges_.data() + inc_offset_[v + 1]};
  }
  int degree(int v) const { return inc_offset_[v + 1] - inc_offset_[v]; }

  // Edge id joining a and b in either direction, -1 when absent.
  int undirected_edge_id(int a, int b) const;

  int other_end(int e, int v) const {
    const Edge& ed = edges_[e];
    return ed.tail == v ? ed.head : ed.tail;
  }

  // True when edge e leaves v.
  bool out_of(int e, int v) const { return edges_[e].tail == v; }

  // A switch vertex is a local source or sink: all incident edges point the
  // same way. Vertices of degree 0 count as switches vacuously.
  bool is_switch(int v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> inc_offset_;
  std::vector<int> inc_edges_;
  // Edge ids sorted by undirected key, for O(log E) adjacency lookups
  // without hash-table overhead at millions of edges.
  std::vector<std::uint64_t> sorted_keys_;
  std::vector<int> sorted_ids_;
};

struct ValidationReport {
  bool is_acyclic = false;
  bool is_biconnected = false;
  bool is_outerplanar = false;
  bool all() const { return is_acyclic && is_biconnected && is_outerplanar; }
};

// Pure report, never throws. Biconnectivity requires at least 3 vertices;
// outerplanarity is a property of the underlying undirected graph and is
// tested blockwise, so disconnected inputs still get a meaningful answer.
ValidationReport validate(const Dag& d);

bool is_acyclic(const Dag& d);
bool is_biconnected(const Dag& d);

// Text format, one directive per line:
//   # comment
//   updag 1
//   vertices N
//   edge U V
// Parse errors carry 1-based line numbers.
Dag parse_dag(std::istream& in);
Dag parse_dag_file(const std::string& path);
void write_dag(const Dag& d, std::ostream& out);
void write_dag_file(const Dag& d, const std::string& path);

}  // namespace updag
