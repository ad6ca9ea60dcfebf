#include "updag/dag.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "updag/embedding.hpp"

namespace updag {

namespace {

std::uint64_t undirected_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::string edge_location(int index, const std::vector<int>* edge_lines) {
  if (edge_lines != nullptr && index < static_cast<int>(edge_lines->size())) {
    return "line " + std::to_string((*edge_lines)[index]);
  }
  return "edge " + std::to_string(index);
}

}  // namespace

Dag::Dag(int vertex_count, std::vector<Edge> edges,
         const std::vector<int>* edge_lines)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InvalidInput("negative vertex count");
  const int m = edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    if (ed.tail < 0 || ed.tail >= vertex_count_ || ed.head < 0 ||
        ed.head >= vertex_count_) {
      throw InvalidInput(edge_location(e, edge_lines) + ": vertex id out of range");
    }
    if (ed.tail == ed.head) {
      throw InvalidInput(edge_location(e, edge_lines) + ": self loop");
    }
  }

  sorted_ids_.resize(m);
  std::iota(sorted_ids_.begin(), sorted_ids_.end(), 0);
  std::sort(sorted_ids_.begin(), sorted_ids_.end(), [&](int x, int y) {
    return undirected_key(edges_[x].tail, edges_[x].head) <
           undirected_key(edges_[y].tail, edges_[y].head);
  });
  sorted_keys_.resize(m);
  for (int i = 0; i < m; ++i) {
    const Edge& ed = edges_[sorted_ids_[i]];
    sorted_keys_[i] = undirected_key(ed.tail, ed.head);
  }
  for (int i = 1; i < m; ++i) {
    if (sorted_keys_[i] == sorted_keys_[i - 1]) {
      int later = std::max(sorted_ids_[i], sorted_ids_[i - 1]);
      throw InvalidInput(edge_location(later, edge_lines) +
                         ": duplicate edge between " +
                         std::to_string(edges_[later].tail) + " and " +
                         std::to_string(edges_[later].head));
    }
  }

  inc_offset_.assign(vertex_count_ + 2, 0);
  for (const Edge& ed : edges_) {
    ++inc_offset_[ed.tail + 1];
    ++inc_offset_[ed.head + 1];
  }
  for (int v = 0; v < vertex_count_ + 1; ++v) inc_offset_[v + 1] += inc_offset_[v];
  inc_edges_.resize(2 * static_cast<std::size_t>(m));
  std::vector<int> cursor(inc_offset_.begin(), inc_offset_.end() - 1);
  for (int e = 0; e < m; ++e) {
    inc_edges_[cursor[edges_[e].tail]++] = e;
    inc_edges_[cursor[edges_[e].head]++] = e;
  }
  inc_offset_.pop_back();
}

int Dag::undirected_edge_id(int a, int b) const {
  const std::uint64_t key = undirected_key(a, b);
  auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), key);
  if (it == sorted_keys_.end() || *it != key) return -1;
  return sorted_ids_[it - sorted_keys_.begin()];
}

bool Dag::is_switch(int v) const {
  bool any_in = false, any_out = false;
  for (int e : incident(v)) {
    (out_of(e, v) ? any_out : any_in) = true;
  }
  return !(any_in && any_out);
}

bool is_acyclic(const Dag& d) {
  const int n = d.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const Edge& e : d.edges()) ++indeg[e.head];
  std::vector<int> queue;
  queue.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t head = 0;
  int seen = 0;
  while (head < queue.size()) {
    int v = queue[head++];
    ++seen;
    for (int e : d.incident(v)) {
      if (!d.out_of(e, v)) continue;
      if (--indeg[d.other_end(e, v)] == 0) queue.push_back(d.other_end(e, v));
    }
  }
  return seen == n;
}

bool is_biconnected(const Dag& d) {
  const int n = d.vertex_count();
  if (n < 3) return false;
  // Iterative lowpoint DFS; recursion would overflow at gadget sizes.
  std::vector<int> disc(n, -1), low(n, 0), next(n, 0), parent_edge(n, -1);
  std::vector<int> stack;
  stack.reserve(n);
  int timer = 0;
  int root_children = 0;
  stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    int v = stack.back();
    auto inc = d.incident(v);
    if (next[v] < static_cast<int>(inc.size())) {
      int e = inc[next[v]++];
      if (e == parent_edge[v]) continue;
      int w = d.other_end(e, v);
      if (disc[w] == -1) {
        parent_edge[w] = e;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  if (timer != n) return false;
  return root_children <= 1;
}

ValidationReport validate(const Dag& d) {
  ValidationReport r;
  r.is_acyclic = is_acyclic(d);
  r.is_biconnected = is_biconnected(d);
  r.is_outerplanar = is_outerplanar(d);
  return r;
}

namespace {

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Dag parse_dag(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int vertex_count = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (!have_header) {
      std::string version;
      if (tok != "updag" || !(ls >> version) || version != "1") {
        parse_fail(line_no, "expected header 'updag 1'");
      }
      have_header = true;
      continue;
    }
    if (tok == "vertices") {
      if (vertex_count >= 0) parse_fail(line_no, "repeated vertices directive");
      std::string num;
      if (!(ls >> num) || !parse_int(num, vertex_count) || vertex_count < 0) {
        parse_fail(line_no, "expected 'vertices N' with N >= 0");
      }
    } else if (tok == "edge") {
      if (vertex_count < 0) parse_fail(line_no, "edge before vertices directive");
      std::string a, b;
      Edge e;
      if (!(ls >> a >> b) || !parse_int(a, e.tail) || !parse_int(b, e.head)) {
        parse_fail(line_no, "expected 'edge U V'");
      }
      if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
        parse_fail(line_no, "vertex id out of range");
      }
      if (e.tail == e.head) parse_fail(line_no, "self loop");
      edges.push_back(e);
      edge_lines.push_back(line_no);
    } else {
      parse_fail(line_no, "unknown directive '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) parse_fail(line_no, "trailing tokens");
  }
  if (!have_header) throw InvalidInput("line 1: missing header 'updag 1'");
  if (vertex_count < 0) throw InvalidInput("missing vertices directive");
  return Dag(vertex_count, std::move(edges), &edge_lines);
}

Dag parse_dag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_dag(in);
}

void write_dag(const Dag& d, std::ostream& out) {
  // to_chars plus one flat buffer keeps million-edge writes fast.
  std::string buf;
  buf.reserve(1 << 20);
  char tmp[32];
  auto append_int = [&](int value) {
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof(tmp), value);
    (void)ec;
    buf.append(tmp, ptr);
  };
  buf += "updag 1\nvertices ";
  append_int(d.vertex_count());
  buf += '\n';
  for (const Edge& e : d.edges()) {
    buf += "edge ";
    append_int(e.tail);
    buf += ' ';
    append_int(e.head);
    buf += '\n';
    if (buf.size() > (1 << 20) - 64) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_dag_file(const Dag& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  write_dag(d, out);
  out.flush();
  if (!out) throw InvalidInput("write to " + path + " failed");
}

}  // namespace updag
