#include "updag/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "updag/errors.hpp"

namespace updag {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// Section: embeddings --------------------------------------------------------

Json embedding_json(const Dag& d, const UpwardEmbedding& ue) {
  Json j;
  Json rotations = Json::array();
  for (const std::vector<int>& rot : ue.emb.rotation) {
    rotations.push_back(rot);
  }
  j["rotations"] = std::move(rotations);
  j["outer_face"] = ue.emb.outer_face;
  // One [vertex, face, label] triple per corner, in (vertex, corner) order.
  Json labels = Json::array();
  for (int v = 0; v < d.vertex_count(); ++v) {
    for (std::size_t t = 0; t < ue.emb.rotation[v].size(); ++t) {
      labels.push_back(Json::array(
          {v, ue.emb.corner_face[v][t], static_cast<int>(ue.labels.by_corner[v][t])}));
    }
  }
  j["labels"] = std::move(labels);
  return j;
}

UpwardEmbedding embedding_from_json(const Dag& d, const Json& j) {
  const int n = d.vertex_count();
  UpwardEmbedding ue;
  try {
    const Json& rotations = j.at("rotations");
    if (!rotations.is_array() || static_cast<int>(rotations.size()) != n) {
      throw InvalidInput("embedding: rotations must list every vertex");
    }
    ue.emb.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> rot = rotations[static_cast<std::size_t>(v)].get<std::vector<int>>();
      std::vector<int> sorted = rot;
      std::sort(sorted.begin(), sorted.end());
      std::span<const int> inc = d.incident(v);
      std::vector<int> expect(inc.begin(), inc.end());
      std::sort(expect.begin(), expect.end());
      if (sorted != expect) {
        throw InvalidInput("embedding: rotation of vertex " + std::to_string(v) +
                           " is not a permutation of its incident edges");
      }
      ue.emb.rotation[static_cast<std::size_t>(v)] = std::move(rot);
    }
    trace_faces(d, ue.emb);
    const int outer = j.at("outer_face").get<int>();
    if (outer < 0 || outer >= ue.emb.face_count()) {
      throw InvalidInput("embedding: outer_face " + std::to_string(outer) +
                         " is not a traced face");
    }
    ue.emb.outer_face = outer;

    ue.labels = AngleLabeling::make_unset(ue.emb);
    for (const Json& triple : j.at("labels")) {
      if (!triple.is_array() || triple.size() != 3) {
        throw InvalidInput("embedding: labels must be [vertex, face, label] triples");
      }
      const int v = triple[0].get<int>();
      const int f = triple[1].get<int>();
      const int l = triple[2].get<int>();
      if (v < 0 || v >= n) throw InvalidInput("embedding: label vertex out of range");
      if (l < -1 || l > 1) {
        throw InvalidInput("embedding: label value must be -1, 0 or 1");
      }
      const int t = ue.emb.corner_on_face(v, f);
      if (t < 0) {
        throw InvalidInput("embedding: vertex " + std::to_string(v) +
                           " has no corner on face " + std::to_string(f));
      }
      if (ue.labels.by_corner[v][static_cast<std::size_t>(t)] != AngleLabeling::unset) {
        throw InvalidInput("embedding: corner of vertex " + std::to_string(v) +
                           " on face " + std::to_string(f) + " labeled twice");
      }
      ue.labels.by_corner[v][static_cast<std::size_t>(t)] = static_cast<std::int8_t>(l);
    }
    for (int v = 0; v < n; ++v) {
      for (std::size_t t = 0; t < ue.labels.by_corner[v].size(); ++t) {
        if (ue.labels.by_corner[v][t] == AngleLabeling::unset) {
          throw InvalidInput("embedding: corner of vertex " + std::to_string(v) +
                             " on face " + std::to_string(ue.emb.corner_face[v][t]) +
                             " has no label");
        }
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("embedding json: ") + e.what());
  }
  return ue;
}

UpwardEmbedding embedding_from_json_file(const Dag& d, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("witness")) {
    const Json& wit = j.at("witness");
    if (wit.is_null()) {
      throw InvalidInput(path + ": the report carries no witness, the instance "
                         "was not upward planar");
    }
    return embedding_from_json(d, wit);
  }
  return embedding_from_json(d, j);
}

// Section: test reports -------------------------------------------------------

Json test_report_json(const Dag& d, const TestOutcome& r) {
  Json rep;
  rep["answer"] = r.upward;
  rep["edge"] = r.edge;
  if (r.edge >= 0) {
    rep["endpoints"] = Json::array({d.edge(r.edge).tail, d.edge(r.edge).head});
  } else {
    rep["endpoints"] = nullptr;
  }

  const RootedDualTree& rt = r.tree;
  const int count = static_cast<int>(rt.nodes.size());
  // The sweep stops at the first empty set; later entries were never built.
  const int last = r.sweep.stopped_at >= 0 ? r.sweep.stopped_at : count - 1;
  Json sets = Json::array();
  for (int id = 0; id <= last; ++id) {
    const FeasibleSet& fs = r.sweep.sets[static_cast<std::size_t>(id)];
    Json entry;
    entry["node"] = id;
    entry["face"] = rt.nodes[static_cast<std::size_t>(id)].face;
    entry["ends"] = Json::array({fs.end_low, fs.end_high});
    Json pairs = Json::array();
    for (const FeasiblePair& p : fs.pairs) {
      pairs.push_back(Json::array({p.mu, p.nu}));
    }
    entry["pairs"] = std::move(pairs);
    sets.push_back(std::move(entry));
  }
  rep["feasible_sets"] = std::move(sets);

  if (!r.upward || !r.embedding.has_value()) {
    rep["witness"] = nullptr;
    return rep;
  }

  Json wit;
  Json sides = Json::array();
  for (const Side s : r.sides) sides.push_back(to_string(s));
  wit["sides"] = std::move(sides);

  // The chosen witness per node, re-derived by the same walk the embedding
  // reconstruction uses: the root child takes the reported pair, every child
  // takes the pair its parent's witness demands.
  std::vector<const NodeWitness*> chosen(static_cast<std::size_t>(count), nullptr);
  const FeasiblePair* rp = r.sweep.sets[static_cast<std::size_t>(rt.root_child)].find(
      r.root_pair.first, r.root_pair.second);
  if (rp == nullptr) throw InternalError("report walk lost the root pair");
  chosen[static_cast<std::size_t>(rt.root_child)] = &rp->witness;
  for (int id = count - 1; id >= 0; --id) {
    const NodeWitness* w = chosen[static_cast<std::size_t>(id)];
    if (w == nullptr) throw InternalError("report walk skipped a node");
    const RootedNode& s = rt.nodes[static_cast<std::size_t>(id)];
    for (int i = 1; i <= s.k(); ++i) {
      const int c = s.child[static_cast<std::size_t>(i)];
      if (c < 0) continue;
      const bool fwd = s.cycle[static_cast<std::size_t>(i - 1)] <
                       s.cycle[static_cast<std::size_t>(i)];
      const int mu = fwd ? w->mus[static_cast<std::size_t>(i)]
                         : w->nus[static_cast<std::size_t>(i)];
      const int nu = fwd ? w->nus[static_cast<std::size_t>(i)]
                         : w->mus[static_cast<std::size_t>(i)];
      const FeasiblePair* fp = r.sweep.sets[static_cast<std::size_t>(c)].find(mu, nu);
      if (fp == nullptr) throw InternalError("report walk lost a child pair");
      chosen[static_cast<std::size_t>(c)] = &fp->witness;
    }
  }
  Json rho = Json::array();
  for (int id = 0; id < count; ++id) {
    Json one = Json::array();
    for (const std::int8_t x : chosen[static_cast<std::size_t>(id)]->rho) {
      one.push_back(static_cast<int>(x));
    }
    rho.push_back(std::move(one));
  }
  wit["rho"] = std::move(rho);

  Json emb = embedding_json(d, *r.embedding);
  wit["labels"] = std::move(emb["labels"]);
  wit["rotations"] = std::move(emb["rotations"]);
  wit["outer_face"] = emb["outer_face"];
  rep["witness"] = std::move(wit);
  return rep;
}

// Section: gadget sidecar -----------------------------------------------------

namespace {

// Buffered number formatting; the u and q_paths arrays reach millions of
// entries, so the writer never builds a DOM.
class StreamBuf {
 public:
  explicit StreamBuf(std::ostream& out) : out_(out) { buf_.reserve(1 << 20); }
  ~StreamBuf() { flush(); }

  void text(const char* s) { buf_ += s; maybe_flush(); }
  void number(long long v) {
    char tmp[32];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof(tmp), v);
    (void)ec;
    buf_.append(tmp, ptr);
    maybe_flush();
  }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  void maybe_flush() {
    if (buf_.size() > (1 << 20) - 64) flush();
  }
  std::ostream& out_;
  std::string buf_;
};

}  // namespace

void write_sidecar(const GadgetDag& g, std::ostream& out) {
  StreamBuf w(out);
  w.text("{\n  \"values\": [");
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (i > 0) w.text(", ");
    w.number(g.values[i]);
  }
  w.text("],\n  \"u\": [");
  for (int i = 0; i < g.cycle_len; ++i) {
    if (i > 0) w.text(", ");
    w.number(i);
  }
  w.text("],\n  \"q_paths\": [");
  for (std::size_t i = 0; i < g.quad_positions.size(); ++i) {
    if (i > 0) w.text(", ");
    const int j = g.quad_positions[i];
    w.text("[");
    w.number(j);
    w.text(", ");
    w.number(g.quad_at[static_cast<std::size_t>(j)][0]);
    w.text(", ");
    w.number(g.quad_at[static_cast<std::size_t>(j)][1]);
    w.text("]");
  }
  w.text("],\n  \"p_ranges\": [");
  for (std::size_t i = 0; i < g.p_range.size(); ++i) {
    if (i > 0) w.text(", ");
    w.text("[");
    w.number(g.p_range[i][0]);
    w.text(", ");
    w.number(g.p_range[i][1]);
    w.text("]");
  }
  w.text("],\n  \"prescribed_edge\": [");
  w.number(g.dag.edge(g.prescribed_edge).tail);
  w.text(", ");
  w.number(g.dag.edge(g.prescribed_edge).head);
  w.text("]\n}\n");
}

void write_sidecar_file(const GadgetDag& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  write_sidecar(g, out);
  out.flush();
  if (!out) throw InvalidInput("write to " + path + " failed");
}

GadgetDag gadget_from_sidecar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  auto mismatch = [&](const std::string& what) {
    throw InvalidInput("sidecar " + path + " does not match its values: " + what);
  };
  try {
    const std::vector<long long> values = j.at("values").get<std::vector<long long>>();
    GadgetDag g = build_gadget(values);

    const Json& u = j.at("u");
    if (static_cast<int>(u.size()) != g.cycle_len) mismatch("u length");
    for (int i = 0; i < g.cycle_len; ++i) {
      if (u[static_cast<std::size_t>(i)].get<int>() != i) {
        mismatch("u[" + std::to_string(i) + "]");
      }
    }

    const Json& q = j.at("q_paths");
    if (q.size() != g.quad_positions.size()) mismatch("q_paths length");
    for (std::size_t i = 0; i < g.quad_positions.size(); ++i) {
      const Json& triple = q[i];
      const int pos = g.quad_positions[i];
      if (!triple.is_array() || triple.size() != 3 ||
          triple[0].get<int>() != pos ||
          triple[1].get<int>() != g.quad_at[static_cast<std::size_t>(pos)][0] ||
          triple[2].get<int>() != g.quad_at[static_cast<std::size_t>(pos)][1]) {
        mismatch("q_paths[" + std::to_string(i) + "]");
      }
    }

    const Json& p = j.at("p_ranges");
    if (p.size() != g.p_range.size()) mismatch("p_ranges length");
    for (std::size_t i = 0; i < g.p_range.size(); ++i) {
      const Json& pair = p[i];
      if (!pair.is_array() || pair.size() != 2 ||
          pair[0].get<int>() != g.p_range[i][0] ||
          pair[1].get<int>() != g.p_range[i][1]) {
        mismatch("p_ranges[" + std::to_string(i) + "]");
      }
    }

    const Json& pe = j.at("prescribed_edge");
    if (!pe.is_array() || pe.size() != 2 ||
        pe[0].get<int>() != g.dag.edge(g.prescribed_edge).tail ||
        pe[1].get<int>() != g.dag.edge(g.prescribed_edge).head) {
      mismatch("prescribed_edge");
    }
    return g;
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace updag
