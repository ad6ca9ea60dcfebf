// Gadget construction, canonical witness embeddings and partition recovery.

#include "updag/reduction.hpp"

#include <cassert>
#include <limits>
#include <string>
#include <utility>

#include "updag/errors.hpp"

namespace updag {

namespace {

std::string first_violation(const CheckReport& r) {
  if (!r.up0) return r.viol0;
  if (!r.up1) return r.viol1;
  if (!r.up2) return r.viol2;
  return r.viol3;
}

}  // namespace

// ------------------------------------------------------------------ lookups

int GadgetDag::item_of_position(int j) const {
  // item i owns the edge positions [first, last - 1] of its path
  int lo = 0, hi = static_cast<int>(p_range.size()) - 1;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    if (j < p_range[mid][0]) {
      hi = mid - 1;
    } else if (j >= p_range[mid][1]) {
      lo = mid + 1;
    } else {
      return mid;
    }
  }
  return -1;
}

int GadgetDag::quad_middle_edge(int j) const {
  assert(has_quad(j));
  int e = dag.undirected_edge_id(quad_at[j][0], quad_at[j][1]);
  assert(e >= 0);
  return e;
}

int GadgetDag::quad_face(const PlaneEmbedding& emb, int j) const {
  // C_j is the unique 4-cycle face at the quad's middle edge; the face on
  // the other side runs through both quad ends and at least one more vertex
  int mid = quad_middle_edge(j);
  int found = -1;
  for (int f : emb.edge_faces[mid]) {
    if (emb.faces[f].size() != 4) continue;
    if (found >= 0) throw InvalidEmbedding("two 4-cycle faces at one quad path");
    found = f;
  }
  if (found < 0) {
    throw InvalidEmbedding("no 4-cycle face at quad position " + std::to_string(j));
  }
  return found;
}

// ------------------------------------------------------------ construction

GadgetDag build_gadget(const std::vector<long long>& values) {
  if (values.empty()) throw InvalidInput("partition instance is empty");
  long long n = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw InvalidInput("partition value " + std::to_string(i + 1) +
                         " is not positive");
    }
    n += values[i];
    if (n > (1ll << 40)) throw InstanceTooLarge("partition total too large");
  }
  const long long k = static_cast<long long>(values.size());
  const long long cycle_len = 6 * n + 2 * k + 2;
  const long long total_vertices = 18 * n + 4 * k + 2;
  if (total_vertices > std::numeric_limits<int>::max()) {
    throw InstanceTooLarge("gadget needs " + std::to_string(total_vertices) +
                           " vertices");
  }

  GadgetDag g;
  g.values = values;
  g.cycle_len = static_cast<int>(cycle_len);

  // item paths cover u_1 .. u_{cycle_len - 2} without gaps
  g.p_range.resize(values.size());
  {
    long long start = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      long long len = 6 * values[i] + 2;
      g.p_range[i] = {static_cast<int>(start), static_cast<int>(start + len - 1)};
      start += len;
    }
    assert(start == cycle_len - 1);
  }
  std::vector<std::uint8_t> in_path(static_cast<std::size_t>(cycle_len - 1), 0);
  for (const auto& r : g.p_range) {
    for (int j = r[0]; j < r[1]; ++j) in_path[static_cast<std::size_t>(j)] = 1;
  }

  const long long quads = 6 * n + k;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(cycle_len + 3 * quads));

  // cycle path edges: edge id j joins u_j and u_{j+1}; path edges leave
  // their odd endpoint, connectors and the two end edges leave u_j
  for (long long j = 0; j + 1 < cycle_len; ++j) {
    int a = static_cast<int>(j), b = static_cast<int>(j) + 1;
    if (in_path[static_cast<std::size_t>(j)] && j % 2 == 0) {
      edges.push_back({b, a});
    } else {
      edges.push_back({a, b});
    }
  }
  // closing edge, id cycle_len - 1: u_0 is the global source, u_{B-1} the sink
  g.prescribed_edge = static_cast<int>(cycle_len) - 1;
  edges.push_back({0, static_cast<int>(cycle_len) - 1});

  // quad paths in ascending position; ids continue past the cycle vertices
  g.quad_at.assign(static_cast<std::size_t>(cycle_len - 1), {-1, -1});
  g.quad_positions.reserve(static_cast<std::size_t>(quads));
  int next = static_cast<int>(cycle_len);
  for (long long j = 0; j + 1 < cycle_len; ++j) {
    if (!in_path[static_cast<std::size_t>(j)]) continue;
    int v = next++, w = next++;
    g.quad_at[static_cast<std::size_t>(j)] = {v, w};
    g.quad_positions.push_back(static_cast<int>(j));
    int a = static_cast<int>(j), b = static_cast<int>(j) + 1;
    if (j % 2 == 1) {  // v_j is a source and w_j a sink
      edges.push_back({v, a});
      edges.push_back({v, w});
      edges.push_back({b, w});
    } else {  // mirrored on even positions
      edges.push_back({a, v});
      edges.push_back({w, v});
      edges.push_back({w, b});
    }
  }
  assert(next == static_cast<int>(total_vertices));
  assert(edges.size() == static_cast<std::size_t>(cycle_len + 3 * quads));
  g.dag = Dag(static_cast<int>(total_vertices), std::move(edges));
  return g;
}

// ----------------------------------------------------------------- witness

UpwardEmbedding witness_embedding(const GadgetDag& g, const std::vector<int>& s1) {
  const Dag& d = g.dag;
  const int k = static_cast<int>(g.values.size());
  std::vector<std::uint8_t> chosen(static_cast<std::size_t>(k), 0);
  long long side = 0, total = 0;
  for (int i : s1) {
    if (i < 0 || i >= k) throw InvalidInput("item index out of range");
    if (chosen[static_cast<std::size_t>(i)]) throw InvalidInput("item index repeated");
    chosen[static_cast<std::size_t>(i)] = 1;
    side += g.values[static_cast<std::size_t>(i)];
  }
  for (long long v : g.values) total += v;
  if (2 * side != total) {
    throw UnbalancedPartition("split sums " + std::to_string(side) + " of " +
                              std::to_string(total));
  }

  OuterplaneEmbedding o = outerplane_embedding(d);
  ExtendedDualTree t = extended_dual_tree(d, o);
  RootedDualTree rt = root_at_edge(d, o, t, g.prescribed_edge);

  // every non-root node is the 4-cycle across one path edge, whose id
  // equals its cycle position
  std::vector<Side> sides(rt.nodes.size(), Side::out);
  for (std::size_t s = 0; s + 1 < rt.nodes.size(); ++s) {
    int j = rt.nodes[s].parent_edge;
    assert(j >= 0 && j < g.cycle_len - 1 && g.has_quad(j));
    int item = g.item_of_position(j);
    assert(item >= 0);
    if (chosen[static_cast<std::size_t>(item)]) sides[s] = Side::in;
  }
  PlaneEmbedding emb = assemble_embedding(d, rt, sides);

  std::vector<std::uint8_t> cyc(static_cast<std::size_t>(d.edge_count()), 0);
  for (int e = 0; e < g.cycle_len; ++e) cyc[static_cast<std::size_t>(e)] = 1;
  std::vector<std::uint8_t> inside = faces_inside_cycle(d, emb, cyc);

  AngleLabeling lab = AngleLabeling::make_unset(emb);
  auto set_corner = [&](int v, int f, int value) {
    int t2 = emb.corner_on_face(v, f);
    assert(t2 >= 0);
    assert(lab.by_corner[static_cast<std::size_t>(v)][static_cast<std::size_t>(t2)] ==
           AngleLabeling::unset);
    lab.by_corner[static_cast<std::size_t>(v)][static_cast<std::size_t>(t2)] =
        static_cast<std::int8_t>(value);
  };
  auto set_rest = [&](int v, int value) {
    for (auto& c : lab.by_corner[static_cast<std::size_t>(v)]) {
      if (c == AngleLabeling::unset) c = static_cast<std::int8_t>(value);
    }
  };

  const int outer = emb.outer_face;
  // the closing edge's endpoints spend their large angle on the outer face
  set_corner(0, outer, 1);
  set_rest(0, -1);
  set_corner(g.cycle_len - 1, outer, 1);
  set_rest(g.cycle_len - 1, -1);
  // quad interior vertices are small inside their 4-cycle, large outside
  for (int j : g.quad_positions) {
    int qf = g.quad_face(emb, j);
    set_corner(g.quad_at[static_cast<std::size_t>(j)][0], qf, -1);
    set_rest(g.quad_at[static_cast<std::size_t>(j)][0], 1);
    set_corner(g.quad_at[static_cast<std::size_t>(j)][1], qf, -1);
    set_rest(g.quad_at[static_cast<std::size_t>(j)][1], 1);
  }
  for (int i = 0; i < k; ++i) {
    int s = g.p_range[static_cast<std::size_t>(i)][0];
    int e = g.p_range[static_cast<std::size_t>(i)][1];
    // interior path vertices are flat in their two 4-cycle faces
    for (int u = s + 1; u < e; ++u) {
      set_corner(u, g.quad_face(emb, u - 1), 0);
      set_corner(u, g.quad_face(emb, u), 0);
      set_rest(u, -1);
    }
    // path ends are flat in their single 4-cycle face; the small angle goes
    // to the outer face when that 4-cycle lies inside C and vice versa
    int qs = g.quad_face(emb, s);
    set_corner(s, qs, 0);
    if (inside[static_cast<std::size_t>(qs)]) {
      set_corner(s, outer, 0);
      set_rest(s, -1);
    } else {
      set_corner(s, outer, -1);
      set_rest(s, 0);
    }
    int qe = g.quad_face(emb, e - 1);
    set_corner(e, qe, 0);
    if (inside[static_cast<std::size_t>(qe)]) {
      set_corner(e, outer, 0);
      set_rest(e, -1);
    } else {
      set_corner(e, outer, -1);
      set_rest(e, 0);
    }
  }

  CheckReport rep = check_upward(d, emb, lab);
  if (!rep.ok()) {
    throw InternalError("witness labeling fails the upward check: " +
                        first_violation(rep));
  }
  return {std::move(emb), std::move(lab)};
}

// ----------------------------------------------------------- normalization

PlaneEmbedding normalize_embedding(const GadgetDag& g, PlaneEmbedding emb) {
  if (emb.faces.empty()) trace_faces(g.dag, emb);
  if (emb.outer_face < 0) throw InvalidEmbedding("embedding has no outer face");
  const std::vector<int>& f = emb.faces[static_cast<std::size_t>(emb.outer_face)];
  if (f.size() != 4) return emb;
  // the only 4-cycles of the gadget are the C_j, so the outer face contains
  // a quad vertex naming its position
  int pos = -1;
  for (int v : f) {
    if (v < g.cycle_len) continue;
    pos = g.quad_positions[static_cast<std::size_t>((v - g.cycle_len) / 2)];
    break;
  }
  assert(pos >= 0);
  // the face across the middle edge lies on the same side of C as C_j, so
  // re-seating the outer face there moves every quad side label nowhere
  int mid = g.quad_middle_edge(pos);
  emb.outer_face = emb.edge_faces[static_cast<std::size_t>(mid)][0] == emb.outer_face
                       ? emb.edge_faces[static_cast<std::size_t>(mid)][1]
                       : emb.edge_faces[static_cast<std::size_t>(mid)][0];
  return emb;
}

// -------------------------------------------------------------- extraction

ExtractedPartition extract_partition(const GadgetDag& g, const UpwardEmbedding& ue) {
  const Dag& d = g.dag;
  const PlaneEmbedding& emb = ue.emb;
  if (emb.faces.empty() || emb.outer_face < 0) {
    throw InvalidEmbedding("embedding must be traced with an outer face");
  }
  CheckReport rep = check_upward(d, emb, ue.labels);
  if (!rep.ok()) {
    throw InvalidEmbedding("embedding is not upward: " + first_violation(rep));
  }
  std::vector<std::uint8_t> cyc(static_cast<std::size_t>(d.edge_count()), 0);
  for (int e = 0; e < g.cycle_len; ++e) cyc[static_cast<std::size_t>(e)] = 1;
  std::vector<std::uint8_t> inside = faces_inside_cycle(d, emb, cyc);

  ExtractedPartition out;
  long long sum1 = 0, total = 0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    total += g.values[i];
    int qf = g.quad_face(emb, g.p_range[i][0]);
    if (inside[static_cast<std::size_t>(qf)]) {
      out.s1.push_back(static_cast<int>(i));
      sum1 += g.values[i];
    } else {
      out.s2.push_back(static_cast<int>(i));
    }
  }
  if (2 * sum1 != total) throw InternalError("extracted split is unbalanced");
  return out;
}

}  // namespace updag
