#include "updag/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace updag {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// Positions of every edge inside the rotation lists of its two endpoints,
// giving O(1) successor steps while tracing faces.
struct RotationIndex {
  std::vector<int> at_tail, at_head;

  void build(const Dag& d, const std::vector<std::vector<int>>& rotation) {
    const int n = d.vertex_count();
    at_tail.assign(d.edge_count(), -1);
    at_head.assign(d.edge_count(), -1);
    if (static_cast<int>(rotation.size()) != n) {
      throw InvalidEmbedding("rotation list count differs from vertex count");
    }
    for (int v = 0; v < n; ++v) {
      if (static_cast<int>(rotation[v].size()) != d.degree(v)) {
        throw InvalidEmbedding("rotation of vertex " + std::to_string(v) +
                               " does not list its incident edges");
      }
      for (int t = 0; t < static_cast<int>(rotation[v].size()); ++t) {
        int e = rotation[v][t];
        if (e < 0 || e >= d.edge_count() ||
            (d.edge(e).tail != v && d.edge(e).head != v)) {
          throw InvalidEmbedding("rotation of vertex " + std::to_string(v) +
                                 " contains a non-incident edge");
        }
        int& cell = d.edge(e).tail == v ? at_tail[e] : at_head[e];
        if (cell != -1) {
          throw InvalidEmbedding("rotation of vertex " + std::to_string(v) +
                                 " repeats edge " + std::to_string(e));
        }
        cell = t;
      }
    }
  }

  int pos(const Dag& d, int e, int v) const {
    return d.edge(e).tail == v ? at_tail[e] : at_head[e];
  }
};

}  // namespace

void trace_faces(const Dag& d, PlaneEmbedding& emb) {
  const int n = d.vertex_count();
  const int m = d.edge_count();
  RotationIndex idx;
  idx.build(d, emb.rotation);

  emb.faces.clear();
  emb.face_edges.clear();
  emb.corner_face.assign(n, {});
  for (int v = 0; v < n; ++v) emb.corner_face[v].assign(d.degree(v), -1);
  emb.edge_faces.assign(m, {-1, -1});

  // A half edge 2e+dir is edge e traversed tail->head (dir 0) or head->tail.
  std::vector<std::uint8_t> visited(2 * static_cast<std::size_t>(m), 0);
  for (int h0 = 0; h0 < 2 * m; ++h0) {
    if (visited[h0]) continue;
    const int f = static_cast<int>(emb.faces.size());
    emb.faces.emplace_back();
    emb.face_edges.emplace_back();
    int h = h0;
    do {
      visited[h] = 1;
      const int e = h >> 1;
      const int from = (h & 1) ? d.edge(e).head : d.edge(e).tail;
      const int to = d.other_end(e, from);
      emb.faces[f].push_back(from);
      emb.face_edges[f].push_back(e);
      emb.edge_faces[e][h & 1] = f;
      // Arriving at `to` via position t consumes the corner (t, t+1).
      const int t = idx.pos(d, e, to);
      emb.corner_face[to][t] = f;
      const int deg = static_cast<int>(emb.rotation[to].size());
      const int e2 = emb.rotation[to][(t + 1) % deg];
      h = 2 * e2 + (d.edge(e2).tail == to ? 0 : 1);
    } while (h != h0);
  }

  if (static_cast<int>(emb.faces.size()) != m - n + 2) {
    throw InvalidEmbedding("rotation system is not planar: expected " +
                           std::to_string(m - n + 2) + " faces, traced " +
                           std::to_string(emb.faces.size()));
  }
  // Every face boundary must be a simple cycle.
  std::vector<int> stamp(n, -1);
  for (int f = 0; f < emb.face_count(); ++f) {
    for (int v : emb.faces[f]) {
      if (stamp[v] == f) {
        throw InvalidEmbedding("face " + std::to_string(f) +
                               " boundary visits vertex " + std::to_string(v) +
                               " twice");
      }
      stamp[v] = f;
    }
  }
}

int face_of_traversal(const Dag& d, const PlaneEmbedding& emb, int e, int from) {
  return emb.edge_faces[e][d.edge(e).tail == from ? 0 : 1];
}

bool OuterplaneEmbedding::edge_on_outer_face(const Dag& d, int e) const {
  (void)d;
  return emb.edge_faces[e][0] == emb.outer_face ||
         emb.edge_faces[e][1] == emb.outer_face;
}

namespace {

enum class BuildError { none, not_biconnected, not_outerplanar };

struct BuildResult {
  BuildError err = BuildError::none;
  std::string msg;
  OuterplaneEmbedding o;
};

// Degree-2 shelling with virtual-edge completion, then reversal into a
// circular boundary order. Succeeding here is necessary but not sufficient,
// so the caller re-verifies by tracing faces of the derived rotations.
BuildResult shelled_outer_cycle(const Dag& d) {
  BuildResult r;
  const int n = d.vertex_count();
  const int m = d.edge_count();
  if (m > 2 * n - 3) {
    r.err = BuildError::not_outerplanar;
    r.msg = "edge count exceeds the outerplanar bound";
    return r;
  }

  std::unordered_set<std::uint64_t> alive_pair;
  alive_pair.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (const Edge& e : d.edges()) {
    alive_pair.insert(pair_key(e.tail, e.head));
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
    ++deg[e.tail];
    ++deg[e.head];
  }

  std::vector<std::uint8_t> alive(n, 1);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 2) queue.push_back(v);
  }
  std::vector<std::array<int, 3>> triples;
  triples.reserve(n);
  int alive_count = n;
  std::size_t qh = 0;
  while (alive_count > 3 && qh < queue.size()) {
    const int v = queue[qh++];
    if (!alive[v] || deg[v] != 2) continue;
    // Compact stale adjacency entries; exactly two live neighbors remain.
    std::vector<int>& av = adj[v];
    std::size_t w = 0;
    for (int u : av) {
      if (alive[u] && alive_pair.count(pair_key(v, u))) av[w++] = u;
    }
    av.resize(w);
    assert(av.size() == 2);
    const int a = av[0];
    const int b = av[1];
    alive[v] = 0;
    --alive_count;
    alive_pair.erase(pair_key(v, a));
    alive_pair.erase(pair_key(v, b));
    --deg[a];
    --deg[b];
    if (!alive_pair.count(pair_key(a, b))) {
      alive_pair.insert(pair_key(a, b));
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++deg[a];
      ++deg[b];
    }
    triples.push_back({v, a, b});
    if (deg[a] == 2) queue.push_back(a);
    if (deg[b] == 2) queue.push_back(b);
    if (deg[a] < 2 || deg[b] < 2) {
      r.err = BuildError::not_biconnected;
      r.msg = "shelling exposed a vertex of degree below 2";
      return r;
    }
  }
  if (alive_count > 3) {
    r.err = BuildError::not_outerplanar;
    r.msg = "no removable degree-2 vertex left";
    return r;
  }

  std::array<int, 3> tri{-1, -1, -1};
  int ti = 0;
  for (int v = 0; v < n; ++v) {
    if (alive[v]) tri[ti++] = v;
  }
  assert(ti == 3);
  if (!alive_pair.count(pair_key(tri[0], tri[1])) ||
      !alive_pair.count(pair_key(tri[1], tri[2])) ||
      !alive_pair.count(pair_key(tri[0], tri[2]))) {
    r.err = BuildError::not_outerplanar;
    r.msg = "shelling did not end in a triangle";
    return r;
  }

  // Reverse the shelling: each removed vertex must slot back between its two
  // recorded neighbors, which therefore have to be consecutive right now.
  std::vector<int> nxt(n, -1), prv(n, -1);
  nxt[tri[0]] = tri[1];
  nxt[tri[1]] = tri[2];
  nxt[tri[2]] = tri[0];
  prv[tri[1]] = tri[0];
  prv[tri[2]] = tri[1];
  prv[tri[0]] = tri[2];
  for (auto it = triples.rbegin(); it != triples.rend(); ++it) {
    const auto [v, a, b] = *it;
    if (nxt[a] == b) {
      nxt[a] = v;
      prv[v] = a;
      nxt[v] = b;
      prv[b] = v;
    } else if (nxt[b] == a) {
      nxt[b] = v;
      prv[v] = b;
      nxt[v] = a;
      prv[a] = v;
    } else {
      r.err = BuildError::not_outerplanar;
      r.msg = "removed vertex does not fit back on the boundary";
      return r;
    }
  }

  // Canonical boundary order: start at vertex 0, heading toward its smaller
  // boundary neighbor.
  std::vector<int>& cyc = r.o.outer_cycle;
  cyc.reserve(n);
  const bool forward = nxt[0] < prv[0];
  int cur = 0;
  do {
    cyc.push_back(cur);
    cur = forward ? nxt[cur] : prv[cur];
  } while (cur != 0);
  return r;
}

BuildResult build_outerplane(const Dag& d) {
  BuildResult r;
  if (d.vertex_count() < 3) {
    r.err = BuildError::not_biconnected;
    r.msg = "fewer than 3 vertices";
    return r;
  }
  if (!is_biconnected(d)) {
    r.err = BuildError::not_biconnected;
    r.msg = "graph is not biconnected";
    return r;
  }
  r = shelled_outer_cycle(d);
  if (r.err != BuildError::none) return r;

  const int n = d.vertex_count();
  OuterplaneEmbedding& o = r.o;
  o.pos_on_outer.assign(n, -1);
  for (int i = 0; i < n; ++i) o.pos_on_outer[o.outer_cycle[i]] = i;

  // All consecutive boundary pairs must be actual graph edges, otherwise the
  // shelling reconstructed a boundary the graph cannot realize.
  for (int i = 0; i < n; ++i) {
    if (d.undirected_edge_id(o.outer_cycle[i], o.outer_cycle[(i + 1) % n]) == -1) {
      r.err = BuildError::not_outerplanar;
      r.msg = "reconstructed boundary uses a missing edge";
      return r;
    }
  }

  // Rotation = incident edges by clockwise distance along the boundary.
  o.emb.rotation.assign(n, {});
  for (int v = 0; v < n; ++v) {
    const int p = o.pos_on_outer[v];
    auto inc = d.incident(v);
    std::vector<int>& rot = o.emb.rotation[v];
    rot.assign(inc.begin(), inc.end());
    std::sort(rot.begin(), rot.end(), [&](int x, int y) {
      const int kx = (o.pos_on_outer[d.other_end(x, v)] - p + n) % n;
      const int ky = (o.pos_on_outer[d.other_end(y, v)] - p + n) % n;
      return kx < ky;
    });
  }

  try {
    trace_faces(d, o.emb);
  } catch (const InvalidEmbedding& ex) {
    r.err = BuildError::not_outerplanar;
    r.msg = ex.what();
    return r;
  }

  // The outer face is the orbit whose origin sequence equals the canonical
  // outer cycle; checking the sequence (not just the length) disambiguates
  // the plain cycle graph, where both faces have full length.
  const int e0 = d.undirected_edge_id(o.outer_cycle[0], o.outer_cycle[1]);
  auto matches_outer = [&](int f) {
    const std::vector<int>& fv = o.emb.faces[f];
    if (static_cast<int>(fv.size()) != n) return false;
    int off = -1;
    for (int i = 0; i < n; ++i) {
      if (fv[i] == o.outer_cycle[0]) {
        off = i;
        break;
      }
    }
    if (off < 0) return false;
    for (int i = 0; i < n; ++i) {
      if (fv[(off + i) % n] != o.outer_cycle[i]) return false;
    }
    return true;
  };
  o.emb.outer_face = -1;
  for (int side = 0; side < 2; ++side) {
    const int f = o.emb.edge_faces[e0][side];
    if (matches_outer(f)) {
      o.emb.outer_face = f;
      break;
    }
  }
  if (o.emb.outer_face == -1) {
    r.err = BuildError::not_outerplanar;
    r.msg = "no face realizes the full boundary cycle";
    return r;
  }

  o.internal_faces.clear();
  for (int f = 0; f < o.emb.face_count(); ++f) {
    if (f != o.emb.outer_face) o.internal_faces.push_back(f);
  }
  return r;
}

}  // namespace

OuterplaneEmbedding outerplane_embedding(const Dag& d) {
  BuildResult r = build_outerplane(d);
  switch (r.err) {
    case BuildError::none:
      return std::move(r.o);
    case BuildError::not_biconnected:
      throw NotBiconnected(r.msg);
    case BuildError::not_outerplanar:
      throw NotOuterplanar(r.msg);
  }
  throw InternalError("unreachable");
}

namespace {

std::vector<std::vector<int>> biconnected_blocks(const Dag& d) {
  const int n = d.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), next(n, 0), parent_edge(n, -1);
  std::vector<int> stack, estack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    stack.assign(1, root);
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int v = stack.back();
      auto inc = d.incident(v);
      if (next[v] < static_cast<int>(inc.size())) {
        const int e = inc[next[v]++];
        if (e == parent_edge[v]) continue;
        const int w = d.other_end(e, v);
        if (disc[w] == -1) {
          estack.push_back(e);
          parent_edge[w] = e;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (disc[w] < disc[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const int p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            blocks.emplace_back();
            while (true) {
              const int e = estack.back();
              estack.pop_back();
              blocks.back().push_back(e);
              if (e == parent_edge[v]) break;
            }
          }
        }
      }
    }
  }
  return blocks;
}

}  // namespace

bool is_outerplanar(const Dag& d) {
  for (const std::vector<int>& block : biconnected_blocks(d)) {
    if (block.size() < 2) continue;  // a bridge is trivially outerplanar
    // Relabel the block into a compact subgraph.
    std::vector<int> verts;
    for (int e : block) {
      verts.push_back(d.edge(e).tail);
      verts.push_back(d.edge(e).head);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(d.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(block.size());
    for (int e : block) {
      edges.push_back({local[d.edge(e).tail], local[d.edge(e).head]});
    }
    Dag sub(static_cast<int>(verts.size()), std::move(edges));
    if (build_outerplane(sub).err != BuildError::none) return false;
  }
  return true;
}

ExtendedDualTree extended_dual_tree(const Dag& d, const OuterplaneEmbedding& o) {
  ExtendedDualTree t;
  t.node_of_face.assign(o.emb.face_count(), -1);
  t.leaf_of_edge.assign(d.edge_count(), -1);
  for (int f : o.internal_faces) {
    t.node_of_face[f] = static_cast<int>(t.nodes.size());
    DualNode node;
    node.is_face = true;
    node.face = f;
    t.nodes.push_back(std::move(node));
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (o.edge_on_outer_face(d, e)) {
      t.leaf_of_edge[e] = static_cast<int>(t.nodes.size());
      DualNode node;
      node.edge = e;
      t.nodes.push_back(std::move(node));
    }
  }
  // Ascending edge ids keep every neighbor list deterministically sorted by
  // the shared edge.
  for (int e = 0; e < d.edge_count(); ++e) {
    const int f0 = o.emb.edge_faces[e][0];
    const int f1 = o.emb.edge_faces[e][1];
    int u, v;
    if (f0 == o.emb.outer_face || f1 == o.emb.outer_face) {
      u = t.leaf_of_edge[e];
      v = t.node_of_face[f0 == o.emb.outer_face ? f1 : f0];
    } else {
      u = t.node_of_face[f0];
      v = t.node_of_face[f1];
    }
    t.nodes[u].nbrs.push_back(v);
    t.nodes[u].via_edge.push_back(e);
    t.nodes[v].nbrs.push_back(u);
    t.nodes[v].via_edge.push_back(e);
  }
  return t;
}

RootedDualTree root_at_edge(const Dag& d, const OuterplaneEmbedding& o,
                            const ExtendedDualTree& t, int e) {
  if (e < 0 || e >= d.edge_count()) {
    throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  }
  if (t.leaf_of_edge[e] == -1) {
    throw EdgeNotOnOuterFace("edge " + std::to_string(e) + " joining " +
                             std::to_string(d.edge(e).tail) + " and " +
                             std::to_string(d.edge(e).head) +
                             " is not on the outer face");
  }
  RootedDualTree rt;
  rt.root_edge = e;
  rt.node_of_face.assign(o.emb.face_count(), -1);

  const DualNode& leaf = t.nodes[t.leaf_of_edge[e]];
  assert(leaf.nbrs.size() == 1);
  const int root_face = t.nodes[leaf.nbrs[0]].face;

  // Iterative post-order over internal faces; children are emitted before
  // their parent so a forward sweep over rt.nodes is bottom-up.
  struct Frame {
    int face;
    int parent_face;
    int parent_edge;
    bool expanded;
  };
  std::vector<Frame> stack{{root_face, -1, e, false}};
  while (!stack.empty()) {
    if (!stack.back().expanded) {
      stack.back().expanded = true;
      // Pushing invalidates references into the stack, so read the frame
      // fields out first.
      const int face = stack.back().face;
      const int parent_face = stack.back().parent_face;
      const DualNode& dn = t.nodes[t.node_of_face[face]];
      // Push children (neighbor face nodes other than the parent face).
      for (std::size_t i = 0; i < dn.nbrs.size(); ++i) {
        const DualNode& nb = t.nodes[dn.nbrs[i]];
        if (!nb.is_face || nb.face == parent_face) continue;
        stack.push_back({nb.face, face, dn.via_edge[i], false});
      }
      continue;
    }
    const Frame done = stack.back();
    stack.pop_back();

    RootedNode node;
    node.face = done.face;
    node.parent_edge = done.parent_edge;

    const std::vector<int>& L = o.emb.faces[done.face];
    const std::vector<int>& LE = o.emb.face_edges[done.face];
    const int len = static_cast<int>(L.size());
    const Edge& pe = d.edge(done.parent_edge);
    const int a = std::min(pe.tail, pe.head);
    int ia = -1;
    for (int i = 0; i < len; ++i) {
      if (L[i] == a) {
        ia = i;
        break;
      }
    }
    assert(ia >= 0);
    node.cycle.resize(len);
    node.cycle_edges.resize(len);
    node.cycle_edges[0] = done.parent_edge;
    if (LE[ia] == done.parent_edge) {
      // Walk the boundary backward so the first step avoids the parent edge.
      for (int i = 0; i < len; ++i) {
        node.cycle[i] = L[(ia - i + len) % len];
        if (i >= 1) node.cycle_edges[i] = LE[(ia - i + len) % len];
      }
    } else {
      for (int i = 0; i < len; ++i) {
        node.cycle[i] = L[(ia + i) % len];
        if (i >= 1) node.cycle_edges[i] = LE[(ia + i - 1) % len];
      }
    }
    assert(node.cycle[0] == a);
    assert(node.cycle.back() == std::max(pe.tail, pe.head));

    const int k = node.k();
    node.child.assign(k + 1, -1);
    for (int i = 1; i <= k; ++i) {
      const int ce = node.cycle_edges[i];
      const int f0 = o.emb.edge_faces[ce][0];
      const int f1 = o.emb.edge_faces[ce][1];
      const int across = f0 == done.face ? f1 : f0;
      if (across != o.emb.outer_face) {
        node.child[i] = rt.node_of_face[across];
        assert(node.child[i] >= 0);
      }
    }
    node.swch.assign(k + 1, 0);
    for (int i = 0; i <= k; ++i) {
      const int v = node.cycle[i];
      const int ea = i == 0 ? done.parent_edge : node.cycle_edges[i];
      const int eb = i == k ? done.parent_edge : node.cycle_edges[i + 1];
      node.swch[i] = d.out_of(ea, v) == d.out_of(eb, v) ? 1 : 0;
    }

    rt.node_of_face[done.face] = static_cast<int>(rt.nodes.size());
    rt.nodes.push_back(std::move(node));
  }

  rt.root_child = static_cast<int>(rt.nodes.size()) - 1;
  // Parent pointers point upward; fill them from the child arrays.
  for (int s = 0; s < static_cast<int>(rt.nodes.size()); ++s) {
    for (int c : rt.nodes[s].child) {
      if (c >= 0) rt.nodes[c].parent = s;
    }
  }
  return rt;
}

PlaneEmbedding assemble_embedding(const Dag& d, const RootedDualTree& t,
                                  const std::vector<Side>& sides) {
  if (sides.size() != t.nodes.size()) {
    throw InvalidInput("side assignment size differs from dual node count");
  }
  const int m = d.edge_count();
  // Per-vertex circular rotation lists as linked slots; slot 2e+1 is edge e
  // seen from its head. Values stored are edge ids.
  std::vector<int> nxt(2 * static_cast<std::size_t>(m), -1);
  std::vector<int> prv(2 * static_cast<std::size_t>(m), -1);
  auto slot = [&](int e, int v) { return 2 * e + (d.edge(e).head == v ? 1 : 0); };
  auto link_two = [&](int v, int a, int b) {
    nxt[slot(a, v)] = b;
    nxt[slot(b, v)] = a;
    prv[slot(a, v)] = b;
    prv[slot(b, v)] = a;
  };
  auto insert_after = [&](int v, int g, int f) {
    const int h = nxt[slot(g, v)];
    nxt[slot(g, v)] = f;
    prv[slot(f, v)] = g;
    nxt[slot(f, v)] = h;
    prv[slot(h, v)] = f;
  };
  auto insert_before = [&](int v, int g, int f) {
    const int h = prv[slot(g, v)];
    prv[slot(g, v)] = f;
    nxt[slot(f, v)] = g;
    prv[slot(f, v)] = h;
    nxt[slot(h, v)] = f;
  };

  // Parents before children: walk the post order backward. Face traces turn
  // from an arriving edge to its rotation successor, so each node's interior
  // region is traced either along its cycle order or against it;
  // fwd_interior[id] records which. Each splice whose path runs forward in
  // the child's cycle frame, and each outside placement, reverses it.
  std::vector<std::uint8_t> fwd_interior(t.nodes.size(), 0);
  fwd_interior[t.root_child] = 1;
  for (int id = static_cast<int>(t.nodes.size()) - 1; id >= 0; --id) {
    const RootedNode& s = t.nodes[id];
    const int k = s.k();
    if (id == t.root_child) {
      // Base layout. The interior corner at cycle position i lies between
      // the previous and the next cycle edge, in that rotation order.
      for (int i = 0; i <= k; ++i) {
        const int ea = i == 0 ? s.parent_edge : s.cycle_edges[i];
        const int eb = i == k ? s.parent_edge : s.cycle_edges[i + 1];
        link_two(s.cycle[i], ea, eb);
      }
    }
    // Splice every child path next to its shared edge.
    for (int i = 1; i <= k; ++i) {
      const int cid = s.child[i];
      if (cid < 0) continue;
      const RootedNode& c = t.nodes[cid];
      const Side side = sides[cid];
      const int g = c.parent_edge;
      const int x = s.cycle[i - 1];
      const int y = s.cycle[i];
      const int kc = c.k();
      // Path from x to y; c.cycle starts at the smaller endpoint of g.
      const bool fwd = c.cycle[0] == x;
      assert(fwd || c.cycle[0] == y);
      auto path_vertex = [&](int j) { return fwd ? c.cycle[j] : c.cycle[kc - j]; };
      auto path_edge = [&](int j) {
        return fwd ? c.cycle_edges[j] : c.cycle_edges[kc + 1 - j];
      };
      // The parent's region meets x in the corner just before g exactly when
      // the parent's interior trace crosses g from x to y.
      const bool inside = side == Side::in;
      if (inside == (fwd_interior[id] != 0)) {
        insert_before(x, g, path_edge(1));
        insert_after(y, g, path_edge(kc));
      } else {
        insert_after(x, g, path_edge(1));
        insert_before(y, g, path_edge(kc));
      }
      fwd_interior[cid] = ((fwd_interior[id] != 0) != fwd) != !inside ? 1 : 0;
      for (int j = 1; j <= kc - 1; ++j) {
        link_two(path_vertex(j), path_edge(j), path_edge(j + 1));
      }
    }
  }

  // Materialize rotation vectors, starting each list at the smallest
  // incident edge id for deterministic serialization.
  PlaneEmbedding emb;
  emb.rotation.assign(d.vertex_count(), {});
  for (int v = 0; v < d.vertex_count(); ++v) {
    auto inc = d.incident(v);
    assert(!inc.empty());
    const int start = *std::min_element(inc.begin(), inc.end());
    std::vector<int>& rot = emb.rotation[v];
    rot.reserve(inc.size());
    int e = start;
    do {
      rot.push_back(e);
      e = nxt[slot(e, v)];
      if (e < 0) throw InternalError("assembly left a broken rotation list");
    } while (e != start);
    if (rot.size() != inc.size()) {
      throw InternalError("assembly dropped edges at vertex " + std::to_string(v));
    }
  }

  trace_faces(d, emb);
  // The outer face is the one seen when traversing the root edge from its
  // smaller endpoint; no child is ever spliced across the root edge, so this
  // traversal stays on the exterior.
  const RootedNode& root = t.nodes[t.root_child];
  emb.outer_face = face_of_traversal(d, emb, t.root_edge, root.cycle[0]);
  return emb;
}

std::vector<std::uint8_t> faces_inside_cycle(const Dag& d,
                                             const PlaneEmbedding& emb,
                                             const std::vector<std::uint8_t>& cycle_edge) {
  if (cycle_edge.size() != static_cast<std::size_t>(d.edge_count())) {
    throw InvalidInput("cycle edge marker size differs from edge count");
  }
  const int fc = emb.face_count();
  std::vector<std::uint8_t> color(fc, 0);
  std::vector<std::uint8_t> seen(fc, 0);
  std::vector<int> queue{emb.outer_face};
  seen[emb.outer_face] = 1;
  color[emb.outer_face] = 0;
  std::size_t qh = 0;
  while (qh < queue.size()) {
    const int f = queue[qh++];
    for (int e : emb.face_edges[f]) {
      const int g = emb.edge_faces[e][0] == f ? emb.edge_faces[e][1]
                                              : emb.edge_faces[e][0];
      const std::uint8_t want = color[f] ^ (cycle_edge[e] ? 1 : 0);
      if (!seen[g]) {
        seen[g] = 1;
        color[g] = want;
        queue.push_back(g);
      } else if (color[g] != want) {
        throw InvalidEmbedding("edge set does not separate the embedding consistently");
      }
    }
  }
  for (int f = 0; f < fc; ++f) {
    if (!seen[f]) throw InvalidEmbedding("embedding face structure is disconnected");
  }
  return color;
}

}  // namespace updag
