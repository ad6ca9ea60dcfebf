#pragma once
// Outerplane embeddings, face tracing, dual trees and embedding assembly.
//
// A plane embedding is stored as a rotation system: the cyclic order of
// incident edge ids around every vertex. Faces are traced orbits; the corner
// between rotation[v][t] and its cyclic successor is identified by (v, t).
// All deterministic conventions live here: the canonical outer cycle starts
// at vertex 0 and proceeds toward the lowest-id outer neighbor, faces are
// numbered in trace-discovery order, dual nodes in face-then-edge order.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "updag/dag.hpp"

namespace updag {

enum class Side : std::uint8_t { in = 0, out = 1 };

inline const char* to_string(Side s) { return s == Side::in ? "in" : "out"; }

struct PlaneEmbedding {
  // vertex -> cyclic list of incident edge ids
  std::vector<std::vector<int>> rotation;
  // face -> boundary vertex cycle (simple for the graphs handled here)
  std::vector<std::vector<int>> faces;
  // face -> boundary edge ids, aligned with faces: face_edges[f][j] joins
  // faces[f][j] and faces[f][j+1 mod len]
  std::vector<std::vector<int>> face_edges;
  int outer_face = -1;
  // vertex -> corner index t -> id of the face containing the corner between
  // rotation[v][t] and rotation[v][(t+1) % deg]
  std::vector<std::vector<int>> corner_face;
  // edge -> the two incident face ids, in trace order
  std::vector<std::array<int, 2>> edge_faces;

  int face_count() const { return static_cast<int>(faces.size()); }
  // Corner index of vertex v on face f, -1 when v is not on f.
  int corner_on_face(int v, int f) const {
    for (int t = 0; t < static_cast<int>(corner_face[v].size()); ++t) {
      if (corner_face[v][t] == f) return t;
    }
    return -1;
  }
};

// Traces all face orbits of emb.rotation and fills faces, face_edges,
// corner_face and edge_faces. Checks that the rotation system is planar
// (Euler count for a connected graph) and that every face boundary is a
// simple cycle; outer_face is left untouched. Throws InvalidEmbedding.
void trace_faces(const Dag& d, PlaneEmbedding& emb);

// Face id of the orbit that traverses edge e starting at vertex from; the
// rotation system must already be traced.
int face_of_traversal(const Dag& d, const PlaneEmbedding& emb, int e, int from);

struct OuterplaneEmbedding {
  PlaneEmbedding emb;
  // all vertices in outer-face order, canonical start and direction
  std::vector<int> outer_cycle;
  // vertex -> position in outer_cycle
  std::vector<int> pos_on_outer;
  // internal face ids ascending (every face except emb.outer_face)
  std::vector<int> internal_faces;

  bool edge_on_outer_face(const Dag& d, int e) const;
};

// The unique outerplane embedding of a biconnected outerplanar graph, up to
// the reflection fixed by the canonical outer cycle direction.
// Throws NotBiconnected / NotOuterplanar.
OuterplaneEmbedding outerplane_embedding(const Dag& d);

// Blockwise outerplanarity of the underlying undirected graph; never throws.
bool is_outerplanar(const Dag& d);

// Extended dual tree: one node per internal face, one leaf per outer edge.
// Face nodes come first (internal face order), then edge leaves (edge id
// order). Neighbor lists are ordered by the shared graph edge id.
struct DualNode {
  bool is_face = false;
  int face = -1;  // internal face id for face nodes
  int edge = -1;  // graph edge id for leaves
  std::vector<int> nbrs;
  std::vector<int> via_edge;  // shared graph edge per neighbor, aligned
};

struct ExtendedDualTree {
  std::vector<DualNode> nodes;
  std::vector<int> node_of_face;  // face id -> node id (-1 for the outer face)
  std::vector<int> leaf_of_edge;  // edge id -> leaf node id (-1 when internal)
};

ExtendedDualTree extended_dual_tree(const Dag& d, const OuterplaneEmbedding& o);

// One face node of the dual tree rooted at an outer edge. The cycle runs
// v_0 .. v_k with (v_0, v_k) the parent edge and v_0 its smaller endpoint;
// cycle_edges[i] joins v_{i-1} and v_i (entry 0 repeats the parent edge).
struct RootedNode {
  int face = -1;
  int parent = -1;       // rooted node id, -1 for the child of the root leaf
  int parent_edge = -1;  // graph edge shared with the parent
  std::vector<int> cycle;
  std::vector<int> cycle_edges;
  std::vector<int> child;            // per position 1..k, rooted id or -1
  std::vector<std::uint8_t> swch;    // per position 0..k, switch in this cycle

  int k() const { return static_cast<int>(cycle.size()) - 1; }
};

// nodes are in post order (children before parents), so a forward sweep is a
// bottom-up pass; root_child is the last node.
struct RootedDualTree {
  int root_edge = -1;
  int root_child = -1;
  std::vector<RootedNode> nodes;
  std::vector<int> node_of_face;  // face id -> rooted node id, -1 outside
};

// Roots the extended dual tree at the leaf of outer edge e.
// Throws EdgeNotOnOuterFace when e does not lie on the outer face.
RootedDualTree root_at_edge(const Dag& d, const OuterplaneEmbedding& o,
                            const ExtendedDualTree& t, int e);

// Builds the plane embedding in which every non-root face node sits on the
// requested side (sides indexed by rooted node id; the root child's entry is
// ignored). The root edge always borders the outer face of the result.
PlaneEmbedding assemble_embedding(const Dag& d, const RootedDualTree& t,
                                  const std::vector<Side>& sides);

// Two-colors the faces of emb against a cycle given by its edge set:
// crossing a cycle edge flips the color, crossing any other edge keeps it.
// Returns 1 for faces enclosed by the cycle (the outer face gets 0).
// Throws InvalidEmbedding when no consistent coloring exists.
std::vector<std::uint8_t> faces_inside_cycle(const Dag& d,
                                             const PlaneEmbedding& emb,
                                             const std::vector<std::uint8_t>& cycle_edge);

}  // namespace updag
