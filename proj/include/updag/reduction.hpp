#pragma once
// Partition instances compiled into upward-planarity instances and back.
//
// For values a_1..a_k with total n, the gadget is a cycle
// C = (u_0, ..., u_{6n+2k+1}) whose stretch u_1..u_{6n+2k} splits into
// consecutive paths P_i of 6 a_i + 2 vertices each.  Every edge interior to
// some P_i carries a quad path Q_j = (u_j, v_j, w_j, u_{j+1}) glued to its
// endpoints, so Q_j and the edge (u_j, u_{j+1}) bound a 4-cycle C_j.  The
// closing edge (u_0, u_{6n+2k+1}) is the prescribed outer edge.

#include <array>
#include <vector>

#include "updag/dag.hpp"
#include "updag/embedding.hpp"
#include "updag/upward.hpp"

namespace updag {

struct GadgetDag {
  Dag dag;
  std::vector<long long> values;
  // number of cycle vertices, 6 n + 2 k + 2; vertex ids 0..cycle_len-1 are
  // the u_j in order, ids beyond are quad vertices
  int cycle_len = 0;
  // edge id of the closing edge (u_0, u_{cycle_len-1})
  int prescribed_edge = -1;
  // item i -> [first, last] u-index of P_i
  std::vector<std::array<int, 2>> p_range;
  // cycle position j -> vertex ids (v_j, w_j), (-1, -1) when the edge
  // (u_j, u_{j+1}) carries no quad path
  std::vector<std::array<int, 2>> quad_at;
  // ascending cycle positions that carry a quad path
  std::vector<int> quad_positions;

  bool has_quad(int j) const { return quad_at[j][0] >= 0; }
  // item owning cycle position j, -1 for connector positions
  int item_of_position(int j) const;
  // id of the undirected edge (v_j, w_j)
  int quad_middle_edge(int j) const;
  // id of the 4-cycle face bounded by Q_j and (u_j, u_{j+1})
  int quad_face(const PlaneEmbedding& emb, int j) const;
};

// Builds the gadget for positive values.  Runs in time linear in the total
// sum.  Throws InvalidInput on empty or non-positive input and
// InstanceTooLarge when vertex ids would overflow int.
GadgetDag build_gadget(const std::vector<long long>& values);

// The canonical upward embedding for a balanced split: quad paths of items
// in s1 lie inside C, all other quad paths outside, with the closing edge on
// the outer face.  s1 holds item indices.  Throws UnbalancedPartition when
// the indexed values do not sum to half the total, InvalidInput on malformed
// indices.  The result always passes check_upward.
UpwardEmbedding witness_embedding(const GadgetDag& g, const std::vector<int>& s1);

// Re-seats the outer face so that every 4-cycle C_j bounds an internal face.
// Rotations are unchanged; when the outer face is some C_j, the face across
// the quad's middle edge becomes the outer face.  Which side of C each quad
// path lies on is preserved.  The embedding must be traced.
PlaneEmbedding normalize_embedding(const GadgetDag& g, PlaneEmbedding emb);

struct ExtractedPartition {
  std::vector<int> s1, s2;  // ascending item indices
};

// Reads a balanced split out of an upward embedding of the gadget: item i
// joins s1 exactly when the quad path of the first edge of P_i lies inside
// C.  Throws InvalidEmbedding when ue fails check_upward.
ExtractedPartition extract_partition(const GadgetDag& g, const UpwardEmbedding& ue);

}  // namespace updag
