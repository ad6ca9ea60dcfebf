#pragma once
// Combinatorial upward-planarity check for a plane embedding of a DAG via
// angle labels. Each vertex-face corner carries a label in {-1, 0, +1},
// where -1 is a small angle, 0 flat and +1 large. The four conditions:
//   UP0  corners between two edges of the same direction are labeled +-1,
//        corners between an incoming and an outgoing edge are labeled 0
//   UP1  a switch vertex of degree d has d-1 small corners and 1 large one
//   UP2  a non-switch vertex of degree d has d-2 small corners and 2 flat
//   UP3  every internal face has #small = #large + 2, the outer face has
//        #small = #large - 2
// A labeling satisfying all four exists exactly when the embedding admits an
// upward-planar drawing with the same outer face.

#include <cstdint>
#include <string>
#include <vector>

#include "updag/dag.hpp"
#include "updag/embedding.hpp"

namespace updag {

// Angle labels addressed by corner, aligned with PlaneEmbedding::corner_face:
// by_corner[v][t] labels the corner between rotation[v][t] and its cyclic
// successor. The sentinel `unset` marks missing assignments.
struct AngleLabeling {
  static constexpr std::int8_t unset = 127;
  std::vector<std::vector<std::int8_t>> by_corner;

  static AngleLabeling make_unset(const PlaneEmbedding& emb) {
    AngleLabeling lab;
    lab.by_corner.resize(emb.rotation.size());
    for (std::size_t v = 0; v < emb.rotation.size(); ++v) {
      lab.by_corner[v].assign(emb.rotation[v].size(), unset);
    }
    return lab;
  }

  // Label of vertex v on face f, resolved through the embedding.
  // Throws DomainMismatch when v has no corner on f.
  int at_face(const PlaneEmbedding& emb, int v, int f) const;
};

// A plane embedding together with a complete corner labeling.
struct UpwardEmbedding {
  PlaneEmbedding emb;
  AngleLabeling labels;
};

struct CheckReport {
  bool up0 = true, up1 = true, up2 = true, up3 = true;
  // First violation per condition, empty when the condition holds.
  std::string viol0, viol1, viol2, viol3;
  bool ok() const { return up0 && up1 && up2 && up3; }
};

// Evaluates all four conditions (never fails fast) against emb, which must
// be a traced embedding with a designated outer face. Throws DomainMismatch
// when the labeling does not cover exactly the corners of emb.
CheckReport check_upward(const Dag& d, const PlaneEmbedding& emb,
                         const AngleLabeling& lab);

// Angle on the inner side of the outer-face corner of v, the negation of
// v's outer label. Throws NotOnOuterFace when v has no outer corner.
int inside_angle(const Dag& d, const PlaneEmbedding& emb,
                 const AngleLabeling& lab, int v);

}  // namespace updag
