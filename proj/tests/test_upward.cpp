#include "doctest.h"
#include "updag/embedding.hpp"
#include "updag/upward.hpp"

using namespace updag;

namespace {

Dag triangle() { return Dag(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Label every corner of the triangle's canonical embedding by hand.
// Vertex 0 is a source, 2 a sink, 1 is non-switch; a valid labeling gives
// both switches a large (+1) outer corner and a small (-1) inner one.
AngleLabeling valid_triangle_labeling(const Dag&, const OuterplaneEmbedding& o) {
  AngleLabeling lab = AngleLabeling::make_unset(o.emb);
  const int outer = o.emb.outer_face;
  const int inner = o.internal_faces[0];
  auto set = [&](int v, int f, int a) {
    lab.by_corner[v][o.emb.corner_on_face(v, f)] = static_cast<std::int8_t>(a);
  };
  set(0, outer, 1);
  set(0, inner, -1);
  set(1, outer, 0);
  set(1, inner, 0);
  set(2, outer, 1);
  set(2, inner, -1);
  return lab;
}

}  // namespace

TEST_CASE("check_upward accepts a valid triangle labeling") {
  Dag d = triangle();
  OuterplaneEmbedding o = outerplane_embedding(d);
  AngleLabeling lab = valid_triangle_labeling(d, o);
  CheckReport rep = check_upward(d, o.emb, lab);
  CHECK(rep.up0);
  CHECK(rep.up1);
  CHECK(rep.up2);
  CHECK(rep.up3);
  CHECK(rep.ok());
  CHECK(inside_angle(d, o.emb, lab, 0) == -1);
  CHECK(inside_angle(d, o.emb, lab, 1) == 0);
  CHECK(inside_angle(d, o.emb, lab, 2) == -1);
}

TEST_CASE("check_upward reports violations per condition") {
  Dag d = triangle();
  OuterplaneEmbedding o = outerplane_embedding(d);
  const int outer = o.emb.outer_face;
  const int inner = o.internal_faces[0];

  SUBCASE("flat label on a switch corner breaks UP0") {
    AngleLabeling lab = valid_triangle_labeling(d, o);
    lab.by_corner[0][o.emb.corner_on_face(0, outer)] = 0;
    CheckReport rep = check_upward(d, o.emb, lab);
    CHECK_FALSE(rep.up0);
    CHECK_FALSE(rep.ok());
    CHECK(rep.viol0.find("vertex 0") != std::string::npos);
  }
  SUBCASE("two larges at a switch break UP1 and UP3") {
    AngleLabeling lab = valid_triangle_labeling(d, o);
    lab.by_corner[0][o.emb.corner_on_face(0, inner)] = 1;
    CheckReport rep = check_upward(d, o.emb, lab);
    CHECK(rep.up0);
    CHECK_FALSE(rep.up1);
    CHECK_FALSE(rep.up3);
  }
  SUBCASE("nonzero at a non-switch corner breaks UP0 and UP2") {
    AngleLabeling lab = valid_triangle_labeling(d, o);
    lab.by_corner[1][o.emb.corner_on_face(1, inner)] = -1;
    CheckReport rep = check_upward(d, o.emb, lab);
    CHECK_FALSE(rep.up0);
    CHECK_FALSE(rep.up2);
    CHECK(rep.viol2.find("vertex 1") != std::string::npos);
  }
  SUBCASE("swapping the sink's labels breaks UP3 only") {
    AngleLabeling lab = valid_triangle_labeling(d, o);
    lab.by_corner[2][o.emb.corner_on_face(2, outer)] = -1;
    lab.by_corner[2][o.emb.corner_on_face(2, inner)] = 1;
    CheckReport rep = check_upward(d, o.emb, lab);
    CHECK(rep.up0);
    CHECK(rep.up1);
    CHECK(rep.up2);
    CHECK_FALSE(rep.up3);
  }
}

TEST_CASE("check_upward rejects a non-total labeling") {
  Dag d = triangle();
  OuterplaneEmbedding o = outerplane_embedding(d);
  AngleLabeling lab = AngleLabeling::make_unset(o.emb);
  CHECK_THROWS_AS(check_upward(d, o.emb, lab), DomainMismatch);
  AngleLabeling bad = valid_triangle_labeling(d, o);
  bad.by_corner[2].pop_back();
  CHECK_THROWS_AS(check_upward(d, o.emb, bad), DomainMismatch);
}

TEST_CASE("inside_angle requires the vertex on the outer face") {
  // Wheel-free check needs a vertex off the outer face; the smallest
  // outerplanar graphs keep everything outer, so fake it by asking for the
  // inner face through a labeling on the diamond's chord endpoints instead.
  Dag d(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  OuterplaneEmbedding o = outerplane_embedding(d);
  AngleLabeling lab = AngleLabeling::make_unset(o.emb);
  // All vertices of an outerplane embedding lie on the outer face, so the
  // error path is exercised through an assembled embedding in the oracle
  // tests; here the accessor itself must succeed for every vertex.
  for (int v = 0; v < 4; ++v) {
    lab.by_corner[v].assign(lab.by_corner[v].size(), 0);
    CHECK(inside_angle(d, o.emb, lab, v) == 0);
  }
}
