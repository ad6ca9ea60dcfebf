// Gadget construction, witness embeddings, normalization and extraction.

#include "updag/reduction.hpp"

#include <doctest.h>

#include <vector>

#include "updag/errors.hpp"

using namespace updag;

namespace {

struct Tally {
  int small = 0, flat = 0, large = 0;
};

// Outer-face label counts over the given vertices; absent vertices are
// skipped so inside quad paths contribute nothing.
Tally outer_tally(const UpwardEmbedding& ue, const std::vector<int>& verts) {
  Tally t;
  for (int v : verts) {
    int c = ue.emb.corner_on_face(v, ue.emb.outer_face);
    if (c < 0) continue;
    int lab = ue.labels.by_corner[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
    if (lab == -1) ++t.small;
    if (lab == 0) ++t.flat;
    if (lab == 1) ++t.large;
  }
  return t;
}

// All vertices owned by item i: its path plus its quad interiors.
std::vector<int> item_vertices(const GadgetDag& g, int i) {
  std::vector<int> out;
  for (int u = g.p_range[static_cast<std::size_t>(i)][0];
       u <= g.p_range[static_cast<std::size_t>(i)][1]; ++u) {
    out.push_back(u);
  }
  for (int j = g.p_range[static_cast<std::size_t>(i)][0];
       j < g.p_range[static_cast<std::size_t>(i)][1]; ++j) {
    out.push_back(g.quad_at[static_cast<std::size_t>(j)][0]);
    out.push_back(g.quad_at[static_cast<std::size_t>(j)][1]);
  }
  return out;
}

std::vector<std::uint8_t> quad_sides(const GadgetDag& g, const PlaneEmbedding& emb) {
  std::vector<std::uint8_t> cyc(static_cast<std::size_t>(g.dag.edge_count()), 0);
  for (int e = 0; e < g.cycle_len; ++e) cyc[static_cast<std::size_t>(e)] = 1;
  std::vector<std::uint8_t> inside = faces_inside_cycle(g.dag, emb, cyc);
  std::vector<std::uint8_t> side;
  for (int j : g.quad_positions) {
    side.push_back(inside[static_cast<std::size_t>(g.quad_face(emb, j))]);
  }
  return side;
}

}  // namespace

TEST_CASE("gadget shape for values 1,1,2") {
  GadgetDag g = build_gadget({1, 1, 2});
  CHECK(g.cycle_len == 32);
  CHECK(g.dag.vertex_count() == 86);
  CHECK(g.dag.edge_count() == 113);
  CHECK(g.prescribed_edge == 31);
  CHECK(g.dag.edge(31).tail == 0);
  CHECK(g.dag.edge(31).head == 31);
  REQUIRE(g.p_range.size() == 3);
  CHECK(g.p_range[0] == std::array<int, 2>{1, 8});
  CHECK(g.p_range[1] == std::array<int, 2>{9, 16});
  CHECK(g.p_range[2] == std::array<int, 2>{17, 30});
  CHECK(g.quad_positions.size() == 27);
  CHECK(g.item_of_position(1) == 0);
  CHECK(g.item_of_position(7) == 0);
  CHECK(g.item_of_position(8) == -1);
  CHECK(g.item_of_position(9) == 1);
  CHECK(g.item_of_position(16) == -1);
  CHECK(g.item_of_position(17) == 2);
  CHECK(g.item_of_position(29) == 2);
  CHECK(g.item_of_position(30) == -1);

  ValidationReport rep = validate(g.dag);
  CHECK(rep.is_acyclic);
  CHECK(rep.is_biconnected);
  CHECK(rep.is_outerplanar);
}

TEST_CASE("gadget orientations and switches for values 1,1") {
  GadgetDag g = build_gadget({1, 1});
  CHECK(g.cycle_len == 18);
  CHECK(g.dag.vertex_count() == 46);
  CHECK(g.p_range[0] == std::array<int, 2>{1, 8});
  CHECK(g.p_range[1] == std::array<int, 2>{9, 16});

  const Dag& d = g.dag;
  // path edges leave their odd endpoint, everything else leaves u_j
  CHECK(d.edge(0).tail == 0);
  CHECK(d.edge(1).tail == 1);   // position 1, odd
  CHECK(d.edge(2).tail == 3);   // position 2, even path edge enters u_2
  CHECK(d.edge(8).tail == 8);   // connector between the two paths
  CHECK(d.edge(16).tail == 16);
  CHECK(d.edge(17).tail == 0);  // closing edge
  CHECK(d.edge(17).head == 17);

  // the only cycle switches are the closing edge's endpoints
  CHECK(d.is_switch(0));
  CHECK(d.is_switch(17));
  for (int u = 1; u <= 16; ++u) CHECK_FALSE(d.is_switch(u));
  // quad interiors alternate source/sink by position parity
  REQUIRE(g.quad_at[1] == std::array<int, 2>{18, 19});
  CHECK(d.is_switch(18));
  CHECK(d.is_switch(19));
  for (int q = 18; q < 46; ++q) CHECK(d.is_switch(q));
  CHECK(d.degree(1) == 3);
  CHECK(d.degree(2) == 4);
  CHECK(d.degree(8) == 3);
  CHECK(d.degree(9) == 3);
}

TEST_CASE("witness embedding is upward and balanced for values 1,1") {
  GadgetDag g = build_gadget({1, 1});
  UpwardEmbedding ue = witness_embedding(g, {0});
  CHECK(check_upward(g.dag, ue.emb, ue.labels).ok());

  // quads of item 0 inside, quads of item 1 outside
  std::vector<std::uint8_t> side = quad_sides(g, ue.emb);
  REQUIRE(side.size() == 14);
  for (int q = 0; q < 7; ++q) CHECK(side[static_cast<std::size_t>(q)] == 1);
  for (int q = 7; q < 14; ++q) CHECK(side[static_cast<std::size_t>(q)] == 0);

  // outer face balance: 2 + (12 a + 2) large angles against two fewer small
  Tally all = outer_tally(ue, [&] {
    std::vector<int> v;
    for (int u = 0; u < g.dag.vertex_count(); ++u) v.push_back(u);
    return v;
  }());
  CHECK(all.large == 16);
  CHECK(all.small == 14);

  Tally in = outer_tally(ue, item_vertices(g, 0));
  CHECK(in.small == 6);
  CHECK(in.large == 0);
  Tally out = outer_tally(ue, item_vertices(g, 1));
  CHECK(out.small == 8);
  CHECK(out.large == 14);
}

TEST_CASE("witness embedding for values 1,1,2 puts 13 quads inside") {
  GadgetDag g = build_gadget({1, 1, 2});
  UpwardEmbedding ue = witness_embedding(g, {2});
  std::vector<std::uint8_t> side = quad_sides(g, ue.emb);
  int inside = 0;
  for (std::uint8_t s : side) inside += s;
  CHECK(inside == 13);
  CHECK(side.size() - static_cast<std::size_t>(inside) == 14);

  // items 0 and 1 sit outside the cycle, item 2 inside
  for (int i : {0, 1}) {
    Tally t = outer_tally(ue, item_vertices(g, i));
    CHECK(t.small == 8);
    CHECK(t.large == 14);
  }
  Tally t2 = outer_tally(ue, item_vertices(g, 2));
  CHECK(t2.small == 12);
  CHECK(t2.large == 0);
}

TEST_CASE("extraction inverts the witness") {
  GadgetDag g = build_gadget({1, 1, 2});
  {
    ExtractedPartition p = extract_partition(g, witness_embedding(g, {2}));
    CHECK(p.s1 == std::vector<int>{2});
    CHECK(p.s2 == std::vector<int>{0, 1});
  }
  {
    ExtractedPartition p = extract_partition(g, witness_embedding(g, {0, 1}));
    CHECK(p.s1 == std::vector<int>{0, 1});
    CHECK(p.s2 == std::vector<int>{2});
  }
}

TEST_CASE("normalization re-seats a quad outer face and nothing else") {
  GadgetDag g = build_gadget({1, 1});
  UpwardEmbedding ue = witness_embedding(g, {1});
  std::vector<std::uint8_t> want = quad_sides(g, ue.emb);

  PlaneEmbedding same = normalize_embedding(g, ue.emb);
  CHECK(same.outer_face == ue.emb.outer_face);

  // re-seat the outer face onto a 4-cycle, as a re-rooted drawing would
  PlaneEmbedding moved = ue.emb;
  moved.outer_face = g.quad_face(moved, 1);
  PlaneEmbedding fixed = normalize_embedding(g, moved);
  CHECK(fixed.outer_face != moved.outer_face);
  for (int j : g.quad_positions) {
    CHECK(fixed.faces[static_cast<std::size_t>(g.quad_face(fixed, j))].size() == 4);
    CHECK(g.quad_face(fixed, j) != fixed.outer_face);
  }
  CHECK(quad_sides(g, fixed) == want);
  PlaneEmbedding again = normalize_embedding(g, fixed);
  CHECK(again.outer_face == fixed.outer_face);
  CHECK(again.rotation == ue.emb.rotation);
}

TEST_CASE("reduction rejects bad input") {
  CHECK_THROWS_AS(build_gadget({}), InvalidInput);
  CHECK_THROWS_AS(build_gadget({2, 0}), InvalidInput);
  CHECK_THROWS_AS(build_gadget({2, -1}), InvalidInput);

  GadgetDag g = build_gadget({1, 1, 2});
  CHECK_THROWS_AS(witness_embedding(g, {0}), UnbalancedPartition);
  CHECK_THROWS_AS(witness_embedding(g, {0, 1, 2}), UnbalancedPartition);
  CHECK_THROWS_AS(witness_embedding(g, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(witness_embedding(g, {3}), InvalidInput);
  GadgetDag odd = build_gadget({1, 2});
  CHECK_THROWS_AS(witness_embedding(odd, {1}), UnbalancedPartition);

  // a corrupted labeling must not pass the extraction gate
  UpwardEmbedding ue = witness_embedding(g, {2});
  ue.labels.by_corner[0][0] = static_cast<std::int8_t>(-ue.labels.by_corner[0][0]);
  CHECK_THROWS_AS(extract_partition(g, ue), InvalidEmbedding);
}
