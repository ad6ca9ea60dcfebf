// Feasible-set engine: decision steps, condition audit, whole-tree drivers.

#include "updag/feasibility.hpp"

#include <doctest.h>

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "updag/errors.hpp"
#include "updag/oracle.hpp"
#include "updag/reduction.hpp"

using namespace updag;

namespace {

NodeContext bare_context(std::vector<int> cycle, std::vector<std::uint8_t> swch) {
  NodeContext ctx;
  ctx.cycle = std::move(cycle);
  ctx.swch = std::move(swch);
  ctx.children.assign(ctx.cycle.size(), ChildSet{});
  return ctx;
}

void put_child(NodeContext& ctx, int i,
               std::initializer_list<std::pair<int, int>> pairs) {
  ctx.children[i].defined = true;
  for (const auto& p : pairs) {
    ctx.children[i].has[p.first + 1][p.second + 1] = true;
  }
}

// All acyclic orientations of an undirected edge list, one per bitmask.
std::vector<Dag> acyclic_orientations(int n,
                                      const std::vector<std::pair<int, int>>& und) {
  std::vector<Dag> out;
  for (unsigned mask = 0; mask < (1u << und.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < und.size(); ++i) {
      const auto [a, b] = und[i];
      es.push_back(mask >> i & 1u ? Edge{b, a} : Edge{a, b});
    }
    Dag d(n, std::move(es));
    if (is_acyclic(d)) out.push_back(std::move(d));
  }
  return out;
}

// Engine answer for one root edge, as a plain pair set.
PairSet engine_set(const Dag& d, int e) {
  const TestOutcome r = test_upward_report(d, e);
  return r.sweep.sets[r.tree.root_child].pair_set();
}

void check_against_oracle(const Dag& d) {
  const OuterplaneEmbedding o = outerplane_embedding(d);
  bool any_feasible = false;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!o.edge_on_outer_face(d, e)) continue;
    const PairSet expected = brute_feasible_set(d, e);
    const TestOutcome r = test_upward_report(d, e);
    const PairSet got = r.sweep.sets[r.tree.root_child].pair_set();
    REQUIRE_MESSAGE(got == expected, "edge ", e, " of a ", d.vertex_count(),
                    "-vertex instance");
    CHECK(r.upward == !expected.empty());
    if (r.upward) {
      any_feasible = true;
      REQUIRE(r.embedding.has_value());
      // The rebuilt witness realizes the smallest feasible pair.
      CHECK(r.root_pair == *expected.begin());
      CHECK(check_upward(d, r.embedding->emb, r.embedding->labels).ok());
    }
  }
  const AnyEdgeOutcome any = test_upward_any(d);
  CHECK((any.edge >= 0) == any_feasible);
  CHECK(any.embedding.has_value() == any_feasible);
}

}  // namespace

// Section: decision steps on hand-built contexts ---------------------------

TEST_CASE("decide_nu picks the smallest feasible angle") {
  NodeContext ctx = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(ctx, 2, {{0, -1}, {0, 1}});
  CHECK(decide_nu(ctx, 2, 0) == -1);
  CHECK_FALSE(decide_nu(ctx, 2, -1).has_value());
  CHECK_FALSE(decide_nu(ctx, 2, 1).has_value());
  CHECK(decide_nu(ctx, 1, -1) == -1);  // empty position
}

TEST_CASE("decide_mu under a committed right angle") {
  // nu = 1 leaves no room at the shared vertex.
  NodeContext a = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(a, 2, {{-1, 0}});
  CHECK(decide_mu(a, 1, 1) == -1);
  NodeContext b = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(b, 2, {{0, 0}});
  CHECK_FALSE(decide_mu(b, 1, 1).has_value());
  // nu = 0 or a non-switch vertex admits only the unique low entry.
  NodeContext c = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(c, 2, {{0, 1}});
  CHECK(decide_mu(c, 1, 0) == 0);
  NodeContext e = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(e, 2, {{1, 1}});
  CHECK_FALSE(decide_mu(e, 1, 0).has_value());
  NodeContext f = bare_context({0, 1, 2, 3}, {1, 0, 1, 1});
  put_child(f, 2, {{-1, 1}, {1, -1}});
  CHECK(decide_mu(f, 1, -1) == -1);  // non-switch vertex, low rule
  // Empty next position is a sentinel.
  NodeContext g = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  CHECK(decide_mu(g, 1, -1) == -1);
}

TEST_CASE("decide_mu at a free switch vertex") {
  // A pair with both entries low always wins.
  NodeContext a = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(a, 2, {{0, -1}, {1, 1}});
  CHECK(decide_mu(a, 1, -1) == 0);
  // (1, -1) beats the high-angle alternatives.
  NodeContext b = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(b, 2, {{1, -1}, {-1, 1}});
  CHECK(decide_mu(b, 1, -1) == 1);
  // (1, 0) wins when (-1, 1) is absent.
  NodeContext c = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(c, 2, {{1, 0}, {0, 1}});
  CHECK(decide_mu(c, 1, -1) == 1);
  // Without (1, 0), the unique low mu of a high pair is taken.
  NodeContext e = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(e, 2, {{-1, 1}});
  CHECK(decide_mu(e, 1, -1) == -1);
  NodeContext f = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(f, 2, {{0, 1}});
  CHECK(decide_mu(f, 1, -1) == 0);
  // Only (1, 1) left.
  NodeContext g = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(g, 2, {{1, 1}});
  CHECK(decide_mu(g, 1, -1) == 1);
}

TEST_CASE("decide_mu tie between (1,0) and (-1,1) looks one position ahead") {
  // A non-switch vertex after the component cannot take the large angle
  // that -1 would leave there.
  NodeContext a = bare_context({0, 1, 2, 3}, {1, 1, 0, 1});
  put_child(a, 2, {{1, 0}, {-1, 1}});
  CHECK(decide_mu(a, 1, -1) == 1);
  // A flat angle at the next component keeps the chain open.
  NodeContext b = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(b, 2, {{1, 0}, {-1, 1}});
  put_child(b, 3, {{0, 0}});
  CHECK(decide_mu(b, 1, -1) == 1);
  // No flat angle there: the large angle must be preserved instead.
  NodeContext c = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(c, 2, {{1, 0}, {-1, 1}});
  put_child(c, 3, {{-1, -1}});
  CHECK(decide_mu(c, 1, -1) == -1);
  NodeContext e = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(e, 2, {{1, 0}, {-1, 1}});
  CHECK(decide_mu(e, 1, -1) == -1);
}

TEST_CASE("chains glue flat pairs and record forced angles") {
  NodeContext ctx = bare_context({0, 1, 2, 3, 4, 5}, {1, 0, 1, 0, 1, 1});
  put_child(ctx, 2, {{0, 0}});
  put_child(ctx, 3, {{0, 0}});
  std::vector<std::int8_t> mus = {-1, -1, 0, 0, -1, -1};
  std::vector<std::int8_t> nus = {-1, -1, 0, 0, -1, -1};
  const std::vector<Chain> chains = bind_chains(ctx, mus, nus);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].first == 2);
  CHECK(chains[0].last == 3);
  CHECK(chains[0].value == 1);
  CHECK(chains[0].rel_side == std::vector<std::int8_t>{1, 1});
  CHECK(chains[0].marked == std::vector<int>{2});
  CHECK(chains[0].mark_sign == std::vector<std::int8_t>{1});
  // The same run over a non-switch shared vertex flips the side instead.
  NodeContext flip = bare_context({0, 1, 2, 3, 4, 5}, {1, 0, 0, 0, 1, 1});
  put_child(flip, 2, {{0, 0}});
  put_child(flip, 3, {{0, 0}});
  const std::vector<Chain> fchains = bind_chains(flip, mus, nus);
  REQUIRE(fchains.size() == 1);
  CHECK(fchains[0].value == 0);
  CHECK(fchains[0].rel_side == std::vector<std::int8_t>{1, -1});
  CHECK(fchains[0].marked.empty());
  // A broken binding yields two singleton chains.
  std::vector<std::int8_t> nus2 = {-1, -1, -1, 0, -1, -1};
  const std::vector<Chain> singles = bind_chains(ctx, mus, nus2);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0].first == 2);
  CHECK(singles[0].last == 2);
  CHECK(singles[1].first == 3);
  CHECK(singles[1].last == 3);
}

TEST_CASE("integer generation separates fixed and free angles") {
  NodeContext ctx = bare_context({0, 1, 2, 3, 4, 5}, {1, 0, 1, 0, 1, 1});
  put_child(ctx, 2, {{0, 0}});
  put_child(ctx, 3, {{0, 0}});
  const std::vector<std::int8_t> mus = {-1, -1, 0, 0, -1, -1};
  const std::vector<std::int8_t> nus = {-1, -1, 0, 0, -1, -1};
  const std::vector<Chain> chains = bind_chains(ctx, mus, nus);
  CandidateTuple t;
  t.rho0 = -1;
  t.rhok = -1;
  const auto gen = generate_integers(ctx, chains, t, mus, nus);
  REQUIRE(gen.has_value());
  CHECK(gen->fixed == -2);
  REQUIRE(gen->free.size() == 2);
  CHECK(gen->free[0].value == 1);
  CHECK(gen->free[0].chain == 0);
  CHECK(gen->free[1].value == 1);
  CHECK(gen->free[1].vertex == 4);
  CHECK(gen->free_total() == 2);
  CHECK(gen->anchor == std::vector<std::int8_t>{0});
}

TEST_CASE("integer generation pins chains that touch the fixed ends") {
  // Components at positions 1 and 2 glued into one chain: the side fixed
  // for position 1 anchors the whole chain.
  NodeContext ctx = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(ctx, 1, {{0, 0}});
  put_child(ctx, 2, {{0, 0}});
  const std::vector<std::int8_t> mus = {-1, 0, 0, -1};
  const std::vector<std::int8_t> nus = {-1, 0, 0, -1};
  const std::vector<Chain> chains = bind_chains(ctx, mus, nus);
  REQUIRE(chains.size() == 1);
  // Head mark at v_0, interior mark at v_1, tail mark at v_2.
  CHECK(chains[0].marked == std::vector<int>{0, 1, 2});
  CHECK(chains[0].value == 3);
  CandidateTuple t;
  t.rho0 = 1;
  t.rhok = -1;
  t.mu1 = 0;
  t.a1 = 1;
  const auto gen = generate_integers(ctx, chains, t, mus, nus);
  REQUIRE(gen.has_value());
  CHECK(gen->anchor == std::vector<std::int8_t>{1});
  // rho_0 joins via the chain marks (value 3), rho_k directly: 3 - 1 = 2.
  CHECK(gen->fixed == 2);
  CHECK(gen->free.empty());
  // An outside placement contradicts the mark on v_0.
  CandidateTuple bad = t;
  bad.a1 = 0;
  CHECK_FALSE(generate_integers(ctx, chains, bad, mus, nus).has_value());
}

// Section: condition audit ---------------------------------------------------

TEST_CASE("condition audit accepts a bare cycle and flags each break") {
  NodeContext ctx = bare_context({0, 2, 1}, {1, 1, 0});
  NodeWitness w;
  w.rho = {-1, -1, 0};
  w.mus = {-1, -1, -1};
  w.nus = {-1, -1, -1};
  w.assignment = {-1, -1, -1};
  CHECK(check_properties(ctx, w, -1, 0).ok);
  NodeWitness flat = w;
  flat.rho = {0, -1, 0};
  CHECK(check_properties(ctx, flat, -1, 0).condition == 1);
  NodeWitness sum = w;
  sum.rho = {-1, 1, 0};
  CHECK(check_properties(ctx, sum, -1, 0).condition == 2);
  CHECK(check_properties(ctx, w, 1, 0).condition == 7);
  NodeWitness shape = w;
  shape.assignment = {-1, 1, -1};
  CHECK(check_properties(ctx, shape, -1, 0).condition == 0);
}

TEST_CASE("condition audit checks component pairs and their placement") {
  NodeContext ctx = bare_context({0, 1, 2, 3}, {1, 0, 0, 1});
  put_child(ctx, 2, {{0, 0}});
  NodeWitness w;
  w.rho = {-1, 0, 0, -1};
  w.mus = {-1, -1, 0, -1};
  w.nus = {-1, -1, 0, -1};
  w.assignment = {-1, -1, 1, -1};
  CHECK(check_properties(ctx, w, -1, -1).ok);
  NodeWitness missing = w;
  missing.mus[2] = -1;
  CHECK(check_properties(ctx, missing, -1, -1).condition == 3);
  // A large angle against a flat cycle angle breaks the placement bound.
  NodeContext high = bare_context({0, 1, 2, 3}, {1, 0, 0, 1});
  put_child(high, 2, {{1, 0}});
  NodeWitness hw = w;
  hw.mus[2] = 1;
  CHECK(check_properties(high, hw, -1, -1).condition == 4);
}

TEST_CASE("condition audit checks shared vertices and flat bindings") {
  NodeContext ctx = bare_context({0, 1, 2, 3}, {1, 1, 1, 1});
  put_child(ctx, 2, {{-1, 1}});
  put_child(ctx, 3, {{1, -1}});
  NodeWitness w;
  w.rho = {-1, -1, 1, -1};
  w.mus = {-1, -1, -1, 1};
  w.nus = {-1, -1, 1, -1};
  w.assignment = {-1, -1, 1, 1};
  CHECK(check_properties(ctx, w, -1, -1).condition == 5);
  NodeContext bind = bare_context({0, 1, 2, 3}, {1, 0, 0, 1});
  put_child(bind, 2, {{-1, 0}});
  put_child(bind, 3, {{0, -1}});
  NodeWitness bw;
  bw.rho = {-1, 0, 0, -1};
  bw.mus = {-1, -1, -1, 0};
  bw.nus = {-1, -1, 0, -1};
  bw.assignment = {-1, -1, 1, 1};
  CHECK(check_properties(bind, bw, -1, -1).condition == 6);
}

// Section: per-node sets ------------------------------------------------------

TEST_CASE("tuple enumeration screens ends and the target pair") {
  NodeContext tri = bare_context({0, 2, 1}, {1, 1, 0});
  CHECK(enumerate_candidate_tuples(tri, -1, 0).size() == 1);
  CHECK(enumerate_candidate_tuples(tri, 0, 0).empty());
  CHECK(enumerate_candidate_tuples(tri, -1, -1).empty());
  // A component whose angle at the second-to-last vertex is large cannot
  // sit next to a non-switch vertex.
  NodeContext quad = bare_context({0, 1, 2, 3}, {1, 1, 0, 1});
  put_child(quad, 3, {{1, 0}});
  for (int mu = -1; mu <= 1; ++mu) {
    for (int nu = -1; nu <= 1; ++nu) {
      CHECK(enumerate_candidate_tuples(quad, mu, nu).empty());
    }
  }
}

TEST_CASE("candidate extension solves the bare triangle") {
  NodeContext tri = bare_context({0, 2, 1}, {1, 1, 0});
  const auto tuples = enumerate_candidate_tuples(tri, -1, 0);
  REQUIRE(tuples.size() == 1);
  const auto w = extend_candidate(tri, tuples[0], -1, 0);
  REQUIRE(w.has_value());
  CHECK(w->rho == std::vector<std::int8_t>{-1, -1, 0});
  // The mirrored target pair asks for an angle surplus no cycle has.
  const auto high = enumerate_candidate_tuples(tri, 1, 0);
  REQUIRE(high.size() == 1);
  CHECK_FALSE(extend_candidate(tri, high[0], 1, 0).has_value());
}

TEST_CASE("feasible sets of bare leaf cycles") {
  NodeContext tri = bare_context({0, 2, 1}, {1, 1, 0});
  CHECK(feasible_set(tri, 0, 1).pair_set() == PairSet{{-1, 0}});
  NodeContext quad = bare_context({10, 20, 21, 11}, {0, 1, 1, 0});
  const FeasibleSet fs = feasible_set(quad, 10, 11);
  CHECK(fs.end_low == 10);
  CHECK(fs.end_high == 11);
  CHECK(fs.pair_set() == PairSet{{0, 0}});
  REQUIRE(fs.find(0, 0) != nullptr);
  CHECK(fs.find(0, 0)->witness.rho == std::vector<std::int8_t>{0, -1, -1, 0});
  CHECK(fs.find(0, -1) == nullptr);
}

// Section: whole-tree drivers -------------------------------------------------

TEST_CASE("frozen answers for the smallest graphs") {
  {
    Dag d(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(engine_set(d, 0) == PairSet{{-1, 0}});
    const TestOutcome r = test_upward_report(d, 0);
    CHECK(r.upward);
    CHECK(r.root_pair == std::pair<int, int>{-1, 0});
    REQUIRE(r.embedding.has_value());
    CHECK(check_upward(d, r.embedding->emb, r.embedding->labels).ok());
  }
  {
    Dag d(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(engine_set(d, 0) == PairSet{{0, -1}});
  }
  {
    Dag d(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
    CHECK(engine_set(d, 0) == PairSet{{-1, 0}});
  }
  {
    Dag d(4, {{0, 1}, {1, 2}, {3, 2}, {0, 3}});
    CHECK(engine_set(d, 3) == PairSet{{-1, 0}});
  }
}

TEST_CASE("input validation of the drivers") {
  Dag diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(test_upward_report(diamond, 99), InvalidInput);
  CHECK_THROWS_AS(test_upward_report(diamond, 2), EdgeNotOnOuterFace);
  Dag cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(test_upward_report(cyc, 0), InvalidInput);
  CHECK_THROWS_AS(test_upward_any(cyc), InvalidInput);
  Dag path(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(test_upward_report(path, 0), NotBiconnected);
  Dag k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(test_upward_report(k4, 0), NotOuterplanar);
}

TEST_CASE("balanced gadgets pass and extract, unbalanced fail everywhere") {
  const GadgetDag g11 = build_gadget({1, 1});
  const TestOutcome r = test_upward_report(g11.dag, g11.prescribed_edge);
  CHECK(r.upward);
  CHECK(r.sweep.sets[r.tree.root_child].pair_set() == PairSet{{-1, -1}});
  REQUIRE(r.embedding.has_value());
  // The subset-sum mask prefers excluding early items, so item 1 is the one
  // whose chain lands inside.
  const ExtractedPartition p = extract_partition(g11, *r.embedding);
  CHECK(p.s1 == std::vector<int>{1});
  CHECK(p.s2 == std::vector<int>{0});

  const GadgetDag g235 = build_gadget({2, 3, 5});
  const auto emb = test_upward_with_edge(g235.dag, g235.prescribed_edge);
  REQUIRE(emb.has_value());
  const ExtractedPartition q = extract_partition(g235, *emb);
  long long s1 = 0, s2 = 0;
  for (const int i : q.s1) s1 += g235.values[i];
  for (const int i : q.s2) s2 += g235.values[i];
  CHECK(s1 == 5);
  CHECK(s2 == 5);

  const GadgetDag g1 = build_gadget({1});
  const TestOutcome bad = test_upward_report(g1.dag, g1.prescribed_edge);
  CHECK_FALSE(bad.upward);
  CHECK(bad.sweep.stopped_at == static_cast<int>(bad.tree.nodes.size()) - 1);
  CHECK(test_upward_any(g1.dag).edge == -1);
  const GadgetDag g12 = build_gadget({1, 2});
  CHECK(test_upward_any(g12.dag).edge == -1);
}

TEST_CASE("engine matches the oracle on every orientation of small shapes") {
  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> shapes = {
      {3, {{0, 1}, {1, 2}, {2, 0}}},
      {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
      {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}},
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}},
  };
  for (const auto& [n, und] : shapes) {
    for (const Dag& d : acyclic_orientations(n, und)) {
      check_against_oracle(d);
    }
  }
}

TEST_CASE("engine matches the oracle on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    check_against_oracle(random_outerplanar_dag(seed, 3, 6));
  }
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    check_against_oracle(random_outerplanar_dag(seed, 5, 4));
  }
}

TEST_CASE("repeated runs return identical witnesses") {
  const Dag d = random_outerplanar_dag(7, 4, 6);
  const OuterplaneEmbedding o = outerplane_embedding(d);
  int edge = -1;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (o.edge_on_outer_face(d, e) && test_upward_report(d, e).upward) {
      edge = e;
      break;
    }
  }
  REQUIRE(edge >= 0);
  const TestOutcome a = test_upward_report(d, edge);
  const TestOutcome b = test_upward_report(d, edge);
  CHECK(a.root_pair == b.root_pair);
  CHECK(a.sides == b.sides);
  REQUIRE(a.embedding.has_value());
  REQUIRE(b.embedding.has_value());
  CHECK(a.embedding->emb.rotation == b.embedding->emb.rotation);
  CHECK(a.embedding->labels.by_corner == b.embedding->labels.by_corner);
}
