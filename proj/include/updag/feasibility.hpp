#pragma once
// Upward-planarity tester for biconnected outerplanar DAGs with a prescribed
// outer edge. The extended dual tree is rooted at the edge and swept bottom
// up: every face node computes the set of feasible inside-angle pairs at its
// shared edge from the sets of its children. A nonempty set at the root
// child means the graph has an upward plane embedding with the edge on the
// outer face; a top-down pass over the stored witnesses then rebuilds a
// concrete embedding and corner labeling.
//
// Inside a rooted cycle v_0 .. v_k with parent edge (v_0, v_k), position i
// carries the composed cycle angle rho_i at v_i and, when a component hangs
// on cycle edge i, the composed inside angles mu_i at v_{i-1} and nu_i at
// v_i of that component. Angles of absent components are the sentinel -1.
// An assignment of angles and inside/outside placements is valid exactly
// when it satisfies seven conditions:
//   C1  rho_i is -1 or 1 at a switch vertex of the cycle and 0 otherwise
//   C2  the rho_i sum to -2
//   C3  (mu_i, nu_i) is a feasible pair of the component at position i
//   C4  an inside component obeys mu_i <= rho_{i-1} and nu_i <= rho_i, an
//       outside one obeys mu_i <= -rho_{i-1} and nu_i <= -rho_i
//   C5  nu_i + mu_{i+1} <= 0 at every shared vertex
//   C6  nu_i = mu_{i+1} = 0 with both components inside forces rho_i = 1,
//       with both outside rho_i = -1
//   C7  the cycle's own pair is rho_0 and rho_k, each raised by mu_1 + 1
//       resp. nu_k + 1 when the end component lies outside
// Per target pair, the end values (rho_0, rho_k, mu_1, side of the first
// component, mu_k, nu_k, side of the last component) are fixed by a small
// enumeration, the remaining mu_i / nu_i follow greedily, flat angle pairs
// bind runs of components into chains whose placement fixes a block of
// switch angles, and the leftover balance is a subset-sum instance.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "updag/dag.hpp"
#include "updag/embedding.hpp"
#include "updag/upward.hpp"

namespace updag {

// Section: per-node data ------------------------------------------------

// Angle decisions of one node, enough to relabel its cycle later. Entry 0 of
// mus, nus and assignment is unused padding so indices match positions.
struct NodeWitness {
  std::vector<std::int8_t> rho;         // cycle angle per position 0..k
  std::vector<std::int8_t> mus;         // mu_i, -1 when position i is empty
  std::vector<std::int8_t> nus;         // nu_i, -1 when position i is empty
  std::vector<std::int8_t> assignment;  // 1 inside, 0 outside, -1 empty
};

struct FeasiblePair {
  int mu = 0;
  int nu = 0;
  NodeWitness witness;
};

// All feasible inside-angle pairs of a subgraph at its shared edge, mu taken
// at end_low and nu at end_high. Pairs ascend lexicographically and carry
// the witness realizing them.
struct FeasibleSet {
  int end_low = -1;
  int end_high = -1;
  std::vector<FeasiblePair> pairs;

  bool contains(int mu, int nu) const { return find(mu, nu) != nullptr; }
  const FeasiblePair* find(int mu, int nu) const;
  std::set<std::pair<int, int>> pair_set() const;
};

// Feasible pairs of the component at one cycle position, reoriented into the
// cycle frame: has[mu + 1][nu + 1] with mu at v_{i-1} and nu at v_i.
struct ChildSet {
  bool defined = false;
  int node = -1;  // rooted dual node id of the component
  bool has[3][3] = {};

  bool has_mu(int mu) const {
    return has[mu + 1][0] || has[mu + 1][1] || has[mu + 1][2];
  }
};

// Everything the per-node decision reads: cycle vertices, their switch flags
// inside this cycle, and the reoriented child sets per position.
struct NodeContext {
  std::vector<int> cycle;          // v_0 .. v_k
  std::vector<std::uint8_t> swch;  // per position, switch in this cycle
  std::vector<ChildSet> children;  // per position, entry 0 unused

  int k() const { return static_cast<int>(cycle.size()) - 1; }
};

// Builds the context of one rooted node from the already computed child
// sets (indexed by rooted node id).
NodeContext make_context(const Dag& d, const RootedDualTree& rt, int node,
                         const std::vector<FeasibleSet>& sets);

// Section: condition audit ----------------------------------------------

// End values fixed up front per attempt; -1 sentinels when the first or
// last position is empty. Sides use 1 for inside, 0 for outside.
struct CandidateTuple {
  int rho0 = 0;
  int rhok = 0;
  int mu1 = -1;
  int a1 = -1;
  int muk = -1;
  int nuk = -1;
  int ak = -1;
};

// Audit verdict; condition names the first failed one (0 for shape or
// sentinel bookkeeping errors).
struct PropertyCheck {
  bool ok = true;
  int condition = 0;
  std::string detail;
};

// Audits conditions C1-C7 of a complete assignment against the target pair.
PropertyCheck check_properties(const NodeContext& ctx, const NodeWitness& w,
                               int mu, int nu);

// Section: per-node decision steps ----------------------------------------

// All candidate tuples for target pair (mu, nu), screened by C1, C3, C4 and
// C7, in odometer order over (rho0, rhok, mu1, a1, muk, nuk, ak) with values
// ascending and inside before outside. The screen also drops tuples whose
// mu_k is 1 while v_{k-1} is a non-switch vertex: C4 then has no valid
// rho_{k-1} on either side, which no later step would notice.
std::vector<CandidateTuple> enumerate_candidate_tuples(const NodeContext& ctx,
                                                       int mu, int nu);

// Smallest feasible nu_i given mu_i; -1 when position i is empty, nullopt
// when no pair of the component starts with mu_i. Picking the smallest value
// loses no generality: every condition bounds nu_i from above.
std::optional<int> decide_nu(const NodeContext& ctx, int i, int mu_i);

// mu_{i+1} given nu_i, for 1 <= i <= k-2; -1 when position i+1 is empty,
// nullopt when no choice can work. nu_i <= 0 forces the unique small entry
// of the component set; nu_i = -1 at a switch vertex prefers an entry that
// keeps both placements open and breaks the one genuine tie between the
// pairs (1,0) and (-1,1) by looking at position i+2.
std::optional<int> decide_mu(const NodeContext& ctx, int i, int nu_i);

// Maximal runs of components at consecutive positions glued by flat angle
// pairs (nu_i = mu_{i+1} = 0); every occupied position lands in exactly one
// chain. rel_side[j] is the side of component first+j relative to the first
// component, value the signed angle total with the first component inside,
// and marked/mark_sign the cycle positions whose angle the chain fixes.
struct Chain {
  int first = 0;
  int last = 0;
  long long value = 0;
  std::vector<std::int8_t> rel_side;
  std::vector<int> marked;
  std::vector<std::int8_t> mark_sign;
};

std::vector<Chain> bind_chains(const NodeContext& ctx,
                               const std::vector<std::int8_t>& mus,
                               const std::vector<std::int8_t>& nus);

// Balance items handed to the subset-sum stage. free holds the magnitudes
// still open: one item per unforced chain with nonzero value and one unit
// per unmarked interior switch vertex. fixed sums every angle already
// forced by the tuple; anchor[c] is the forced side of chain c (1 first
// component inside, -1 outside, 0 free).
struct IntegerGeneration {
  struct Item {
    long long value = 0;
    int chain = -1;   // chain index for chain items
    int vertex = -1;  // cycle position for unit items
  };
  std::vector<Item> free;
  long long fixed = 0;
  std::vector<std::int8_t> anchor;
  std::vector<std::uint8_t> marked_at;  // per position, 1 when chain-marked

  long long free_total() const;
};

// nullopt when the tuple's end sides contradict a chain's marks or each
// other (both end components in one chain with incompatible sides).
std::optional<IntegerGeneration> generate_integers(
    const NodeContext& ctx, const std::vector<Chain>& chains,
    const CandidateTuple& t, const std::vector<std::int8_t>& mus,
    const std::vector<std::int8_t>& nus);

// Runs the angle ladder, chain binding, integer generation and balancing
// subset-sum for one tuple. Returns the witness when the tuple extends to a
// full assignment; every returned witness passes check_properties
// (InternalError otherwise).
std::optional<NodeWitness> extend_candidate(const NodeContext& ctx,
                                            const CandidateTuple& t, int mu,
                                            int nu);

// Feasible pairs of one cycle given its reoriented child sets; the ends name
// the shared-edge endpoints. Deterministic: pairs are tried in lexicographic
// order and the first extensible tuple per pair wins.
FeasibleSet feasible_set(const NodeContext& ctx, int end_low, int end_high);

// Section: whole-tree drivers ---------------------------------------------

// Bottom-up sweep over the rooted dual tree. An empty set stops the sweep:
// by C3 every set above it is empty as well.
struct SweepResult {
  std::vector<FeasibleSet> sets;  // per rooted node id
  bool feasible = false;          // the root child's set is nonempty
  int stopped_at = -1;            // node id of the first empty set
};

SweepResult sweep_feasible_sets(const Dag& d, const RootedDualTree& rt);

// Full run for one prescribed edge (EdgeNotOnOuterFace when e does not lie
// on the outer face, InvalidInput when d has a directed cycle). When
// feasible, sides, the root child's chosen pair (smallest of its set) and
// the rebuilt labeled embedding are filled in; the embedding has passed
// check_upward and its inside angles at the root edge ends equal root_pair.
struct TestOutcome {
  bool upward = false;
  int edge = -1;
  RootedDualTree tree;
  SweepResult sweep;
  std::vector<Side> sides;            // per rooted node id, when upward
  std::pair<int, int> root_pair{0, 0};
  std::optional<UpwardEmbedding> embedding;
};

TestOutcome test_upward_report(const Dag& d, int e);

// Embedding-only wrapper around test_upward_report.
std::optional<UpwardEmbedding> test_upward_with_edge(const Dag& d, int e);

// Tries every outer edge in ascending id order and keeps the first hit.
// edge stays -1 when no outer edge admits an upward embedding; for the
// graphs handled here that means no upward plane embedding exists at all.
struct AnyEdgeOutcome {
  int edge = -1;
  std::optional<UpwardEmbedding> embedding;
};

AnyEdgeOutcome test_upward_any(const Dag& d);

}  // namespace updag
