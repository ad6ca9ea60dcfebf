#pragma once
// Exhaustive reference answers for small instances: enumerate every plane
// embedding with a given outer edge, search every angle labeling, and
// generate random biconnected outerplanar DAGs. Everything here is
// deliberately independent of the feasibility engine; only the graph core
// and the upward check are shared.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>

#include "updag/dag.hpp"
#include "updag/embedding.hpp"
#include "updag/upward.hpp"

namespace updag {

// Work cap shared across one oracle call: one unit per assembled embedding
// plus one per labeling search node. Exceeding it throws InstanceTooLarge.
inline constexpr long long default_oracle_budget = 1ll << 22;

using AnglePair = std::pair<int, int>;
using PairSet = std::set<AnglePair>;

// Calls fn for every plane embedding of d whose outer face has edge e on its
// boundary: one per side assignment of the non-root dual tree nodes. Sides
// are indexed by rooted node id, driven by the bits of a mask that ascends
// from all-in; a set bit means out.
void enumerate_plane_embeddings(
    const Dag& d, int e,
    const std::function<void(const PlaneEmbedding&, const std::vector<Side>&)>& fn,
    long long budget = default_oracle_budget);

// All pairs (inside angle at the smaller endpoint of e, inside angle at the
// larger) over every upward labeling of every embedding with e on the outer
// face boundary.
PairSet brute_feasible_set(const Dag& d, int e,
                           long long budget = default_oracle_budget);

// First upward labeling found with e on the outer face boundary, if any.
std::optional<UpwardEmbedding> brute_find_labeling(
    const Dag& d, int e, long long budget = default_oracle_budget);

// True when some outer-cycle edge admits an upward labeling; edges ascend
// and the budget spans the whole call.
bool brute_test_upward(const Dag& d, long long budget = default_oracle_budget);

// Deterministic random biconnected outerplanar DAG: an outer polygon grown
// by ear paths across random boundary edges, acyclically oriented by a
// random vertex order. Requires max_faces >= 1 and max_face_len >= 3.
Dag random_outerplanar_dag(std::uint64_t seed, int max_faces, int max_face_len);

}  // namespace updag
