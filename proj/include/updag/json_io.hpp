#pragma once
// JSON and sidecar serialization for the CLI. All JSON emitted here uses
// ordered maps and a fixed dump format, so identical inputs produce byte
// identical reports.
//
// Schemas:
//   embedding  {rotations: [[edge ids] per vertex], outer_face, labels}
//              with labels an array of [vertex, face, label] triples
//   report     {answer, edge, endpoints, feasible_sets, witness}
//              witness = {sides, rho, labels, rotations, outer_face} or null
//   sidecar    {values, u, q_paths, p_ranges, prescribed_edge}
//              with q_paths an array of [position, v_j, w_j] triples

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "updag/dag.hpp"
#include "updag/feasibility.hpp"
#include "updag/reduction.hpp"
#include "updag/upward.hpp"

namespace updag {

using Json = nlohmann::ordered_json;

// dump(2) with a trailing newline, the one serialization used everywhere.
std::string dump_json(const Json& j);

Json embedding_json(const Dag& d, const UpwardEmbedding& ue);

// Rebuilds the embedding from rotations, re-traces faces and fills the
// corner labels from the [vertex, face, label] triples. Throws InvalidInput
// on malformed data (rotations that are not permutations of the incident
// edges, unknown faces, missing or duplicate labels).
UpwardEmbedding embedding_from_json(const Dag& d, const Json& j);

// Reads either a bare embedding object or a full test report, in which case
// the witness member is used. Throws InvalidInput when the file has no
// usable embedding.
UpwardEmbedding embedding_from_json_file(const Dag& d, const std::string& path);

// Full report for one tester run. The witness member is null when the
// instance is not upward planar.
Json test_report_json(const Dag& d, const TestOutcome& r);

// The gadget sidecar is written by hand in one streaming pass; at the
// million-vertex scale the index arrays are too large for a DOM round trip.
void write_sidecar(const GadgetDag& g, std::ostream& out);
void write_sidecar_file(const GadgetDag& g, const std::string& path);

// Rebuilds the gadget from the sidecar's values and verifies every stored
// index array against the rebuilt one. Throws InvalidInput when the sidecar
// is malformed or does not match its own values.
GadgetDag gadget_from_sidecar_file(const std::string& path);

}  // namespace updag
