#pragma once
// Exception taxonomy shared by every module. The CLI maps any Error to exit
// code 2; InternalError signals a broken invariant inside the library itself
// and is never an input problem.

#include <stdexcept>
#include <string>

namespace updag {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed files, bad vertex ids, violated operation preconditions.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("invalid input: " + msg) {}
};

struct NotBiconnected : Error {
  explicit NotBiconnected(const std::string& msg) : Error("not biconnected: " + msg) {}
};

struct NotOuterplanar : Error {
  explicit NotOuterplanar(const std::string& msg) : Error("not outerplanar: " + msg) {}
};

struct EdgeNotOnOuterFace : Error {
  explicit EdgeNotOnOuterFace(const std::string& msg) : Error("edge not on outer face: " + msg) {}
};

// An angle labeling does not cover exactly the vertex-face incidences of the
// embedding it is checked against.
struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& msg) : Error("labeling domain mismatch: " + msg) {}
};

struct NotOnOuterFace : Error {
  explicit NotOnOuterFace(const std::string& msg) : Error("vertex not on outer face: " + msg) {}
};

struct UnbalancedPartition : Error {
  explicit UnbalancedPartition(const std::string& msg) : Error("unbalanced partition: " + msg) {}
};

struct InvalidEmbedding : Error {
  explicit InvalidEmbedding(const std::string& msg) : Error("invalid embedding: " + msg) {}
};

struct TargetTooLarge : Error {
  explicit TargetTooLarge(const std::string& msg) : Error("target too large: " + msg) {}
};

struct InfeasibleTargets : Error {
  explicit InfeasibleTargets(const std::string& msg) : Error("infeasible targets: " + msg) {}
};

struct InstanceTooLarge : Error {
  explicit InstanceTooLarge(const std::string& msg) : Error("instance too large: " + msg) {}
};

// A structural invariant of the algorithm failed. Raising instead of
// silently recovering keeps wrong answers from escaping.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace updag
