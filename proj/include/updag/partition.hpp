#pragma once
// Pseudo-polynomial subset-sum and partition solvers with deterministic
// witnesses. Witnesses are always the lexicographically smallest inclusion
// mask over item indices: an item is excluded whenever the remaining suffix
// can still reach the residual target.

#include <cstdint>
#include <vector>

#include "updag/errors.hpp"

namespace updag {

struct SubsetSumResult {
  bool feasible = false;
  std::vector<int> chosen;  // ascending item indices, empty when infeasible
};

// Decides whether a subset of values sums to target and returns the lex-min
// witness. values must be positive; 0 <= target <= sum(values) is required
// (TargetTooLarge above the sum). Runs in O(k * target / 64) time and
// O(k * target) bits of memory, guarded by InstanceTooLarge.
SubsetSumResult subset_sum(const std::vector<long long>& values, long long target);

struct PartitionResult {
  bool feasible = false;
  std::vector<int> s1, s2;  // ascending index sets, s1 the subset-sum witness
};

// Splits values into two halves of equal sum when possible. An odd total is
// infeasible, never an error.
PartitionResult solve_partition(const std::vector<long long>& values);

struct AugmentResult {
  bool feasible = false;
  std::vector<int> in_indices, out_indices;
};

// Splits values into an "in" side summing to l_in and an "out" side summing
// to l_out by appending the balancing item |l_in - l_out| and solving an
// even partition. Requires l_in, l_out >= 0 and l_in + l_out == sum(values)
// (InfeasibleTargets otherwise). The result is cross-checked against a
// direct subset-sum run for l_in.
AugmentResult augment_and_partition(const std::vector<long long>& values,
                                    long long l_in, long long l_out);

}  // namespace updag
