#include "updag/partition.hpp"

#include <algorithm>
#include <numeric>

namespace updag {

namespace {

// One reachability layer: bit s says the suffix can realize sum s.
class BitRow {
 public:
  explicit BitRow(long long bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(long long i) { words_[i >> 6] |= 1ull << (i & 63); }
  bool get(long long i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }

  // this = other | (other << shift), truncated to the row width.
  void assign_shifted_or(const BitRow& other, long long shift) {
    const std::size_t nw = words_.size();
    const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
    const int bit_shift = static_cast<int>(shift & 63);
    for (std::size_t i = nw; i-- > 0;) {
      std::uint64_t shifted = 0;
      if (i >= word_shift) {
        shifted = other.words_[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i > word_shift) {
          shifted |= other.words_[i - word_shift - 1] >> (64 - bit_shift);
        }
      }
      words_[i] = other.words_[i] | shifted;
    }
    // Mask bits beyond the target so overshoot never reads as reachable.
    const int tail = static_cast<int>(bits_ & 63);
    if (tail != 0) words_.back() &= (1ull << tail) - 1;
  }

 private:
  long long bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

SubsetSumResult subset_sum(const std::vector<long long>& values, long long target) {
  long long sum = 0;
  for (long long v : values) {
    if (v <= 0) throw InvalidInput("subset-sum values must be positive");
    sum += v;
  }
  if (target < 0) throw InvalidInput("subset-sum target must be nonnegative");
  if (target > sum) {
    throw TargetTooLarge("target " + std::to_string(target) +
                         " exceeds the value sum " + std::to_string(sum));
  }
  const int k = static_cast<int>(values.size());
  // Memory guard: (k+1) rows of (target+1) bits.
  const long long bits_needed = static_cast<long long>(k + 1) * (target + 1);
  if (bits_needed > (12ll << 30)) {
    throw InstanceTooLarge("subset-sum table of " + std::to_string(bits_needed) +
                           " bits exceeds the memory budget");
  }

  // suffix[i] holds the sums realizable with items i..k-1.
  std::vector<BitRow> suffix;
  suffix.reserve(k + 1);
  for (int i = 0; i <= k; ++i) suffix.emplace_back(target + 1);
  suffix[k].set(0);
  for (int i = k - 1; i >= 0; --i) {
    suffix[i].assign_shifted_or(suffix[i + 1], std::min(values[i], target + 1));
  }

  SubsetSumResult res;
  if (!suffix[0].get(target)) return res;
  res.feasible = true;
  // Forward scan preferring exclusion yields the lex-min inclusion mask.
  long long rem = target;
  for (int i = 0; i < k; ++i) {
    if (suffix[i + 1].get(rem)) continue;
    res.chosen.push_back(i);
    rem -= values[i];
    if (rem < 0 || !suffix[i + 1].get(rem)) {
      throw InternalError("subset-sum reconstruction left an unreachable state");
    }
  }
  if (rem != 0) throw InternalError("subset-sum reconstruction missed the target");
  return res;
}

PartitionResult solve_partition(const std::vector<long long>& values) {
  long long sum = 0;
  for (long long v : values) {
    if (v <= 0) throw InvalidInput("partition values must be positive");
    sum += v;
  }
  PartitionResult res;
  if (sum % 2 != 0) return res;
  SubsetSumResult half = subset_sum(values, sum / 2);
  if (!half.feasible) return res;
  res.feasible = true;
  res.s1 = std::move(half.chosen);
  std::vector<char> in_s1(values.size(), 0);
  for (int i : res.s1) in_s1[i] = 1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (!in_s1[i]) res.s2.push_back(i);
  }
  return res;
}

AugmentResult augment_and_partition(const std::vector<long long>& values,
                                    long long l_in, long long l_out) {
  long long sum = 0;
  for (long long v : values) {
    if (v <= 0) throw InvalidInput("values must be positive");
    sum += v;
  }
  if (l_in < 0 || l_out < 0) {
    throw InfeasibleTargets("side targets must be nonnegative, got in=" +
                            std::to_string(l_in) + " out=" + std::to_string(l_out));
  }
  if (l_in + l_out != sum) {
    throw InfeasibleTargets("side targets " + std::to_string(l_in) + "+" +
                            std::to_string(l_out) + " do not add up to the value sum " +
                            std::to_string(sum));
  }

  AugmentResult res;
  const long long star = l_in > l_out ? l_in - l_out : l_out - l_in;
  const int k = static_cast<int>(values.size());

  std::vector<int>* star_side = nullptr;   // side that absorbs the balancer
  std::vector<int>* other_side = nullptr;
  if (star == 0) {
    PartitionResult part = solve_partition(values);
    res.feasible = part.feasible;
    if (res.feasible) {
      res.in_indices = std::move(part.s1);
      res.out_indices = std::move(part.s2);
    }
  } else {
    std::vector<long long> augmented = values;
    augmented.push_back(star);
    // The augmented total 2*max(l_in, l_out) is even by construction.
    PartitionResult part = solve_partition(augmented);
    res.feasible = part.feasible;
    if (res.feasible) {
      // The half holding the balancer, minus it, is the smaller target side.
      const bool star_in_s1 = !part.s1.empty() && part.s1.back() == k;
      std::vector<int>& with_star = star_in_s1 ? part.s1 : part.s2;
      std::vector<int>& without_star = star_in_s1 ? part.s2 : part.s1;
      if (with_star.empty() || with_star.back() != k) {
        throw InternalError("balancing item missing from both partition sides");
      }
      with_star.pop_back();
      star_side = l_in < l_out ? &res.in_indices : &res.out_indices;
      other_side = l_in < l_out ? &res.out_indices : &res.in_indices;
      *star_side = std::move(with_star);
      *other_side = std::move(without_star);
    }
  }

  // Cross-check the two solver paths against each other.
  SubsetSumResult direct = subset_sum(values, l_in);
  if (direct.feasible != res.feasible) {
    throw InternalError("augmented partition and direct subset-sum disagree");
  }
  if (res.feasible) {
    long long got_in = 0;
    for (int i : res.in_indices) got_in += values[i];
    if (got_in != l_in) {
      throw InternalError("augmented partition missed the in-side target");
    }
  }
  return res;
}

}  // namespace updag
