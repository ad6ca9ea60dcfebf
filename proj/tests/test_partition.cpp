#include <numeric>

#include "doctest.h"
#include "updag/partition.hpp"
#include "updag/rng.hpp"

using namespace updag;

TEST_CASE("subset_sum basic answers and lex-min witnesses") {
  SUBCASE("prefers excluding early items") {
    SubsetSumResult r = subset_sum({1, 1, 2}, 2);
    CHECK(r.feasible);
    CHECK(r.chosen == std::vector<int>{2});
  }
  SUBCASE("takes early items only when forced") {
    SubsetSumResult r = subset_sum({1, 3, 2}, 3);
    CHECK(r.feasible);
    // {1,2} sums to 3 as well, but excluding index 0 is still possible,
    // and after that the 3 alone is forced.
    CHECK(r.chosen == std::vector<int>{1});
  }
  SUBCASE("zero target picks nothing") {
    SubsetSumResult r = subset_sum({5, 7}, 0);
    CHECK(r.feasible);
    CHECK(r.chosen.empty());
  }
  SUBCASE("full target picks everything") {
    SubsetSumResult r = subset_sum({5, 7}, 12);
    CHECK(r.feasible);
    CHECK(r.chosen == std::vector<int>{0, 1});
  }
  SUBCASE("infeasible target") {
    SubsetSumResult r = subset_sum({4, 6}, 5);
    CHECK_FALSE(r.feasible);
    CHECK(r.chosen.empty());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(subset_sum({3}, 4), TargetTooLarge);
    CHECK_THROWS_AS(subset_sum({0, 2}, 1), InvalidInput);
    CHECK_THROWS_AS(subset_sum({2}, -1), InvalidInput);
  }
}

TEST_CASE("solve_partition") {
  SUBCASE("worked example") {
    PartitionResult r = solve_partition({1, 1, 2});
    CHECK(r.feasible);
    CHECK(r.s1 == std::vector<int>{2});
    CHECK(r.s2 == std::vector<int>{0, 1});
  }
  SUBCASE("odd sum is infeasible") {
    PartitionResult r = solve_partition({1, 2});
    CHECK_FALSE(r.feasible);
    CHECK(r.s1.empty());
    CHECK(r.s2.empty());
  }
  SUBCASE("even sum without a split") {
    PartitionResult r = solve_partition({1, 1, 4});
    CHECK_FALSE(r.feasible);
  }
}

TEST_CASE("augment_and_partition") {
  SUBCASE("everything on one side") {
    AugmentResult r = augment_and_partition({1, 1}, 2, 0);
    CHECK(r.feasible);
    CHECK(r.in_indices == std::vector<int>{0, 1});
    CHECK(r.out_indices.empty());
  }
  SUBCASE("balanced targets reduce to plain partition") {
    AugmentResult r = augment_and_partition({2, 3, 1}, 3, 3);
    CHECK(r.feasible);
    CHECK(r.in_indices == std::vector<int>{1});
    CHECK(r.out_indices == std::vector<int>{0, 2});
  }
  SUBCASE("infeasible split") {
    AugmentResult r = augment_and_partition({2, 2}, 1, 3);
    CHECK_FALSE(r.feasible);
  }
  SUBCASE("target errors") {
    CHECK_THROWS_AS(augment_and_partition({2, 2}, 1, 2), InfeasibleTargets);
    CHECK_THROWS_AS(augment_and_partition({2, 2}, -1, 5), InfeasibleTargets);
  }
}

TEST_CASE("subset_sum agrees with exhaustive enumeration on random sets") {
  SplitMix64 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    const int k = 1 + static_cast<int>(rng.below(10));
    std::vector<long long> values(k);
    long long sum = 0;
    for (auto& v : values) {
      v = 1 + static_cast<long long>(rng.below(30));
      sum += v;
    }
    const long long target = static_cast<long long>(rng.below(sum + 1));
    // Exhaustive reachability and the minimal inclusion mask.
    bool reachable = false;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      long long s = 0;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) s += values[i];
      }
      if (s != target) continue;
      // Lex order on the index mask b_0 b_1 ... = numeric order of the
      // bit-reversed mask; smaller means "exclude earlier items".
      auto lex_key = [&](unsigned m) {
        unsigned key = 0;
        for (int i = 0; i < k; ++i) {
          if (m & (1u << i)) key |= 1u << (k - 1 - i);
        }
        return key;
      };
      if (!reachable || lex_key(mask) < lex_key(best_mask)) best_mask = mask;
      reachable = true;
    }
    SubsetSumResult r = subset_sum(values, target);
    REQUIRE(r.feasible == reachable);
    if (reachable) {
      std::vector<int> expect;
      for (int i = 0; i < k; ++i) {
        if (best_mask & (1u << i)) expect.push_back(i);
      }
      CHECK(r.chosen == expect);
    }
  }
}
