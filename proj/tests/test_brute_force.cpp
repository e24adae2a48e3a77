#include "chorediv/brute_force.hpp"

#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "chorediv/generate.hpp"
#include "chorediv/io.hpp"
#include "chorediv/solvers.hpp"

using namespace chorediv;

namespace {

Instance identical(const CostOracle& oracle, int n) {
  return Instance(std::vector<CostOracle>(static_cast<std::size_t>(n), oracle));
}

}  // namespace

TEST_CASE("enumeration counts and order") {
  int count = 0;
  for_each_allocation(2, 3, [&](const Allocation&) { ++count; });
  CHECK(count == 8);

  count = 0;
  for_each_allocation(3, 11, [&](const Allocation&) { ++count; });
  CHECK(count == 177147);

  count = 0;
  for_each_allocation(1, 5, [&](const Allocation& alloc) {
    ++count;
    CHECK(alloc.bundles[0] == ChoreSet::full(5));
  });
  CHECK(count == 1);

  std::vector<Allocation> order;
  for_each_allocation(2, 2,
                      [&](const Allocation& alloc) { order.push_back(alloc); });
  REQUIRE(order.size() == 4);
  CHECK(order[0].bundles == std::vector<ChoreSet>{ChoreSet::of({0, 1}), {}});
  CHECK(order[1].bundles ==
        std::vector<ChoreSet>{ChoreSet::of({0}), ChoreSet::of({1})});
  CHECK(order[2].bundles ==
        std::vector<ChoreSet>{ChoreSet::of({1}), ChoreSet::of({0})});
  CHECK(order[3].bundles == std::vector<ChoreSet>{{}, ChoreSet::of({0, 1})});

  std::set<std::uint64_t> distinct;
  for_each_allocation(3, 4, [&](const Allocation& alloc) {
    std::uint64_t key = 0;
    for (ChoreSet b : alloc.bundles) key = key * 17 + b.bits();
    distinct.insert(key);
  });
  CHECK(distinct.size() == 81);

  CHECK(allocation_count(3, 11).value() == 177147);
  CHECK_FALSE(allocation_count(3, 13).has_value());
  CHECK_THROWS_AS(for_each_allocation(3, 13, [](const Allocation&) {}),
                  TooLargeForExhaustiveCheck);
}

TEST_CASE("minimum social cost by enumeration") {
  CHECK(brute_min_social_cost(builtin_instance("incomparable-1")).cost == 5);
  CHECK(brute_min_social_cost(builtin_instance("no-po-efx(2)")).cost == 1);
  CHECK(brute_min_social_cost(identical(CostOracle(ThresholdCost{6}, 6), 3))
            .cost == 0);

  const auto result = brute_min_social_cost(builtin_instance("incomparable-1"));
  CHECK(social_cost(builtin_instance("incomparable-1"), result.argmin) ==
        result.cost);
}

TEST_CASE("minimax share by enumeration") {
  const Instance one = builtin_instance("incomparable-1");
  CHECK(brute_minimax_share(one, 0) == 4);
  CHECK(brute_minimax_share(one, 1) == 1);

  const Instance two = builtin_instance("incomparable-2");
  CHECK(brute_minimax_share(two, 0) == 4);
  CHECK(brute_minimax_share(two, 1) == 4);
  CHECK(brute_minimax_share(two, 2) == 2);

  const Instance solo = identical(CostOracle(ThresholdCost{2}, 6), 1);
  CHECK(brute_minimax_share(solo, 0) == 4);
}

TEST_CASE("pareto efficiency by enumeration") {
  const Instance pairs = builtin_instance("no-po-efx(1)");
  CHECK(brute_is_pareto_efficient(
      pairs, Allocation{{ChoreSet::of({0, 2}), ChoreSet::of({1})}}));
  CHECK_FALSE(brute_is_pareto_efficient(
      pairs, Allocation{{ChoreSet::of({0, 1}), ChoreSet::of({2})}}));

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = random_supermodular_instance(rng, 3, 6);
    REQUIRE(brute_is_pareto_efficient(inst, social_cost_min(inst)));
  }

  CHECK_THROWS_AS(
      brute_is_pareto_efficient(pairs, Allocation{{ChoreSet::of({0}), {}}}),
      InvalidAllocation);
}

TEST_CASE("lorenz dominating allocation by enumeration") {
  const auto dominating =
      brute_lorenz_dominating(builtin_instance("incomparable-1"));
  REQUIRE(dominating.has_value());
  CHECK(sorted_cost_profile(builtin_instance("incomparable-1"), *dominating)
            .values == std::vector<int>{2, 2, 1});

  const Instance zero = identical(CostOracle(ThresholdCost{5}, 5), 2);
  const auto zeros = brute_lorenz_dominating(zero);
  REQUIRE(zeros.has_value());
  CHECK(sorted_cost_profile(zero, *zeros).values == std::vector<int>{0, 0});

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = random_supermodular_instance(rng, 3, 6);
    const auto oracle = brute_lorenz_dominating(inst);
    REQUIRE(oracle.has_value());
    REQUIRE(sorted_cost_profile(inst, *oracle) ==
            sorted_cost_profile(inst, lorenz_dominating(inst)));
  }
}

TEST_CASE("leximax- by enumeration") {
  const Instance cards = identical(CostOracle(CardinalityCost{}, 4), 2);
  const Allocation best = brute_leximax_minus(cards);
  CHECK(sorted_cost_profile(cards, best).values == std::vector<int>{2, 2});

  const Instance demo = builtin_instance("exact3cover-demo");
  const Allocation covered = brute_leximax_minus(demo);
  CHECK(is_efx(demo, covered).verdict);

  const Instance solo = identical(CostOracle(CardinalityCost{}, 5), 1);
  CHECK(brute_leximax_minus(solo).bundles[0] == ChoreSet::full(5));

  CHECK_THROWS_AS(brute_leximax_minus(builtin_instance("incomparable-1")),
                  NotIdenticalCosts);
}

TEST_CASE("decrement chores") {
  const CostOracle threshold(ThresholdCost{3}, 8);
  CHECK(find_decrement_chore(threshold, ChoreSet::of({1, 2, 4, 5, 7})) == 1);

  PartitionComplementCost pair;
  pair.blocks.push_back({ChoreSet::of({0, 1}), 1});
  const CostOracle pair_oracle(pair, 2);
  CHECK(find_decrement_chore(pair_oracle, ChoreSet::of({0, 1})) == 0);

  CHECK_THROWS_AS(find_decrement_chore(threshold, ChoreSet::of({0})),
                  InvalidParameter);

  // A coverage cost where no single removal decrements: brute-force search
  // finds such a bundle, certifying non-supermodularity.
  const CostOracle coverage(
      CoverageMaxCost{{ChoreSet::of({0, 1}), ChoreSet::of({1, 2})}}, 3);
  bool found = false;
  for (std::uint64_t mask = 1; mask < 8 && !found; ++mask) {
    const ChoreSet s = ChoreSet::from_bits(mask);
    if (coverage.eval(s) == 0) continue;
    try {
      find_decrement_chore(coverage, s);
    } catch (const NoDecrementFound&) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("decrement chores always exist for validated supermodular costs") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 9);
    const int m = m_dist(rng);
    const CostOracle oracle = random_supermodular_oracle(rng, m);
    REQUIRE(validate_supermodular(oracle));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const ChoreSet s = ChoreSet::from_bits(mask);
      if (oracle.eval(s) > 0) {
        REQUIRE_NOTHROW(find_decrement_chore(oracle, s));
      }
    }
  }
}

TEST_CASE("rebalancing a cost-minimizing allocation under identical costs") {
  const Instance cards = identical(CostOracle(CardinalityCost{}, 7), 3);
  const Allocation skewed{{ChoreSet::of({0, 1, 2, 3, 4}), ChoreSet::of({5}),
                           ChoreSet::of({6})}};
  const Allocation balanced = balance_scm_identical(cards, skewed);
  CHECK(sorted_cost_profile(cards, balanced).values ==
        std::vector<int>{3, 2, 2});
  CHECK(social_cost(cards, balanced) == 7);

  // Already balanced input comes back unchanged.
  const Allocation even{{ChoreSet::of({0, 1, 2}), ChoreSet::of({3, 4}),
                         ChoreSet::of({5, 6})}};
  CHECK(balance_scm_identical(cards, even) == even);

  const Instance thresh = identical(CostOracle(ThresholdCost{2}, 6), 2);
  const Allocation lopsided{{ChoreSet::of({0, 1, 2, 3}), ChoreSet::of({4, 5})}};
  REQUIRE(social_cost(thresh, lopsided) == 2);
  const Allocation fixed = balance_scm_identical(thresh, lopsided);
  CHECK(cost_profile(thresh, fixed) == std::vector<int>{1, 1});

  const Allocation not_scm{{ChoreSet::full(6), ChoreSet()}};
  CHECK_THROWS_AS(balance_scm_identical(thresh, not_scm), InputNotSCM);
}

TEST_CASE("rebalancing reaches spread one on random inputs") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> n_dist(2, 4);
    std::uniform_int_distribution<int> m_dist(1, 8);
    const Instance inst =
        random_identical_supermodular_instance(rng, n_dist(rng), m_dist(rng));
    const Allocation scm = social_cost_min(inst);
    const Allocation balanced = balance_scm_identical(inst, scm);
    const auto profile = sorted_cost_profile(inst, balanced).values;
    REQUIRE(profile.front() - profile.back() <= 1);
    REQUIRE(social_cost(inst, balanced) == social_cost(inst, scm));
    REQUIRE(balanced.complete(inst.chore_count()));
  }
}

TEST_CASE("share sums cover the minimum social cost") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> n_dist(2, 3);
    std::uniform_int_distribution<int> m_dist(1, 8);
    const Instance inst =
        random_supermodular_instance(rng, n_dist(rng), m_dist(rng));
    int share_sum = 0;
    for (int i = 0; i < inst.agent_count(); ++i) {
      share_sum += brute_minimax_share(inst, i);
    }
    REQUIRE(share_sum >= brute_min_social_cost(inst).cost);
  }
}
