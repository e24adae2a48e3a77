#include "chorediv/cost.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "chorediv/generate.hpp"

using namespace chorediv;

namespace {

CostOracle pair_with_cap_one(int m = 2) {
  PartitionComplementCost spec;
  spec.blocks.push_back({ChoreSet::of({0, 1}), 1});
  for (int t = 2; t < m; ++t) {
    spec.blocks.push_back({ChoreSet::singleton(t), 0});
  }
  return CostOracle(spec, m);
}

}  // namespace

TEST_CASE("eval of the structural families") {
  const CostOracle threshold(ThresholdCost{3}, 8);
  CHECK(threshold.eval(ChoreSet::of({0, 1, 2, 3, 4})) == 2);
  CHECK(threshold.eval(ChoreSet::of({0, 1})) == 0);
  CHECK(threshold.eval(ChoreSet()) == 0);

  const CostOracle cardinality(CardinalityCost{}, 6);
  CHECK(cardinality.eval(ChoreSet()) == 0);
  CHECK(cardinality.eval(ChoreSet::of({1, 5})) == 2);

  const CostOracle pair = pair_with_cap_one();
  CHECK(pair.eval(ChoreSet::of({0, 1})) == 1);
  CHECK(pair.eval(ChoreSet::of({0})) == 0);
  CHECK(pair.eval(ChoreSet()) == 0);

  const CostOracle coverage(
      CoverageMaxCost{{ChoreSet::of({0, 1, 2}), ChoreSet::of({3, 4, 5})}}, 6);
  CHECK(coverage.eval(ChoreSet()) == 0);
  CHECK(coverage.eval(ChoreSet::of({0, 1, 3})) == 2);
  CHECK(coverage.eval(ChoreSet::full(6)) == 3);
  CHECK(CostOracle(CoverageMaxCost{}, 4).eval(ChoreSet::full(4)) == 0);
}

TEST_CASE("eval rejects out-of-range chores") {
  const CostOracle oracle(CardinalityCost{}, 4);
  CHECK_THROWS_AS(oracle.eval(ChoreSet::of({4})), InvalidChore);
  CHECK_THROWS_AS(oracle.marginal(ChoreSet(), 4), InvalidChore);
}

TEST_CASE("marginals") {
  const CostOracle cardinality(CardinalityCost{}, 5);
  CHECK(cardinality.marginal(ChoreSet::of({1, 2}), 4) == 1);

  const CostOracle pair = pair_with_cap_one();
  CHECK(pair.marginal(ChoreSet(), 0) == 0);
  CHECK(pair.marginal(ChoreSet::of({0}), 1) == 1);

  CHECK_THROWS_AS(pair.marginal(ChoreSet::of({0}), 0), ChoreAlreadyPresent);
}

TEST_CASE("tabulated costs agree with their source family everywhere") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 6;
    const CostOracle base(random_partition_complement(rng, m), m);
    TableCost table;
    table.values.resize(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < table.values.size(); ++mask) {
      table.values[mask] = base.eval(ChoreSet::from_bits(mask));
    }
    const CostOracle tabulated(table, m);
    for (std::uint64_t mask = 0; mask < table.values.size(); ++mask) {
      const ChoreSet s = ChoreSet::from_bits(mask);
      REQUIRE(tabulated.eval(s) == base.eval(s));
      for (int a = 0; a < m; ++a) {
        if (!s.contains(a)) {
          REQUIRE(tabulated.marginal(s, a) == base.marginal(s, a));
        }
      }
    }
  }
}

TEST_CASE("binary-marginal validation") {
  CHECK(validate_binary_marginals(CostOracle(CardinalityCost{}, 4)));
  CHECK_FALSE(
      validate_binary_marginals(CostOracle(TableCost{{0, 2, 0, 2}}, 2)));
  CHECK(validate_binary_marginals(CostOracle(
      CoverageMaxCost{{ChoreSet::of({0, 1}), ChoreSet::of({1, 2, 3})}}, 5)));

  CHECK_THROWS_AS(
      validate_binary_marginals(CostOracle(CardinalityCost{}, 18)),
      TooLargeForExhaustiveCheck);
}

TEST_CASE("supermodularity validation") {
  CHECK(validate_supermodular(CostOracle(ThresholdCost{3}, 6)));
  CHECK(validate_supermodular(CostOracle(CardinalityCost{}, 6)));
  CHECK_FALSE(validate_supermodular(CostOracle(
      CoverageMaxCost{{ChoreSet::of({0, 1}), ChoreSet::of({1, 2})}}, 3)));
}

TEST_CASE("spec invariants are enforced at construction") {
  PartitionComplementCost overlapping;
  overlapping.blocks.push_back({ChoreSet::of({0, 1}), 1});
  overlapping.blocks.push_back({ChoreSet::of({1, 2}), 0});
  CHECK_THROWS_AS(CostOracle(overlapping, 3), ValidationError);

  PartitionComplementCost incomplete;
  incomplete.blocks.push_back({ChoreSet::of({0}), 0});
  CHECK_THROWS_AS(CostOracle(incomplete, 2), ValidationError);

  PartitionComplementCost oversized_cap;
  oversized_cap.blocks.push_back({ChoreSet::of({0, 1}), 3});
  CHECK_THROWS_AS(CostOracle(oversized_cap, 2), ValidationError);

  CHECK_THROWS_AS(CostOracle(TableCost{{0, 1, 1}}, 2), ValidationError);
  CHECK_THROWS_AS(CostOracle(TableCost{{1, 1, 1, 1}}, 2), ValidationError);
  CHECK_THROWS_AS(CostOracle(ThresholdCost{-1}, 2), ValidationError);
  CHECK_THROWS_AS(CostOracle(CoverageMaxCost{{ChoreSet::of({3})}}, 2),
                  ValidationError);
}

TEST_CASE("built-in supermodular families are monotone with 0 <= c <= |S|") {
  std::mt19937_64 rng(11);
  std::vector<CostOracle> oracles;
  oracles.emplace_back(CardinalityCost{}, 12);
  oracles.emplace_back(ThresholdCost{4}, 12);
  oracles.emplace_back(random_partition_complement(rng, 12), 12);
  oracles.emplace_back(ThresholdCost{5}, 16);

  for (const CostOracle& oracle : oracles) {
    const int m = oracle.chore_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const ChoreSet s = ChoreSet::from_bits(mask);
      const int value = oracle.eval(s);
      REQUIRE(value >= 0);
      REQUIRE(value <= s.size());
      for (int a = 0; a < m; ++a) {
        if (!s.contains(a)) REQUIRE(oracle.eval(s.with(a)) >= value);
      }
    }
  }
}

TEST_CASE("complement of a supermodular cost is binary submodular") {
  // g(S) = |S| - c(S) must have binary marginals and satisfy the local
  // submodular exchange condition whenever c validates as supermodular.
  std::mt19937_64 rng(13);
  std::vector<CostOracle> oracles;
  oracles.emplace_back(CardinalityCost{}, 9);
  oracles.emplace_back(ThresholdCost{2}, 9);
  for (int trial = 0; trial < 6; ++trial) {
    oracles.emplace_back(random_partition_complement(rng, 12), 12);
  }

  for (const CostOracle& oracle : oracles) {
    REQUIRE(validate_supermodular(oracle));
    const int m = oracle.chore_count();
    const auto g = [&](ChoreSet s) { return s.size() - oracle.eval(s); };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const ChoreSet s = ChoreSet::from_bits(mask);
      for (int a = 0; a < m; ++a) {
        if (s.contains(a)) continue;
        const int da = g(s.with(a)) - g(s);
        REQUIRE((da == 0 || da == 1));
        for (int b = a + 1; b < m; ++b) {
          if (s.contains(b)) continue;
          REQUIRE(g(s.with(a).with(b)) - g(s.with(b)) <= da);
        }
      }
    }
  }
}

TEST_CASE("table validation on load certifies supermodular tables") {
  // Tabulation of a threshold cost: certified after validation.
  TableCost good;
  good.values.resize(16);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    good.values[mask] = std::max(0, std::popcount(mask) - 2);
  }
  const CostOracle certified = CostOracle::with_validation(good, 4);
  CHECK(certified.binary_marginals_certified());
  CHECK(certified.supermodular_certified());

  // Submodular-shaped table: binary marginals hold, supermodularity fails.
  const CostOracle uncertified =
      CostOracle::with_validation(TableCost{{0, 1, 1, 1}}, 2);
  CHECK(uncertified.binary_marginals_certified());
  CHECK_FALSE(uncertified.supermodular_certified());

  CHECK_THROWS_AS(CostOracle::with_validation(TableCost{{0, 2, 0, 2}}, 2),
                  ValidationError);

  // Plain construction leaves tables uncertified.
  CHECK_FALSE(CostOracle(TableCost{{0, 2, 0, 2}}, 2)
                  .binary_marginals_certified());
}
