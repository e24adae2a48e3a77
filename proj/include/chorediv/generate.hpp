#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "chorediv/cost.hpp"
#include "chorediv/instance.hpp"

namespace chorediv {

// Random cost specs and instances for fuzzing and the cross-validation
// harness. All draws come from the caller's engine, so runs are reproducible
// from a seed.

inline PartitionComplementCost random_partition_complement(
    std::mt19937_64& rng, int m) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  PartitionComplementCost spec;
  std::size_t next = 0;
  while (next < order.size()) {
    const int remaining = static_cast<int>(order.size() - next);
    std::uniform_int_distribution<int> size_dist(1, std::min(remaining, 4));
    const int block_size = size_dist(rng);
    ChoreSet block;
    for (int i = 0; i < block_size; ++i) block = block.with(order[next++]);
    std::uniform_int_distribution<int> cap_dist(0, block_size);
    spec.blocks.push_back({block, cap_dist(rng)});
  }
  return spec;
}

inline CoverageMaxCost random_coverage_max(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> count_dist(1, std::max(1, m / 2));
  std::bernoulli_distribution member(0.4);
  CoverageMaxCost spec;
  const int sets = count_dist(rng);
  for (int i = 0; i < sets; ++i) {
    ChoreSet f;
    for (int t = 0; t < m; ++t) {
      if (member(rng)) f = f.with(t);
    }
    spec.sets.push_back(f);
  }
  return spec;
}

// A spec that is certified binary supermodular: one of the structural
// families, or a table tabulated from one of them (which exercises the
// validate-on-load path).
inline CostOracle random_supermodular_oracle(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> family(0, 3);
  switch (m == 0 ? 0 : family(rng)) {
    case 0:
      return CostOracle(CardinalityCost{}, m);
    case 1: {
      std::uniform_int_distribution<int> k_dist(0, m);
      return CostOracle(ThresholdCost{k_dist(rng)}, m);
    }
    case 2:
      return CostOracle(random_partition_complement(rng, m), m);
    default: {
      const CostOracle base(random_partition_complement(rng, m), m);
      TableCost table;
      table.values.resize(std::size_t{1} << m);
      for (std::uint64_t mask = 0; mask < table.values.size(); ++mask) {
        table.values[mask] = base.eval(ChoreSet::from_bits(mask));
      }
      return CostOracle::with_validation(std::move(table), m);
    }
  }
}

// A spec with certified binary marginals that need not be supermodular.
inline CostOracle random_binary_marginal_oracle(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> family(0, 3);
  if (m > 0 && family(rng) == 0) {
    return CostOracle(random_coverage_max(rng, m), m);
  }
  return random_supermodular_oracle(rng, m);
}

inline Instance random_supermodular_instance(std::mt19937_64& rng, int n,
                                             int m) {
  std::vector<CostOracle> costs;
  costs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    costs.push_back(random_supermodular_oracle(rng, m));
  }
  return Instance(std::move(costs));
}

inline Instance random_identical_binary_instance(std::mt19937_64& rng, int n,
                                                 int m) {
  const CostOracle shared = random_binary_marginal_oracle(rng, m);
  return Instance(std::vector<CostOracle>(static_cast<std::size_t>(n), shared));
}

inline Instance random_identical_supermodular_instance(std::mt19937_64& rng,
                                                       int n, int m) {
  const CostOracle shared = random_supermodular_oracle(rng, m);
  return Instance(std::vector<CostOracle>(static_cast<std::size_t>(n), shared));
}

}  // namespace chorediv
