#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/fairness.hpp"
#include "chorediv/instance.hpp"

namespace chorediv {

// Default ceiling on n^m for the exhaustive sweeps below.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1}
                                                          << 20;

// n^m, or nullopt when it exceeds the bound.
inline std::optional<std::uint64_t> allocation_count(
    int n, int m, std::uint64_t bound = kDefaultEnumerationBound) {
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) {
    if (count > bound / static_cast<std::uint64_t>(n)) return std::nullopt;
    count *= static_cast<std::uint64_t>(n);
  }
  if (count > bound) return std::nullopt;
  return count;
}

// Streams every complete allocation of m chores to n agents exactly once,
// in lexicographic order of the assignment vector (chore 0 most
// significant). The visitor receives a reused buffer; it may be either
// void(const Allocation&) or bool(const Allocation&), where returning true
// stops the sweep early.
template <typename F>
void for_each_allocation(int n, int m, F&& visit,
                         std::uint64_t bound = kDefaultEnumerationBound) {
  if (n < 1 || m < 0 || m > kMaxChores) {
    throw InvalidParameter("enumeration needs n >= 1 and 0 <= m <= 64");
  }
  if (!allocation_count(n, m, bound)) {
    throw TooLargeForExhaustiveCheck("n^m exceeds the enumeration bound");
  }

  Allocation alloc;
  alloc.bundles.assign(static_cast<std::size_t>(n), ChoreSet());
  alloc.bundles[0] = ChoreSet::full(m);
  std::vector<int> assign(static_cast<std::size_t>(m), 0);

  constexpr bool stoppable =
      std::is_same_v<std::invoke_result_t<F&, const Allocation&>, bool>;
  while (true) {
    if constexpr (stoppable) {
      if (visit(static_cast<const Allocation&>(alloc))) return;
    } else {
      visit(static_cast<const Allocation&>(alloc));
    }
    int j = m - 1;
    while (j >= 0 && assign[j] == n - 1) {
      alloc.bundles[n - 1] = alloc.bundles[n - 1].without(j);
      alloc.bundles[0] = alloc.bundles[0].with(j);
      assign[j] = 0;
      --j;
    }
    if (j < 0) return;
    alloc.bundles[assign[j]] = alloc.bundles[assign[j]].without(j);
    ++assign[j];
    alloc.bundles[assign[j]] = alloc.bundles[assign[j]].with(j);
  }
}

struct BruteMinSocialCost {
  int cost = 0;
  Allocation argmin;
};

// Minimum social cost over all complete allocations, plus the first argmin
// in enumeration order.
inline BruteMinSocialCost brute_min_social_cost(
    const Instance& inst, std::uint64_t bound = kDefaultEnumerationBound) {
  BruteMinSocialCost best;
  best.cost = -1;
  for_each_allocation(
      inst.agent_count(), inst.chore_count(),
      [&](const Allocation& alloc) {
        int sc = 0;
        for (int i = 0; i < inst.agent_count(); ++i) {
          sc += inst.eval(i, alloc.bundles[i]);
        }
        if (best.cost < 0 || sc < best.cost) {
          best.cost = sc;
          best.argmin = alloc;
        }
      },
      bound);
  return best;
}

// Minimax share straight from its definition: the minimum over all complete
// n-partitions of the maximum bundle cost under agent i's cost function.
inline int brute_minimax_share(const Instance& inst, int agent,
                               std::uint64_t bound = kDefaultEnumerationBound) {
  int best = -1;
  for_each_allocation(
      inst.agent_count(), inst.chore_count(),
      [&](const Allocation& alloc) {
        int worst = 0;
        for (ChoreSet b : alloc.bundles) {
          worst = std::max(worst, inst.eval(agent, b));
        }
        if (best < 0 || worst < best) best = worst;
      },
      bound);
  return best;
}

// True iff no enumerated complete allocation Pareto dominates alloc.
inline bool brute_is_pareto_efficient(
    const Instance& inst, const Allocation& alloc,
    std::uint64_t bound = kDefaultEnumerationBound) {
  inst.check_allocation_shape(alloc);
  if (!alloc.complete(inst.chore_count())) {
    throw InvalidAllocation("Pareto check needs a complete allocation");
  }
  const std::vector<int> base = cost_profile(inst, alloc);
  bool dominated = false;
  for_each_allocation(
      inst.agent_count(), inst.chore_count(),
      [&](const Allocation& other) {
        bool weakly_better = true;
        bool strictly = false;
        for (int i = 0; i < inst.agent_count(); ++i) {
          const int c = inst.eval(i, other.bundles[i]);
          if (c > base[i]) weakly_better = false;
          if (c < base[i]) strictly = true;
        }
        if (weakly_better && strictly) dominated = true;
        return dominated;
      },
      bound);
  return !dominated;
}

// An allocation whose sorted cost profile weakly prefix-dominates every
// other complete allocation's, when one exists. The exemplar returned is the
// first allocation in enumeration order achieving the dominating profile.
inline std::optional<Allocation> brute_lorenz_dominating(
    const Instance& inst, std::uint64_t bound = kDefaultEnumerationBound) {
  std::map<std::vector<int>, Allocation> first_seen;
  for_each_allocation(
      inst.agent_count(), inst.chore_count(),
      [&](const Allocation& alloc) {
        auto profile = sorted_cost_profile(inst, alloc);
        first_seen.try_emplace(std::move(profile.values), alloc);
      },
      bound);
  for (const auto& [candidate, alloc] : first_seen) {
    const SortedCostProfile p{candidate};
    bool dominates_all = true;
    for (const auto& [other, unused] : first_seen) {
      const LorenzOrder order = lorenz_compare(p, SortedCostProfile{other});
      if (order != LorenzOrder::Dominates && order != LorenzOrder::Equal) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) return alloc;
  }
  return std::nullopt;
}

namespace detail {

// Ascending total order on (cost, size) pairs: by cost, then by size.
inline bool tuple_less(std::pair<int, int> a, std::pair<int, int> b) {
  return a.first != b.first ? a.first < b.first : a.second < b.second;
}

}  // namespace detail

// For identical costs: the allocation maximizing the minimum (cost, size)
// tuple among the agents, then the second minimum, and so on. Ties are
// broken by lexicographic assignment order (the first maximizer found).
// Exponential by construction; no polynomial route is attempted.
inline Allocation brute_leximax_minus(
    const Instance& inst, std::uint64_t bound = kDefaultEnumerationBound) {
  if (!inst.identical_costs()) {
    throw NotIdenticalCosts("leximax- is defined for identical costs");
  }
  const int n = inst.agent_count();
  std::vector<std::pair<int, int>> best_key;
  Allocation best;
  for_each_allocation(
      n, inst.chore_count(),
      [&](const Allocation& alloc) {
        std::vector<std::pair<int, int>> key;
        key.reserve(static_cast<std::size_t>(n));
        for (ChoreSet b : alloc.bundles) {
          key.emplace_back(inst.eval(0, b), b.size());
        }
        std::sort(key.begin(), key.end(), detail::tuple_less);
        if (best_key.empty() ||
            std::lexicographical_compare(best_key.begin(), best_key.end(),
                                         key.begin(), key.end(),
                                         detail::tuple_less)) {
          best_key = std::move(key);
          best = alloc;
        }
      },
      bound);
  return best;
}

// Lowest-index chore whose removal drops the bundle cost by exactly one.
// For supermodular oracles with eval(S) > 0 such a chore always exists;
// failure to find one certifies that the oracle is not supermodular.
inline int find_decrement_chore(const CostOracle& oracle, ChoreSet s) {
  const int value = oracle.eval(s);
  if (value <= 0) {
    throw InvalidParameter("decrement search needs a bundle of positive cost");
  }
  for (int a : s) {
    if (oracle.eval(s.without(a)) == value - 1) return a;
  }
  throw NoDecrementFound("no single removal decrements the cost");
}

// Rebalances a social-cost-minimizing allocation under identical
// supermodular costs until any two bundle costs differ by at most one,
// preserving the social cost. Each transfer moves a decrement chore from
// the costliest bundle to the cheapest and strictly lowers the potential
// Σ c(A_p)², so at most n·m² transfers occur. The input is checked against
// the enumeration oracle when within bound and trusted otherwise.
inline Allocation balance_scm_identical(
    const Instance& inst, Allocation alloc,
    std::uint64_t bound = kDefaultEnumerationBound) {
  if (!inst.identical_costs()) {
    throw NotIdenticalCosts("rebalancing is defined for identical costs");
  }
  if (!inst.all_supermodular_certified()) {
    throw UncertifiedCosts("costs not certified binary supermodular");
  }
  inst.check_allocation_shape(alloc);
  if (!alloc.complete(inst.chore_count())) {
    throw InvalidAllocation("rebalancing needs a complete allocation");
  }
  if (allocation_count(inst.agent_count(), inst.chore_count(), bound)) {
    if (social_cost(inst, alloc) != brute_min_social_cost(inst, bound).cost) {
      throw InputNotSCM("allocation is not social-cost minimizing");
    }
  }

  const CostOracle& cost = inst.cost(0);
  const int n = inst.agent_count();
  std::vector<int> costs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) costs[i] = cost.eval(alloc.bundles[i]);

  const long long max_transfers = static_cast<long long>(n) *
                                  inst.chore_count() * inst.chore_count();
  for (long long step = 0;; ++step) {
    int hi = 0;
    int lo = 0;
    for (int i = 1; i < n; ++i) {
      if (costs[i] > costs[hi]) hi = i;
      if (costs[i] < costs[lo]) lo = i;
    }
    if (costs[hi] <= costs[lo] + 1) break;
    if (step >= max_transfers) {
      throw InternalInvariantViolation("rebalancing exceeded its step budget");
    }
    const int t = find_decrement_chore(cost, alloc.bundles[hi]);
    alloc.bundles[hi] = alloc.bundles[hi].without(t);
    alloc.bundles[lo] = alloc.bundles[lo].with(t);
    costs[hi] -= 1;
    costs[lo] = cost.eval(alloc.bundles[lo]);
  }
  return alloc;
}

}  // namespace chorediv
