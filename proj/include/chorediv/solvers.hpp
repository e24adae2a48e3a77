#pragma once

#include <cassert>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/fairness.hpp"
#include "chorediv/instance.hpp"
#include "chorediv/matroid.hpp"

namespace chorediv {

namespace detail {

inline void require_supermodular(const Instance& inst) {
  if (!inst.all_supermodular_certified()) {
    throw UncertifiedCosts("costs not certified binary supermodular");
  }
}

inline Allocation trivial_allocation(const Instance& inst) {
  Allocation alloc;
  alloc.bundles.assign(static_cast<std::size_t>(inst.agent_count()),
                       ChoreSet());
  if (inst.agent_count() == 1) alloc.bundles[0] = inst.all_chores();
  return alloc;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace detail

// Zero-cost partial allocation whose bundles form a maximum-cardinality
// basis of the union of the agents' rank matroids. Every completion of this
// partial allocation is social-cost minimizing, and the number of chores it
// leaves unassigned equals the minimum social cost c*.
inline Allocation cost_min_partial_alloc(const Instance& inst) {
  detail::require_supermodular(inst);
  std::vector<MatroidView> views;
  views.reserve(static_cast<std::size_t>(inst.agent_count()));
  for (const CostOracle& c : inst.costs()) views.emplace_back(c);
  UnionPartition up = matroid_partition(views, inst.all_chores());
  Allocation alloc{std::move(up.bundles)};
#ifndef NDEBUG
  for (int i = 0; i < inst.agent_count(); ++i) {
    assert(inst.eval(i, alloc.bundles[i]) == 0);
  }
#endif
  return alloc;
}

// Complete allocation with minimum social cost c* = m - r̂([m]). The chores
// left over by the partial allocation are handed to agent 0; by the
// extension property any completion would do.
inline Allocation social_cost_min(const Instance& inst) {
  detail::require_supermodular(inst);
  if (inst.chore_count() == 0 || inst.agent_count() == 1) {
    return detail::trivial_allocation(inst);
  }
  Allocation alloc = cost_min_partial_alloc(inst);
  const ChoreSet unassigned = inst.all_chores() - alloc.assigned();
  alloc.bundles[0] = alloc.bundles[0] | unassigned;
  assert(social_cost(inst, alloc) == unassigned.size());
  return alloc;
}

// Complete allocation that is EF1 and social-cost minimizing. Starting from
// the zero-cost partial allocation, each leftover chore goes to an agent who
// currently envies nobody (one always exists; its absence would mean an
// envy cycle whose resolution beats c*). Chores and agents are picked
// lowest-index first. The optional callback observes the partial allocation
// after every assignment.
inline Allocation ef1_and_efficient(
    const Instance& inst,
    const std::function<void(const Allocation&)>& on_assign = {}) {
  detail::require_supermodular(inst);
  if (inst.chore_count() == 0 || inst.agent_count() == 1) {
    return detail::trivial_allocation(inst);
  }
  const int n = inst.agent_count();
  Allocation alloc = cost_min_partial_alloc(inst);
  const ChoreSet unassigned = inst.all_chores() - alloc.assigned();

  for (int t : unassigned) {
    int chosen = -1;
    for (int i = 0; i < n && chosen < 0; ++i) {
      const int own = inst.eval(i, alloc.bundles[i]);
      bool envies = false;
      for (int j = 0; j < n && !envies; ++j) {
        if (j != i && own > inst.eval(i, alloc.bundles[j])) envies = true;
      }
      if (!envies) chosen = i;
    }
    if (chosen < 0) {
      throw InternalInvariantViolation(
          "no envy-free agent found while extending the allocation");
    }
    alloc.bundles[chosen] = alloc.bundles[chosen].with(t);
    if (on_assign) on_assign(alloc);
    assert(is_ef1(inst, alloc).verdict);
  }
  assert(social_cost(inst, alloc) == unassigned.size());
  return alloc;
}

// Minimax share of one agent: τ_i = ceil((m - r_{i×n}([m])) / n), where
// r_{i×n} is the rank of the n-fold union of agent i's rank matroid.
inline int minimax_share(const Instance& inst, int agent) {
  if (!inst.cost(agent).supermodular_certified()) {
    throw UncertifiedCosts("costs not certified binary supermodular");
  }
  const int m = inst.chore_count();
  if (m == 0) return 0;
  MatroidView view(inst.cost(agent));
  const int rank = kfold_union_rank(view, inst.agent_count(), inst.all_chores());
  return detail::ceil_div(m - rank, inst.agent_count());
}

inline std::vector<int> minimax_shares(const Instance& inst) {
  std::vector<int> shares;
  shares.reserve(static_cast<std::size_t>(inst.agent_count()));
  for (int i = 0; i < inst.agent_count(); ++i) {
    shares.push_back(minimax_share(inst, i));
  }
  return shares;
}

// Complete allocation that is MMS-fair and social-cost minimizing. Agents
// are filled in index order with lowest-index leftover chores until their
// cost reaches τ_i; since c* <= Σ τ_i and every bundle starts at zero cost,
// the leftovers always fit.
inline Allocation mms_and_efficient(const Instance& inst) {
  detail::require_supermodular(inst);
  if (inst.chore_count() == 0 || inst.agent_count() == 1) {
    return detail::trivial_allocation(inst);
  }
  Allocation alloc = cost_min_partial_alloc(inst);
  const std::vector<int> shares = minimax_shares(inst);
  ChoreSet pool = inst.all_chores() - alloc.assigned();
  const int initially_unassigned = pool.size();

  for (int i = 0; i < inst.agent_count(); ++i) {
    while (!pool.empty() && inst.eval(i, alloc.bundles[i]) < shares[i]) {
      const int t = pool.lowest();
      alloc.bundles[i] = alloc.bundles[i].with(t);
      pool = pool.without(t);
    }
  }
  if (!pool.empty()) {
    throw InternalInvariantViolation(
        "chores left over after every agent reached its minimax share");
  }
#ifndef NDEBUG
  assert(is_mms_fair(inst, alloc, shares).verdict);
  assert(social_cost(inst, alloc) == initially_unassigned);
#else
  (void)initially_unassigned;
#endif
  return alloc;
}

// Lorenz dominating complete allocation: the leftover chores are split as
// equally as possible, sizes ceil(|U|/n) for the first |U| mod n agents and
// floor(|U|/n) for the rest; each agent ends up with cost exactly its share
// of the split, which prefix-dominates every other profile.
inline Allocation lorenz_dominating(const Instance& inst) {
  detail::require_supermodular(inst);
  if (inst.chore_count() == 0 || inst.agent_count() == 1) {
    return detail::trivial_allocation(inst);
  }
  const int n = inst.agent_count();
  Allocation alloc = cost_min_partial_alloc(inst);
  ChoreSet pool = inst.all_chores() - alloc.assigned();
  const int leftovers = pool.size();
  const int heavy_agents = leftovers % n;

  for (int i = 0; i < n; ++i) {
    const int quota =
        i < heavy_agents ? detail::ceil_div(leftovers, n) : leftovers / n;
    for (int taken = 0; taken < quota; ++taken) {
      const int t = pool.lowest();
      alloc.bundles[i] = alloc.bundles[i].with(t);
      pool = pool.without(t);
    }
#ifndef NDEBUG
    assert(inst.eval(i, alloc.bundles[i]) == quota);
#endif
  }
  assert(pool.empty());
  return alloc;
}

struct AddAndFixStats {
  int outer_iterations = 0;
  bool binary_marginals_certified = false;
};

// EFX allocation for identical cost functions. Each round adds the
// lowest-index unassigned chore to the currently cheapest bundle, then
// sheds chores from that bundle (back into the pool) while some single
// removal still leaves it above the second-cheapest bundle. The partial
// allocation is EFX at the top of every round; each round either shrinks
// the pool or strictly raises the social cost, so for binary marginals the
// loop ends within m² rounds (and within m·(c([m])+1)·(m+1) for any
// monotone integer cost, which is enforced as a guard).
inline Allocation add_and_fix(
    const Instance& inst, AddAndFixStats* stats = nullptr,
    const std::function<void(const Allocation&, ChoreSet)>& on_round = {}) {
  if (!inst.identical_costs()) {
    throw NotIdenticalCosts("agents do not share one cost function");
  }
  AddAndFixStats local;
  local.binary_marginals_certified = inst.all_binary_marginals_certified();

  const int n = inst.agent_count();
  const int m = inst.chore_count();
  if (m == 0 || n == 1) {
    if (stats) *stats = local;
    return detail::trivial_allocation(inst);
  }

  const CostOracle& cost = inst.cost(0);
  const long long guard =
      static_cast<long long>(m) * (cost.eval(inst.all_chores()) + 1) * (m + 1);

  Allocation alloc;
  alloc.bundles.assign(static_cast<std::size_t>(n), ChoreSet());
  std::vector<int> bundle_cost(static_cast<std::size_t>(n), 0);
  ChoreSet pool = inst.all_chores();

  while (!pool.empty()) {
    if (++local.outer_iterations > guard) {
      throw InternalInvariantViolation(
          "add-and-fix exceeded its step budget; is the cost monotone?");
    }
    if (on_round) on_round(alloc, pool);
    assert(is_efx(inst, alloc).verdict);

    int cheapest = 0;
    for (int i = 1; i < n; ++i) {
      if (bundle_cost[i] < bundle_cost[cheapest]) cheapest = i;
    }
    int runner_up = cheapest == 0 ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      if (i != cheapest && bundle_cost[i] < bundle_cost[runner_up]) {
        runner_up = i;
      }
    }

    const int t = pool.lowest();
    pool = pool.without(t);
    ChoreSet bundle = alloc.bundles[cheapest].with(t);

    bool removed = true;
    while (removed) {
      removed = false;
      for (int q : bundle) {
        if (cost.eval(bundle.without(q)) > bundle_cost[runner_up]) {
          bundle = bundle.without(q);
          pool = pool.with(q);
          removed = true;
          break;
        }
      }
    }
    alloc.bundles[cheapest] = bundle;
    bundle_cost[cheapest] = cost.eval(bundle);
  }

  assert(is_efx(inst, alloc).verdict);
  if (stats) *stats = local;
  return alloc;
}

}  // namespace chorediv
