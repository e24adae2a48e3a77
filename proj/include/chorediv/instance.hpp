#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/cost.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

// Ordered partition of a subset of the chores into one bundle per agent.
// Partial when the bundles do not cover [m].
struct Allocation {
  std::vector<ChoreSet> bundles;

  ChoreSet assigned() const {
    ChoreSet u;
    for (ChoreSet b : bundles) u = u | b;
    return u;
  }

  bool pairwise_disjoint() const {
    ChoreSet seen;
    for (ChoreSet b : bundles) {
      if (b.intersects(seen)) return false;
      seen = seen | b;
    }
    return true;
  }

  bool complete(int m) const { return assigned() == ChoreSet::full(m); }

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// A chore division problem: n agents, m chores, one cost oracle per agent.
class Instance {
 public:
  explicit Instance(std::vector<CostOracle> costs) : costs_(std::move(costs)) {
    if (costs_.empty()) {
      throw ValidationError("an instance needs at least one agent");
    }
    for (const CostOracle& c : costs_) {
      if (c.chore_count() != costs_.front().chore_count()) {
        throw ValidationError("all agents must share the same chore count");
      }
    }
  }

  int agent_count() const { return static_cast<int>(costs_.size()); }
  int chore_count() const { return costs_.front().chore_count(); }
  ChoreSet all_chores() const { return ChoreSet::full(chore_count()); }

  const CostOracle& cost(int agent) const {
    return costs_.at(static_cast<std::size_t>(agent));
  }
  const std::vector<CostOracle>& costs() const { return costs_; }

  int eval(int agent, ChoreSet s) const { return cost(agent).eval(s); }

  // True iff every oracle is certified binary supermodular (structural
  // family or validated table).
  bool all_supermodular_certified() const {
    return std::all_of(costs_.begin(), costs_.end(), [](const CostOracle& c) {
      return c.supermodular_certified();
    });
  }

  bool all_binary_marginals_certified() const {
    return std::all_of(costs_.begin(), costs_.end(), [](const CostOracle& c) {
      return c.binary_marginals_certified();
    });
  }

  // True iff every agent carries the same cost spec.
  bool identical_costs() const {
    return std::all_of(costs_.begin(), costs_.end(), [&](const CostOracle& c) {
      return c.spec() == costs_.front().spec();
    });
  }

  // Validates that alloc has one bundle per agent, bundles within [m] and
  // pairwise disjoint. Completeness is not required.
  void check_allocation_shape(const Allocation& alloc) const {
    if (static_cast<int>(alloc.bundles.size()) != agent_count()) {
      throw InvalidAllocation("allocation has " +
                              std::to_string(alloc.bundles.size()) +
                              " bundles for " + std::to_string(agent_count()) +
                              " agents");
    }
    for (ChoreSet b : alloc.bundles) {
      if (!b.subset_of(all_chores())) {
        throw InvalidAllocation("bundle contains a chore index >= m");
      }
    }
    if (!alloc.pairwise_disjoint()) {
      throw InvalidAllocation("bundles overlap");
    }
  }

 private:
  std::vector<CostOracle> costs_;
};

}  // namespace chorediv
