#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/instance.hpp"

namespace chorediv {

// Per-agent bundle costs rearranged in nonincreasing order.
struct SortedCostProfile {
  std::vector<int> values;

  static SortedCostProfile from_costs(std::vector<int> costs) {
    std::sort(costs.begin(), costs.end(), std::greater<int>());
    return SortedCostProfile{std::move(costs)};
  }

  friend bool operator==(const SortedCostProfile&, const SortedCostProfile&) =
      default;
};

inline std::vector<int> cost_profile(const Instance& inst,
                                     const Allocation& alloc) {
  inst.check_allocation_shape(alloc);
  std::vector<int> costs;
  costs.reserve(alloc.bundles.size());
  for (int i = 0; i < inst.agent_count(); ++i) {
    costs.push_back(inst.eval(i, alloc.bundles[i]));
  }
  return costs;
}

inline SortedCostProfile sorted_cost_profile(const Instance& inst,
                                             const Allocation& alloc) {
  return SortedCostProfile::from_costs(cost_profile(inst, alloc));
}

inline int social_cost(const Instance& inst, const Allocation& alloc) {
  int total = 0;
  for (int c : cost_profile(inst, alloc)) total += c;
  return total;
}

enum class LorenzOrder { Dominates, DominatedBy, Equal, Incomparable };

// Compares two sorted profiles by prefix sums. `Dominates` means every
// prefix sum of p is at most the matching prefix sum of q, with p != q.
inline LorenzOrder lorenz_compare(const SortedCostProfile& p,
                                  const SortedCostProfile& q) {
  if (p.values.size() != q.values.size()) {
    throw InvalidParameter("profiles must have equal length");
  }
  if (p == q) return LorenzOrder::Equal;
  bool p_le = true;
  bool q_le = true;
  long long sp = 0;
  long long sq = 0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    sp += p.values[i];
    sq += q.values[i];
    if (sp > sq) p_le = false;
    if (sq > sp) q_le = false;
  }
  if (p_le) return LorenzOrder::Dominates;
  if (q_le) return LorenzOrder::DominatedBy;
  return LorenzOrder::Incomparable;
}

struct FairnessViolation {
  int envier = -1;
  int envied = -1;
  ChoreSet subset;
};

struct FairnessWitness {
  bool verdict = false;
  std::optional<FairnessViolation> violation;

  explicit operator bool() const { return verdict; }
};

// Exact rational in (0, 1], used as the scaling factor of the approximate
// envy checks so that comparisons against zero-cost bundles stay exact.
struct Rational {
  long long num = 1;
  long long den = 1;
};

// Envy-freeness up to one chore: for every pair i != j with A_i nonempty,
// some chore can be removed from A_i so that i no longer envies j. The
// returned violator names the envier, the envied agent, and the single best
// removal that still leaves envy.
inline FairnessWitness is_ef1(const Instance& inst, const Allocation& alloc) {
  inst.check_allocation_shape(alloc);
  const int n = inst.agent_count();
  for (int i = 0; i < n; ++i) {
    const ChoreSet own = alloc.bundles[i];
    if (own.empty()) continue;
    int best_after_removal = std::numeric_limits<int>::max();
    int best_chore = -1;
    for (int t : own) {
      const int v = inst.eval(i, own.without(t));
      if (v < best_after_removal) {
        best_after_removal = v;
        best_chore = t;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (best_after_removal > inst.eval(i, alloc.bundles[j])) {
        return {false,
                FairnessViolation{i, j, ChoreSet::singleton(best_chore)}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace detail {

// Applies fn to every size-k subset of the elements, in lexicographic order
// over the element list; fn returning true stops the sweep.
inline bool for_each_subset_of_size(const std::vector<int>& elements, int k,
                                    const std::function<bool(ChoreSet)>& fn) {
  const int sz = static_cast<int>(elements.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ChoreSet subset;
    for (int i : idx) subset = subset.with(elements[i]);
    if (fn(subset)) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == sz - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

inline std::uint64_t subset_count(int sz, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count = count * static_cast<std::uint64_t>(sz - i) /
            static_cast<std::uint64_t>(i + 1);
    if (count > (std::uint64_t{1} << 40)) return count;  // already way over
  }
  return count;
}

}  // namespace detail

// β-EFkX: for every pair i != j with |A_i| >= k and every size-k subset
// T ⊆ A_i, β·c_i(A_i \ T) <= c_i(A_j). Pairs whose bundle is smaller than k
// are vacuously satisfied. β is compared exactly as
// β.num·c_i(A_i \ T) <= β.den·c_i(A_j).
inline FairnessWitness is_beta_efkx(const Instance& inst,
                                    const Allocation& alloc, Rational beta,
                                    int k) {
  inst.check_allocation_shape(alloc);
  if (beta.num < 1 || beta.den < 1 || beta.num > beta.den) {
    throw InvalidParameter("beta must be a rational in (0, 1]");
  }
  if (k < 1) throw InvalidParameter("k must be a positive integer");

  const int n = inst.agent_count();
  for (int i = 0; i < n; ++i) {
    const ChoreSet own = alloc.bundles[i];
    if (own.size() < k) continue;
    if (detail::subset_count(own.size(), k) > (std::uint64_t{1} << 20)) {
      throw TooLargeForExhaustiveCheck(
          "too many size-k removals to enumerate");
    }
    std::vector<int> elements(own.begin(), own.end());
    // The expensive side does not depend on j: find the worst removal once.
    long long worst_scaled = -1;
    ChoreSet worst_subset;
    detail::for_each_subset_of_size(elements, k, [&](ChoreSet t) {
      const long long scaled = beta.num * inst.eval(i, own - t);
      if (scaled > worst_scaled) {
        worst_scaled = scaled;
        worst_subset = t;
      }
      return false;
    });
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (worst_scaled > beta.den * inst.eval(i, alloc.bundles[j])) {
        return {false, FairnessViolation{i, j, worst_subset}};
      }
    }
  }
  return {true, std::nullopt};
}

// EFX is β-EFkX with β = 1 and k = 1.
inline FairnessWitness is_efx(const Instance& inst, const Allocation& alloc) {
  return is_beta_efkx(inst, alloc, Rational{1, 1}, 1);
}

// MMS fairness against supplied shares: c_i(A_i) <= τ_i for every agent. A
// violator is reported as the offending agent together with its bundle.
inline FairnessWitness is_mms_fair(const Instance& inst,
                                   const Allocation& alloc,
                                   std::span<const int> shares) {
  inst.check_allocation_shape(alloc);
  if (static_cast<int>(shares.size()) != inst.agent_count()) {
    throw InvalidParameter("share vector length must equal the agent count");
  }
  for (int i = 0; i < inst.agent_count(); ++i) {
    if (inst.eval(i, alloc.bundles[i]) > shares[i]) {
      return {false, FairnessViolation{i, i, alloc.bundles[i]}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace chorediv
