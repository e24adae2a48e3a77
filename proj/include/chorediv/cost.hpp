#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

// Largest chore count for which the exhaustive validators will sweep all
// subsets by default (2^16 masks).
inline constexpr int kDefaultValidationBound = 16;

// c(S) = |S|.
struct CardinalityCost {
  friend bool operator==(const CardinalityCost&, const CardinalityCost&) =
      default;
};

// c(S) = max(0, |S| - k): the first k chores are free.
struct ThresholdCost {
  int k = 0;
  friend bool operator==(const ThresholdCost&, const ThresholdCost&) = default;
};

struct PartitionBlock {
  ChoreSet chores;
  int cap = 0;
  friend bool operator==(const PartitionBlock&, const PartitionBlock&) =
      default;
};

// c(S) = |S| - sum_j min(|S ∩ B_j|, cap_j) over blocks B_j partitioning the
// ground set. Within each block the first cap_j chores are free, the rest
// cost 1 apiece. Cardinality is the special case of singleton blocks with
// cap 0; ThresholdCost(k) is the single block [m] with cap k.
struct PartitionComplementCost {
  std::vector<PartitionBlock> blocks;
  friend bool operator==(const PartitionComplementCost&,
                         const PartitionComplementCost&) = default;
};

// c(S) = max_F |S ∩ F| over a family of sets (0 when the family is empty).
// Has binary marginals and is monotone, but is generally not supermodular.
struct CoverageMaxCost {
  std::vector<ChoreSet> sets;
  friend bool operator==(const CoverageMaxCost&, const CoverageMaxCost&) =
      default;
};

// Explicit tabulation: values[mask] is the cost of the bundle whose bitset
// equals mask. Length must be exactly 2^m and values[0] must be 0.
struct TableCost {
  std::vector<int> values;
  friend bool operator==(const TableCost&, const TableCost&) = default;
};

using CostSpec = std::variant<CardinalityCost, ThresholdCost,
                              PartitionComplementCost, CoverageMaxCost,
                              TableCost>;

// Pure value-query oracle over 2^[m]. Immutable after construction and safe
// to share across threads.
//
// Certification flags record which structural properties are known to hold:
// Cardinality, Threshold and PartitionComplement specs are binary
// supermodular by construction; CoverageMax has binary marginals by
// construction; Table specs carry no guarantee until validated (see
// with_validation).
class CostOracle {
 public:
  CostOracle(CostSpec spec, int m) : spec_(std::move(spec)), m_(m) {
    if (m_ < 0 || m_ > kMaxChores) {
      throw ValidationError("chore count must be in [0, 64], got " +
                            std::to_string(m_));
    }
    check_spec_invariants();
    std::visit(
        [this](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CardinalityCost> ||
                        std::is_same_v<T, ThresholdCost> ||
                        std::is_same_v<T, PartitionComplementCost>) {
            binary_certified_ = true;
            supermodular_certified_ = true;
          } else if constexpr (std::is_same_v<T, CoverageMaxCost>) {
            binary_certified_ = true;
          }
        },
        spec_);
  }

  // Builds the oracle and, for Table specs with m within the validator
  // bound, runs the exhaustive property checks: a table without binary
  // marginals is rejected, a supermodular one is certified. Tables beyond
  // the bound are accepted uncertified.
  static CostOracle with_validation(CostSpec spec, int m,
                                    int bound = kDefaultValidationBound);

  int chore_count() const { return m_; }
  const CostSpec& spec() const { return spec_; }

  bool binary_marginals_certified() const { return binary_certified_; }
  bool supermodular_certified() const { return supermodular_certified_; }

  int eval(ChoreSet s) const {
    if (!s.subset_of(ChoreSet::full(m_))) {
      throw InvalidChore("bundle contains chore index >= m = " +
                         std::to_string(m_));
    }
    if (const auto* sp = std::get_if<CardinalityCost>(&spec_)) {
      return eval_spec(*sp, s);
    }
    if (const auto* sp = std::get_if<ThresholdCost>(&spec_)) {
      return eval_spec(*sp, s);
    }
    if (const auto* sp = std::get_if<PartitionComplementCost>(&spec_)) {
      return eval_spec(*sp, s);
    }
    if (const auto* sp = std::get_if<CoverageMaxCost>(&spec_)) {
      return eval_spec(*sp, s);
    }
    return eval_spec(std::get<TableCost>(spec_), s);
  }

  // eval(S + a) - eval(S); requires a not already in S.
  int marginal(ChoreSet s, int chore) const {
    if (chore < 0 || chore >= m_) {
      throw InvalidChore("chore index " + std::to_string(chore) +
                         " outside [0, " + std::to_string(m_) + ")");
    }
    if (s.contains(chore)) {
      throw ChoreAlreadyPresent("chore " + std::to_string(chore) +
                                " is already in the bundle");
    }
    return eval(s.with(chore)) - eval(s);
  }

 private:
// GCC 11 cannot see that the variant index pins which union member was
// initialized and reports a spurious -Wmaybe-uninitialized at -O3 when these
// accessors are inlined.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"
#endif
  static int eval_spec(const CardinalityCost&, ChoreSet s) { return s.size(); }
  static int eval_spec(const ThresholdCost& sp, ChoreSet s) {
    return std::max(0, s.size() - sp.k);
  }
  static int eval_spec(const PartitionComplementCost& sp, ChoreSet s) {
    int free_chores = 0;
    for (const PartitionBlock& b : sp.blocks) {
      free_chores += std::min((s & b.chores).size(), b.cap);
    }
    return s.size() - free_chores;
  }
  static int eval_spec(const CoverageMaxCost& sp, ChoreSet s) {
    int best = 0;
    for (ChoreSet f : sp.sets) best = std::max(best, (s & f).size());
    return best;
  }
  static int eval_spec(const TableCost& sp, ChoreSet s) {
    return sp.values[s.bits()];
  }

  void check_spec_invariants() const {
    const ChoreSet ground = ChoreSet::full(m_);
    if (const auto* sp = std::get_if<ThresholdCost>(&spec_)) {
      if (sp->k < 0) throw ValidationError("threshold k must be nonnegative");
    } else if (const auto* pc = std::get_if<PartitionComplementCost>(&spec_)) {
      ChoreSet seen;
      for (const PartitionBlock& b : pc->blocks) {
        if (!b.chores.subset_of(ground)) {
          throw ValidationError("partition block exceeds the chore range");
        }
        if (b.chores.intersects(seen)) {
          throw ValidationError("partition blocks overlap");
        }
        if (b.cap < 0 || b.cap > b.chores.size()) {
          throw ValidationError("block cap must be in [0, block size]");
        }
        seen = seen | b.chores;
      }
      if (seen != ground) {
        throw ValidationError("partition blocks must cover all chores");
      }
    } else if (const auto* cm = std::get_if<CoverageMaxCost>(&spec_)) {
      for (ChoreSet f : cm->sets) {
        if (!f.subset_of(ground)) {
          throw ValidationError("coverage set exceeds the chore range");
        }
      }
    } else if (const auto* tb = std::get_if<TableCost>(&spec_)) {
      if (m_ >= 32 ||
          tb->values.size() != (std::size_t{1} << m_)) {
        throw ValidationError("table must list exactly 2^m values");
      }
      if (tb->values[0] != 0) {
        throw ValidationError("table value for the empty bundle must be 0");
      }
      for (int v : tb->values) {
        if (v < 0) throw ValidationError("table values must be nonnegative");
      }
    }
  }
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

  friend bool operator==(const CostOracle& a, const CostOracle& b) {
    return a.m_ == b.m_ && a.spec_ == b.spec_;
  }

  CostSpec spec_;
  int m_ = 0;
  bool binary_certified_ = false;
  bool supermodular_certified_ = false;
};

// True iff eval(∅) = 0 and eval(S + a) - eval(S) ∈ {0, 1} for every subset S
// and chore a ∉ S. Exhaustive over all 2^m subsets; m beyond the bound
// throws TooLargeForExhaustiveCheck.
inline bool validate_binary_marginals(const CostOracle& oracle,
                                      int bound = kDefaultValidationBound) {
  const int m = oracle.chore_count();
  if (m > bound) {
    throw TooLargeForExhaustiveCheck(
        "binary-marginal validation needs m <= " + std::to_string(bound) +
        ", got " + std::to_string(m));
  }
  if (oracle.eval(ChoreSet()) != 0) return false;
  const std::uint64_t masks = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const ChoreSet s = ChoreSet::from_bits(mask);
    const int base = oracle.eval(s);
    for (int a = 0; a < m; ++a) {
      if (s.contains(a)) continue;
      const int d = oracle.eval(s.with(a)) - base;
      if (d < 0 || d > 1) return false;
    }
  }
  return true;
}

// True iff eval(S+a+b) - eval(S+b) >= eval(S+a) - eval(S) for all S and all
// distinct a, b ∉ S. This local exchange condition is equivalent to the
// usual S ⊆ T form of supermodularity.
inline bool validate_supermodular(const CostOracle& oracle,
                                  int bound = kDefaultValidationBound) {
  const int m = oracle.chore_count();
  if (m > bound) {
    throw TooLargeForExhaustiveCheck(
        "supermodularity validation needs m <= " + std::to_string(bound) +
        ", got " + std::to_string(m));
  }
  const std::uint64_t masks = std::uint64_t{1} << m;
  std::vector<int> plus(static_cast<std::size_t>(m), 0);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const ChoreSet s = ChoreSet::from_bits(mask);
    const int base = oracle.eval(s);
    for (int a = 0; a < m; ++a) {
      if (!s.contains(a)) plus[a] = oracle.eval(s.with(a));
    }
    for (int a = 0; a < m; ++a) {
      if (s.contains(a)) continue;
      for (int b = a + 1; b < m; ++b) {
        if (s.contains(b)) continue;
        const int both = oracle.eval(s.with(a).with(b));
        if (both - plus[b] < plus[a] - base) return false;
      }
    }
  }
  return true;
}

inline CostOracle CostOracle::with_validation(CostSpec spec, int m,
                                              int bound) {
  CostOracle oracle(std::move(spec), m);
  if (std::holds_alternative<TableCost>(oracle.spec_) && m <= bound) {
    if (!validate_binary_marginals(oracle, bound)) {
      throw ValidationError("table cost does not have binary marginals");
    }
    oracle.binary_certified_ = true;
    oracle.supermodular_certified_ = validate_supermodular(oracle, bound);
  }
  return oracle;
}

}  // namespace chorediv
