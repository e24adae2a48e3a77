#pragma once

#include <array>
#include <cassert>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "chorediv/chore_set.hpp"
#include "chorediv/cost.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

// Rank-function view of a cost oracle: rank(S) = |S| - c(S). When the cost
// is binary supermodular this is a matroid-rank function, with S independent
// exactly when c(S) = 0.
class MatroidView {
 public:
  explicit MatroidView(const CostOracle& oracle) : oracle_(&oracle) {}

  int ground_size() const { return oracle_->chore_count(); }
  const CostOracle& oracle() const { return *oracle_; }

  int rank(ChoreSet s) const { return s.size() - oracle_->eval(s); }
  bool is_independent(ChoreSet s) const { return oracle_->eval(s) == 0; }

 private:
  const CostOracle* oracle_;
};

// Result of partitioning a ground set against n matroids: disjoint bundles
// B_i, each independent in matroid i, whose union is a maximum-cardinality
// independent set of the union matroid restricted to the ground set. The
// leftover elements are collected in `unassigned`.
struct UnionPartition {
  std::vector<ChoreSet> bundles;
  ChoreSet unassigned;

  int basis_size() const {
    int total = 0;
    for (ChoreSet b : bundles) total += b.size();
    return total;
  }
};

namespace detail {

// One augmentation step of the incremental matroid partition algorithm.
// Tries to place `element` by a shortest swap chain through the exchange
// digraph: an arc u -> v (v placed in bundle b) exists when B_b - v + u is
// independent, and u is a terminal when some B_i + u is independent.
// Breadth-first search gives shortest chains; elements and bundle indices
// are always scanned in ascending order so the outcome is deterministic.
inline bool try_augment(std::span<const MatroidView> views,
                        std::vector<ChoreSet>& bundles,
                        std::array<int, kMaxChores>& owner, int element) {
  const int n = static_cast<int>(views.size());
  const int m = views.front().ground_size();

  std::array<int, kMaxChores> parent;
  parent.fill(-2);  // -2 unvisited, -1 search root
  parent[element] = -1;

  std::deque<int> queue;
  queue.push_back(element);

  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();

    for (int i = 0; i < n; ++i) {
      if (owner[u] == i) continue;
      if (!views[i].is_independent(bundles[i].with(u))) continue;

      // u reached a terminal: replay the swap chain back to the root.
      std::vector<int> path;
      for (int v = u; v != element; v = parent[v]) path.push_back(v);
      path.push_back(element);
      std::reverse(path.begin(), path.end());

      std::vector<int> prior_owner(path.size(), -1);
      for (std::size_t j = 1; j < path.size(); ++j) {
        prior_owner[j] = owner[path[j]];
      }
      for (std::size_t j = 1; j < path.size(); ++j) {
        const int b = prior_owner[j];
        bundles[b] = bundles[b].without(path[j]).with(path[j - 1]);
        owner[path[j - 1]] = b;
      }
      bundles[i] = bundles[i].with(u);
      owner[u] = i;

#ifndef NDEBUG
      for (int j = 0; j < n; ++j) {
        assert(views[j].is_independent(bundles[j]));
      }
#endif
      return true;
    }

    for (int v = 0; v < m; ++v) {
      if (parent[v] != -2 || owner[v] < 0) continue;
      const int b = owner[v];
      if (owner[u] == b) continue;
      if (views[b].is_independent(bundles[b].without(v).with(u))) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace detail

// Incremental augmenting-path matroid partition over the given ground set.
// Elements are inserted in ascending index order; an element with no
// augmenting chain stays unassigned (its non-augmentability is permanent,
// bundles only grow in span). The basis size is order-independent, the
// particular partition is pinned by the deterministic scan order.
inline UnionPartition matroid_partition(std::span<const MatroidView> views,
                                        ChoreSet ground) {
  if (views.empty()) throw InvalidParameter("matroid partition needs n >= 1");
  const int m = views.front().ground_size();
  for (const MatroidView& v : views) {
    if (v.ground_size() != m) {
      throw InvalidParameter("matroid views disagree on the chore count");
    }
  }
  if (!ground.subset_of(ChoreSet::full(m))) {
    throw InvalidChore("ground set exceeds the chore range");
  }

  UnionPartition result;
  result.bundles.assign(views.size(), ChoreSet());
  std::array<int, kMaxChores> owner;
  owner.fill(-1);

  for (int z : ground) {
    if (!detail::try_augment(views, result.bundles, owner, z)) {
      result.unassigned = result.unassigned.with(z);
    }
  }
  return result;
}

// Rank of the ground set in the k-fold union of the view's matroid with
// itself, computed by partitioning against k copies.
inline int kfold_union_rank(const MatroidView& view, int k, ChoreSet ground) {
  if (k < 1) throw InvalidParameter("k-fold union needs k >= 1");
  std::vector<MatroidView> copies(static_cast<std::size_t>(k), view);
  return matroid_partition(copies, ground).basis_size();
}

}  // namespace chorediv
