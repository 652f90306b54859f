#pragma once

#include <algorithm>
#include <vector>

#include "powergame/core.hpp"
#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

// Utility of node i as a function of its own row, everything else held fixed.
//
// Each neighbor j contributes a unit "bit" that flips at a per-cell
// allocation threshold: attacking an enemy j with at least old + s_j keeps or
// makes it non-safe; supporting a friend j with at least old - s_j keeps or
// makes it non-dangerous. Node i's own score depends only on how much of the
// row lands on enemies or itself (es), via s_i' = es + es_base.
struct RowContext {
  std::vector<int> nodes;      // closed neighborhood of i, sorted
  std::vector<int> old_row;    // current allocations over `nodes`
  std::vector<int> threshold;  // bit fires when alloc >= threshold (self cell unused)
  std::vector<char> counts_to_self;  // enemy or self cell
  int self_cell = -1;
  int self_need = 0;  // s_i' >= 0  <=>  es >= self_need
  int es_base = 0;
  int node = -1;
  int n = 0;
  UtilityVariant variant = UtilityVariant::Static;

  static RowContext build(const SignedNetwork& net, const StrategyMatrix& X,
                          const std::vector<int>& scores, int i, UtilityVariant variant);

  int cells() const { return static_cast<int>(nodes.size()); }

  // bits = number of non-self cells at or above their threshold,
  // es = total allocation on enemy/self cells.
  int utility_of(int bits, int es) const {
    const bool self_ok = es >= self_need;
    if (variant == UtilityVariant::Survival) return self_ok ? bits + 1 : 0;
    return bits + (self_ok ? n + 1 : 0);
  }

  int utility_of_cells(const std::vector<int>& cell_values) const {
    int bits = 0, es = 0;
    for (int c = 0; c < cells(); ++c) {
      if (counts_to_self[c]) es += cell_values[c];
      if (c != self_cell && cell_values[c] >= threshold[c]) ++bits;
    }
    return utility_of(bits, es);
  }

  // Expands cell values to a full length-n row.
  std::vector<int> expand(const std::vector<int>& cell_values) const {
    std::vector<int> row(n, 0);
    for (int c = 0; c < cells(); ++c) row[nodes[c]] = cell_values[c];
    return row;
  }
};

// Enumerates all rows with the given per-cell caps summing to `target`,
// invoking fn(cell_values, utility, es). Caller guarantees the count is
// acceptable. Bits and es are maintained incrementally.
template <class Fn>
void for_each_row(const RowContext& ctx, const std::vector<int>& caps, int target, Fn&& fn) {
  const int k = ctx.cells();
  std::vector<long long> suffix(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + caps[i];
  if (target < 0 || target > suffix[0]) return;
  std::vector<int> cell(k, 0);
  auto rec = [&](auto&& self, int idx, int rem, int bits, int es) -> void {
    if (idx == k) {
      fn(cell, ctx.utility_of(bits, es), es);
      return;
    }
    const int lo = static_cast<int>(std::max<long long>(0, rem - suffix[idx + 1]));
    const int hi = std::min(caps[idx], rem);
    for (int v = lo; v <= hi; ++v) {
      cell[idx] = v;
      const int b = bits + ((idx != ctx.self_cell && v >= ctx.threshold[idx]) ? 1 : 0);
      const int e = es + (ctx.counts_to_self[idx] ? v : 0);
      self(self, idx + 1, rem - v, b, e);
    }
  };
  rec(rec, 0, target, 0, 0);
}

struct MaxRowResult {
  int utility = 0;
  std::vector<int> cell_values;  // one optimal row over ctx.nodes
};

// Exact maximum utility over rows with per-cell caps summing to `target`,
// solved as a unit-value threshold-purchase problem (friends and enemies
// bought cheapest-first, self safety handled per variant). When rng is given
// it only randomizes tie-breaking in the constructed witness row.
MaxRowResult max_utility_row(const RowContext& ctx, const std::vector<int>& caps, int target,
                             Rng* rng = nullptr);

}  // namespace powergame
