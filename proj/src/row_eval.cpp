#include "powergame/row_eval.hpp"

#include <numeric>

namespace powergame {

RowContext RowContext::build(const SignedNetwork& net, const StrategyMatrix& X,
                             const std::vector<int>& scores, int i, UtilityVariant variant) {
  RowContext ctx;
  ctx.node = i;
  ctx.n = net.n();
  ctx.variant = variant;
  ctx.nodes = net.closed_neighborhood(i);
  const int k = ctx.cells();
  ctx.old_row.resize(k);
  ctx.threshold.resize(k, 0);
  ctx.counts_to_self.resize(k, 0);
  int es_old = 0;
  for (int c = 0; c < k; ++c) {
    const int j = ctx.nodes[c];
    ctx.old_row[c] = X.at(i, j);
    if (j == i) {
      ctx.self_cell = c;
      ctx.counts_to_self[c] = 1;
      es_old += ctx.old_row[c];
    } else if (net.is_enemy(i, j)) {
      ctx.counts_to_self[c] = 1;
      ctx.threshold[c] = ctx.old_row[c] + scores[j];
      es_old += ctx.old_row[c];
    } else {
      ctx.threshold[c] = ctx.old_row[c] - scores[j];
    }
  }
  ctx.es_base = scores[i] - es_old;
  ctx.self_need = -ctx.es_base;
  return ctx;
}

MaxRowResult max_utility_row(const RowContext& ctx, const std::vector<int>& caps, int target,
                             Rng* rng) {
  const int k = ctx.cells();
  long long caps_total = 0, es_caps = 0;
  for (int c = 0; c < k; ++c) {
    caps_total += caps[c];
    if (ctx.counts_to_self[c]) es_caps += caps[c];
  }
  if (target < 0 || target > caps_total) throw Error("row target outside feasible range");

  int free_bits = 0;
  std::vector<std::pair<int, int>> friend_buys, enemy_buys;  // (cost, cell)
  for (int c = 0; c < k; ++c) {
    if (c == ctx.self_cell) continue;
    if (ctx.threshold[c] <= 0) {
      ++free_bits;
    } else if (ctx.threshold[c] <= caps[c]) {
      (ctx.counts_to_self[c] ? enemy_buys : friend_buys).emplace_back(ctx.threshold[c], c);
    }
  }
  std::sort(friend_buys.begin(), friend_buys.end());
  std::sort(enemy_buys.begin(), enemy_buys.end());
  std::vector<long long> pref_e(enemy_buys.size() + 1, 0);
  for (std::size_t t = 0; t < enemy_buys.size(); ++t) pref_e[t + 1] = pref_e[t] + enemy_buys[t].first;

  int best_val = -1, best_kf = 0, best_ke = 0;
  long long fspend = 0;
  for (std::size_t kf = 0; kf <= friend_buys.size(); ++kf) {
    if (kf > 0) fspend += friend_buys[kf - 1].first;
    if (fspend > target) break;
    const long long es_avail = std::min<long long>(target - fspend, es_caps);
    int ke = 0;
    while (ke + 1 <= static_cast<int>(enemy_buys.size()) && pref_e[ke + 1] <= es_avail) ++ke;
    const int es_for_value = static_cast<int>(es_avail);
    const int val = ctx.utility_of(free_bits + static_cast<int>(kf) + ke, es_for_value);
    if (val > best_val) {
      best_val = val;
      best_kf = static_cast<int>(kf);
      best_ke = ke;
    }
  }

  // Assemble a witness row: buy the chosen thresholds, then dump the rest
  // into enemy/self cells first (friend cells only once those are full).
  std::vector<int> cell(k, 0);
  long long spent = 0;
  for (int t = 0; t < best_kf; ++t) {
    cell[friend_buys[t].second] = friend_buys[t].first;
    spent += friend_buys[t].first;
  }
  for (int t = 0; t < best_ke; ++t) {
    cell[enemy_buys[t].second] = enemy_buys[t].first;
    spent += enemy_buys[t].first;
  }
  long long remaining = target - spent;
  std::vector<int> dump_order;
  for (int c = 0; c < k; ++c)
    if (ctx.counts_to_self[c]) dump_order.push_back(c);
  if (rng) rng->shuffle(dump_order);
  // Self first keeps the witness row stable for isolated nodes.
  std::stable_sort(dump_order.begin(), dump_order.end(),
                   [&](int a, int b) { return (a == ctx.self_cell) > (b == ctx.self_cell); });
  for (int c : dump_order) {
    if (remaining <= 0) break;
    const int add = static_cast<int>(std::min<long long>(remaining, caps[c] - cell[c]));
    cell[c] += add;
    remaining -= add;
  }
  if (remaining > 0) {
    for (int c = 0; c < k; ++c) {
      if (ctx.counts_to_self[c] || remaining <= 0) continue;
      const int add = static_cast<int>(std::min<long long>(remaining, caps[c] - cell[c]));
      cell[c] += add;
      remaining -= add;
    }
  }
  if (remaining != 0) throw Error("internal error: could not assemble row at target sum");

  MaxRowResult res;
  res.cell_values = std::move(cell);
  res.utility = ctx.utility_of_cells(res.cell_values);
  if (res.utility < best_val) throw Error("internal error: witness row below computed optimum");
  return res;
}

}  // namespace powergame
