#include "powergame/static_ne.hpp"

#include <algorithm>
#include <numeric>

#include "powergame/compositions.hpp"
#include "powergame/row_eval.hpp"

namespace powergame {

bool is_nsnd(const SignedNetwork& net, const StrategyMatrix& X) {
  const int n = net.n();
  if (X.n() != n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (X.at(i, j) < 0) return false;
      if (X.at(i, j) != X.at(j, i)) return false;
      if (i != j && X.at(i, j) != 0 && !net.is_enemy(i, j)) return false;
    }
  }
  return true;
}

int precarious_enemy_count(const SignedNetwork& net, const StrategyMatrix& X, int i) {
  int c = 0;
  for (int j : net.enemies_of(i)) c += X.at(j, j) == 0 ? 1 : 0;
  return c;
}

StrategyMatrix preferable_adjustment(const SignedNetwork& net, const StrategyMatrix& X,
                                     const PowerVector& p, int i, Rng& rng) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range");
  if (!is_nsnd(net, X)) throw Error("preferable adjustment requires an NSND matrix");
  if (!in_static_omega(net, X, p)) throw Error("matrix is not feasible for the given powers");

  const auto& enemies = net.enemies_of(i);
  StrategyMatrix Y = X;
  if (enemies.empty()) {
    Y.at(i, i) = p.p[i];
    return Y;
  }

  std::vector<long long> t(enemies.size());
  long long total = 0;
  long long tmin = std::numeric_limits<long long>::max();
  for (std::size_t c = 0; c < enemies.size(); ++c) {
    const int j = enemies[c];
    t[c] = X.at(j, j) + X.at(j, i);
    total += t[c];
    tmin = std::min(tmin, t[c]);
  }
  const long long pi = p.p[i];

  if (pi >= total) {
    Y.at(i, i) = static_cast<int>(pi - total);
    for (std::size_t c = 0; c < enemies.size(); ++c) {
      const int j = enemies[c];
      Y.at(i, j) = Y.at(j, i) = static_cast<int>(t[c]);
      Y.at(j, j) = 0;
    }
    return Y;
  }

  if (pi < tmin) {
    std::vector<std::size_t> argmin;
    for (std::size_t c = 0; c < enemies.size(); ++c)
      if (t[c] == tmin) argmin.push_back(c);
    const std::size_t rc = argmin[rng.index(argmin.size())];
    const int r = enemies[rc];
    Y.at(i, i) = 0;
    for (std::size_t c = 0; c < enemies.size(); ++c) {
      const int j = enemies[c];
      if (j == r) {
        Y.at(i, j) = Y.at(j, i) = static_cast<int>(pi);
        Y.at(j, j) = static_cast<int>(t[c] - pi);
      } else {
        Y.at(i, j) = Y.at(j, i) = 0;
        Y.at(j, j) = static_cast<int>(t[c]);
      }
    }
    return Y;
  }

  // tmin <= p_i < total: exhaust the cheapest enemies, split the next one.
  std::vector<std::size_t> order(enemies.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (t[a] != t[b]) return t[a] < t[b];
    return enemies[a] < enemies[b];
  });
  std::size_t m = 0;
  long long prefix = 0;
  while (m < order.size() && prefix + t[order[m]] <= pi) {
    prefix += t[order[m]];
    ++m;
  }
  // p_i < total guarantees a split enemy exists.
  Y.at(i, i) = 0;
  for (std::size_t s = 0; s < order.size(); ++s) {
    const std::size_t c = order[s];
    const int j = enemies[c];
    if (s < m) {
      Y.at(i, j) = Y.at(j, i) = static_cast<int>(t[c]);
      Y.at(j, j) = 0;
    } else if (s == m) {
      const long long give = pi - prefix;
      Y.at(i, j) = Y.at(j, i) = static_cast<int>(give);
      Y.at(j, j) = static_cast<int>(t[c] - give);
    } else {
      Y.at(i, j) = Y.at(j, i) = 0;
      Y.at(j, j) = static_cast<int>(t[c]);
    }
  }
  return Y;
}

int potential(const StrategyMatrix& X) {
  int v = 0;
  for (int i = 0; i < X.n(); ++i) v += X.at(i, i) == 0 ? 1 : 0;
  return v;
}

EquilibriumRun find_equilibrium(const SignedNetwork& net, const PowerVector& p, Rng& rng) {
  if (p.n() != net.n()) throw Error("power vector size does not match network");
  p.validate();

  EquilibriumRun run;
  run.X = StrategyMatrix::diagonal(p.p);
  run.potential_trace.push_back(potential(run.X));

  for (;;) {
    // Procedure 1: mutually hostile pair with positive self-allocations.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < net.n(); ++i) {
      if (run.X.at(i, i) == 0) continue;
      for (int j : net.enemies_of(i))
        if (run.X.at(j, j) != 0) pairs.emplace_back(i, j);
    }
    if (!pairs.empty()) {
      const auto [i, j] = pairs[rng.index(pairs.size())];
      (void)j;
      run.X = preferable_adjustment(net, run.X, p, i, rng);
      ++run.iterations;
      run.potential_trace.push_back(potential(run.X));
      continue;
    }

    // Procedure 2: zero-diagonal country whose adjustment strictly gains a
    // precarious enemy. Candidates are probed in rng-shuffled order.
    std::vector<int> candidates;
    for (int i = 0; i < net.n(); ++i)
      if (run.X.at(i, i) == 0) candidates.push_back(i);
    rng.shuffle(candidates);
    bool advanced = false;
    for (int i : candidates) {
      StrategyMatrix adjusted = preferable_adjustment(net, run.X, p, i, rng);
      if (precarious_enemy_count(net, adjusted, i) >= precarious_enemy_count(net, run.X, i) + 1) {
        run.X = std::move(adjusted);
        ++run.iterations;
        run.potential_trace.push_back(potential(run.X));
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return run;
}

VerifyResult verify_equilibrium(const SignedNetwork& net, const PowerVector& p,
                                const StrategyMatrix& X, UtilityVariant variant,
                                std::uint64_t budget) {
  if (p.n() != net.n()) throw Error("power vector size does not match network");
  if (!in_static_omega(net, X, p)) throw Error("matrix is not feasible for the given powers");

  VerifyResult res;
  const auto scores = support_scores(net, X);
  for (int i = 0; i < net.n(); ++i) {
    const auto& nb = net.closed_neighborhood(i);
    const std::uint64_t count = composition_count(p.p[i], static_cast<int>(nb.size()));
    if (count > budget) {
      res.status = VerifyResult::Status::BudgetExceeded;
      res.node = i;
      return res;
    }
    RowContext ctx = RowContext::build(net, X, scores, i, variant);
    const int u0 = ctx.utility_of_cells(ctx.old_row);
    const std::vector<int> caps(nb.size(), p.p[i]);
    bool found = false;
    std::vector<int> best;
    int best_u = u0;
    for_each_row(ctx, caps, p.p[i], [&](const std::vector<int>& cell, int u, int) {
      if (!found && u > u0) {
        found = true;
        best = cell;
        best_u = u;
      }
    });
    res.rows_enumerated += count;
    if (found) {
      res.status = VerifyResult::Status::Deviation;
      res.node = i;
      res.improving_row = ctx.expand(best);
      res.utility_before = u0;
      res.utility_after = best_u;
      return res;
    }
  }
  res.status = VerifyResult::Status::Equilibrium;
  return res;
}

bool no_friendly_transfers(const SignedNetwork& net, const StrategyMatrix& X) {
  for (int i = 0; i < net.n(); ++i)
    for (int j : net.friends_of(i))
      if (j != i && X.at(i, j) != 0) return false;
  return true;
}

}  // namespace powergame
