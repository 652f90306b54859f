#include "powergame/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "powergame/compositions.hpp"
#include "powergame/metrics.hpp"
#include "powergame/netgen.hpp"
#include "powergame/row_eval.hpp"

namespace powergame {

namespace {

std::vector<int> best_response_cells(const RowContext& ctx, int target, Rng& rng,
                                     std::uint64_t budget) {
  const std::vector<int> caps(ctx.cells(), target);
  const std::uint64_t count = composition_count(target, ctx.cells());
  const int u_current = ctx.utility_of_cells(ctx.old_row);

  if (count <= budget) {
    int best_u = -1;
    std::uint64_t best_count = 0;
    for_each_row(ctx, caps, target, [&](const std::vector<int>&, int u, int) {
      if (u > best_u) {
        best_u = u;
        best_count = 1;
      } else if (u == best_u) {
        ++best_count;
      }
    });
    if (best_u <= u_current) return ctx.old_row;
    const std::uint64_t pick = rng.below(best_count);
    std::uint64_t seen = 0;
    std::vector<int> chosen;
    bool done = false;
    for_each_row(ctx, caps, target, [&](const std::vector<int>& cell, int u, int) {
      if (done || u != best_u) return;
      if (seen++ == pick) {
        chosen = cell;
        done = true;
      }
    });
    return chosen;
  }

  auto res = max_utility_row(ctx, caps, target, &rng);
  if (res.utility <= u_current) return ctx.old_row;
  return res.cell_values;
}

template <class Work>
void run_parallel(int jobs, int threads, Work&& work) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (int j = 0; j < jobs; ++j) work(j);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const int j = next.fetch_add(1);
        if (j >= jobs) return;
        work(j);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<int> best_response(const SignedNetwork& net, const PowerVector& p,
                               const StrategyMatrix& X, int i, Rng& rng, std::uint64_t budget,
                               UtilityVariant variant) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range");
  const auto scores = support_scores(net, X);
  RowContext ctx = RowContext::build(net, X, scores, i, variant);
  return ctx.expand(best_response_cells(ctx, p.p[i], rng, budget));
}

SurvivalReport estimate_survival(const SignedNetwork& net, const PowerVector& p,
                                 const SurvivalConfig& cfg) {
  cfg.validate();
  if (p.n() != net.n()) throw Error("power vector size does not match network");
  p.validate();
  const int n = net.n();

  SurvivalReport report;
  report.runs = cfg.runs;
  report.iterations_per_run = cfg.iterations_per_run;
  report.seed = cfg.seed;
  report.safe_tally.assign(n, 0);
  report.precarious_tally.assign(n, 0);
  report.dangerous_tally.assign(n, 0);

  std::vector<std::vector<CountryState>> finals(cfg.runs);
  run_parallel(cfg.runs, cfg.threads, [&](int run) {
    Rng rng(cfg.seed ^ static_cast<std::uint64_t>(run));
    StrategyMatrix X = StrategyMatrix::diagonal(p.p);
    std::vector<int> scores = support_scores(net, X);
    for (long long it = 0; it < cfg.iterations_per_run; ++it) {
      const int i = static_cast<int>(rng.index(n));
      RowContext ctx = RowContext::build(net, X, scores, i, UtilityVariant::Survival);
      const auto cells = best_response_cells(ctx, p.p[i], rng, cfg.best_response_budget);
      for (int c = 0; c < ctx.cells(); ++c) {
        const int j = ctx.nodes[c];
        const int delta = cells[c] - X.at(i, j);
        if (delta == 0) continue;
        if (j == i) {
          scores[i] += delta;
        } else if (net.is_enemy(i, j)) {
          scores[j] -= delta;
          scores[i] += delta;
        } else {
          scores[j] += delta;
        }
        X.at(i, j) = cells[c];
      }
    }
    std::vector<CountryState> st(n);
    for (int j = 0; j < n; ++j) st[j] = state_of(scores[j]);
    finals[run] = std::move(st);
  });

  for (int run = 0; run < cfg.runs; ++run) {
    for (int j = 0; j < n; ++j) {
      switch (finals[run][j]) {
        case CountryState::Safe: ++report.safe_tally[j]; break;
        case CountryState::Precarious: ++report.precarious_tally[j]; break;
        case CountryState::Dangerous: ++report.dangerous_tally[j]; break;
      }
    }
  }
  report.likelihood.resize(n);
  report.survives.resize(n);
  for (int j = 0; j < n; ++j) {
    report.likelihood[j] =
        double(report.safe_tally[j] + report.precarious_tally[j]) / double(cfg.runs);
    report.survives[j] = report.likelihood[j] > 0.5;
  }
  return report;
}

SweepReport sweep(const SweepConfig& cfg) {
  if (cfg.n <= 0 || cfg.K <= 0 || cfg.sims_per_cell <= 0 || cfg.steps_per_sim <= 0) {
    throw Error("sweep config must be positive");
  }
  for (double q : cfg.qe_grid)
    if (q < 0.0 || q > 1.0) throw Error("q_e grid values must lie in [0, 1]");
  for (double q : cfg.qn_grid)
    if (q < 0.0 || q > 1.0) throw Error("q_n grid values must lie in [0, 1]");

  SweepReport report;
  report.config = cfg;
  const std::size_t cells = cfg.qe_grid.size() * cfg.qn_grid.size();
  report.cells.resize(cells);

  run_parallel(static_cast<int>(cells), cfg.threads, [&](int cell_idx) {
    const std::size_t qe_idx = static_cast<std::size_t>(cell_idx) / cfg.qn_grid.size();
    const std::size_t qn_idx = static_cast<std::size_t>(cell_idx) % cfg.qn_grid.size();
    SweepCell cell;
    cell.q_e = cfg.qe_grid[qe_idx];
    cell.q_n = cfg.qn_grid[qn_idx];

    double power_acc = 0.0, gini_acc = 0.0, frus_acc = 0.0, frus_norm_acc = 0.0;
    int converged = 0;
    for (int sim = 0; sim < cfg.sims_per_cell; ++sim) {
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(cell_idx) * 1000003ULL +
                                     static_cast<std::uint64_t>(sim)));
      GenParams gp{cfg.n, cell.q_e, cell.q_n, 0};
      const SignedNetwork net = generate(gp, rng);

      PowerVector p0;
      p0.cap = cfg.K;
      p0.p.resize(cfg.n);
      for (int i = 0; i < cfg.n; ++i) p0.p[i] = rng.int_in(1, cfg.K);

      StrategyMatrix X0(cfg.n);
      for (int i = 0; i < cfg.n; ++i) {
        const auto& nb = net.closed_neighborhood(i);
        CompositionSampler sampler(std::vector<int>(nb.size(), p0.p[i]), p0.p[i]);
        const auto cellvals = sampler.sample(rng);
        for (std::size_t c = 0; c < nb.size(); ++c) X0.at(i, nb[c]) = cellvals[c];
      }

      DynamicsConfig dcfg;
      dcfg.max_steps = cfg.steps_per_sim;
      DynamicsRun run = run_dynamics(net, p0, X0, cfg.K, rng, dcfg);

      double mean_power = 0.0;
      for (int v : run.report.final_powers) mean_power += v;
      mean_power /= cfg.n;
      power_acc += mean_power;
      gini_acc += gini(run.report.final_powers);

      FrustrationOptions fopt;
      fopt.exact_limit = cfg.frustration_exact_limit;
      fopt.seed = mix_seed(cfg.seed + 1, static_cast<std::uint64_t>(cell_idx) * 31 + sim);
      const auto fr = frustration(net, fopt);
      frus_acc += static_cast<double>(fr.value);
      frus_norm_acc += fr.normalized();
      converged += run.report.converged ? 1 : 0;
    }
    cell.avg_power = power_acc / cfg.sims_per_cell;
    cell.gini = gini_acc / cfg.sims_per_cell;
    cell.frustration = frus_acc / cfg.sims_per_cell;
    cell.frustration_normalized = frus_norm_acc / cfg.sims_per_cell;
    cell.converged_fraction = double(converged) / cfg.sims_per_cell;
    report.cells[cell_idx] = cell;
  });
  return report;
}

}  // namespace powergame
