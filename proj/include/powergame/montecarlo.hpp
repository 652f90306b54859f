#pragma once

#include <cstdint>
#include <vector>

#include "powergame/core.hpp"
#include "powergame/dynamics.hpp"
#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

// Survival-likelihood protocol: repeated best-response chains under the
// survival utility (zero when dangerous, otherwise the sum of contributions
// from the closed neighborhood).

struct SurvivalConfig {
  long long iterations_per_run = 10000;  // paper-scale 1e7; desk default 1e4
  int runs = 200;                        // paper-scale 10000
  std::uint64_t seed = 0;
  std::uint64_t best_response_budget = 100000;
  int threads = 1;

  void validate() const {
    if (iterations_per_run <= 0 || runs <= 0) throw Error("survival config must be positive");
    if (best_response_budget == 0) throw Error("best-response budget must be positive");
  }
};

struct SurvivalReport {
  std::vector<double> likelihood;      // non-dangerous final states / runs
  std::vector<long long> safe_tally, precarious_tally, dangerous_tally;
  std::vector<bool> survives;          // likelihood > 0.5
  int runs = 0;
  long long iterations_per_run = 0;
  std::uint64_t seed = 0;
};

// Row for i maximizing the survival utility with all other rows fixed:
// exact enumeration when the composition count fits the budget, otherwise a
// threshold-purchase reduction (flip costs for safe enemies, rescue costs for
// dangerous friends, own safety first). Keeps the current row when nothing
// improves on it.
std::vector<int> best_response(const SignedNetwork& net, const PowerVector& p,
                               const StrategyMatrix& X, int i, Rng& rng,
                               std::uint64_t budget = 100000,
                               UtilityVariant variant = UtilityVariant::Survival);

SurvivalReport estimate_survival(const SignedNetwork& net, const PowerVector& p,
                                 const SurvivalConfig& cfg);

// Random-network sweep over the (q_e, q_n) grid: per cell, run the dynamics
// on freshly generated networks with random initial powers in {1..K} and
// record mean final power, Gini, and frustration.
struct SweepConfig {
  int n = 30;
  std::vector<double> qe_grid, qn_grid;
  int K = 20;
  int sims_per_cell = 20;
  long long steps_per_sim = 5000;
  std::uint64_t seed = 0;
  int threads = 1;
  int frustration_exact_limit = 20;
};

struct SweepCell {
  double q_e = 0.0, q_n = 0.0;
  double avg_power = 0.0;      // mean over sims of the mean final power
  double gini = 0.0;           // mean over sims of the final-power Gini
  double frustration = 0.0;    // mean frustration index of the drawn networks
  double frustration_normalized = 0.0;
  double converged_fraction = 0.0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepCell> cells;  // qe-major order

  const SweepCell& at(std::size_t qe_idx, std::size_t qn_idx) const {
    return cells[qe_idx * config.qn_grid.size() + qn_idx];
  }
};

SweepReport sweep(const SweepConfig& cfg);

}  // namespace powergame
