#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "powergame/core.hpp"
#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

// Co-evolution of powers and strategies: at each step a uniformly random
// country updates its power by its current state (safe +1 capped at K,
// precarious unchanged, dangerous -1 floored at 0) and then redraws its row
// from the rule-filtered feasible set.

struct DynamicsConfig {
  long long max_steps = 100000;
  int stall_window = 0;               // 0 -> 3n no-op activations
  std::uint64_t enum_budget = 100000; // exact enumeration limit for the row set
  bool allocate_max_feasible = true;  // row sum fixed at min(p_i, sum of caps)
  int rejection_tries = 64;           // per-step tries before the constructive fallback
};

struct DynamicState {
  long long t = 0;
  PowerVector p;  // cap holds K
  StrategyMatrix X;
};

// Per-entry upper bounds for the updating row: allocations toward countries
// already contributing utility are frozen at their previous value, others may
// grow by the margin |s_j| needed to flip them; every other row is fixed.
struct FeasibleRowSet {
  std::vector<int> nodes;  // closed neighborhood of the updating country
  std::vector<int> caps;   // aligned upper bounds
  int node = -1;
  int row_sum = 0;         // required allocation this step

  bool contains(const StrategyMatrix& X_prev, const std::vector<int>& row) const;
};

FeasibleRowSet feasible_set_omega(const SignedNetwork& net, const DynamicState& state, int i,
                                  bool allocate_max = true);

// New power of country i under the state-keyed rule (uses scores of X, i.e.
// the matrix before this step's strategy update).
PowerVector update_power(const SignedNetwork& net, const DynamicState& state, int i);

// Which rule supplied the sampled row.
enum class ChosenSet : std::uint8_t {
  ImproveUtility,  // some feasible row strictly increases utility
  ReduceConflict,  // utility kept, attacks only retracted, friend support frozen
  KeepUtility,     // utility kept
  AnyFeasible,     // every feasible row loses utility; free redraw
};

struct SampleResult {
  std::vector<int> row;  // full-length replacement for row i
  ChosenSet set = ChosenSet::KeepUtility;
  bool exact = true;       // row set handled by exact enumeration
  bool singleton = false;  // the feasible set admits only the unchanged row
};

// Draws row i uniformly from the first non-empty of the rule sets. Requires
// state.p to be already updated for this step.
SampleResult sample_update(const SignedNetwork& net, const DynamicState& state, int i, Rng& rng,
                           const DynamicsConfig& config = {});

// Aid(X): support between distinct friendly countries.
long long aid(const SignedNetwork& net, const StrategyMatrix& X);

struct StepRecord {
  long long t = 0;
  int node = -1;
  CountryState state_before = CountryState::Precarious;  // of the activated node
  ChosenSet set = ChosenSet::KeepUtility;
  bool changed = false;  // (p, X) changed at this step
  int u_before = 0, u_after = 0;
  long long aid_after = 0;
  int np_excl_before = 0, np_excl_after = 0;  // precarious counts over V \ {node}
  int np_total_after = 0;
  std::string states_after;
  std::vector<int> powers_after;
};

struct Trajectory {
  std::string initial_states;
  std::vector<int> initial_powers;
  long long initial_aid = 0;
  std::vector<StepRecord> records;
  // (t, X) snapshots every checkpoint_interval steps when requested
  std::vector<std::pair<long long, StrategyMatrix>> checkpoints;
};

struct ConvergenceReport {
  bool converged = false;
  bool certified = false;  // every node's feasible set verified to be a singleton
  long long steps = 0;
  std::vector<int> final_powers;
  std::vector<int> effective_powers;  // row sums of the final matrix
  std::string final_states;
  int dangerous_count = 0;
};

struct DynamicsRun {
  Trajectory trajectory;
  ConvergenceReport report;
  StrategyMatrix final_X;
};

// Runs the process until no activation can change (p, X) or max_steps is
// reached. X0 must satisfy row sums equal to p0 and the dynamic cap K.
DynamicsRun run_dynamics(const SignedNetwork& net, const PowerVector& p0,
                         const StrategyMatrix& X0, int K, Rng& rng,
                         const DynamicsConfig& config = {}, int checkpoint_interval = 0);

// One CSV row per step: t, node, states string, powers, utilities, Aid.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

const char* chosen_set_name(ChosenSet set);

}  // namespace powergame
