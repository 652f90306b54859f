#pragma once

#include <cstdint>
#include <vector>

#include "powergame/core.hpp"
#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

// No-support-no-dangerous matrix: symmetric, with support only on the
// diagonal and enemy pairs. Under such a matrix every country is safe
// (positive self-allocation) or precarious, never dangerous.
bool is_nsnd(const SignedNetwork& net, const StrategyMatrix& X);

// Number of i's enemies that are precarious under an NSND matrix (zero
// diagonal entry).
int precarious_enemy_count(const SignedNetwork& net, const StrategyMatrix& X, int i);

// Best-response reallocation of row i against an NSND matrix, keeping the
// result NSND by mirroring the changes onto i's enemies. Three cases keyed on
// p_i versus the enemies' t_j = x_jj + x_ji. An empty enemy set degenerates
// to full self-allocation.
StrategyMatrix preferable_adjustment(const SignedNetwork& net, const StrategyMatrix& X,
                                     const PowerVector& p, int i, Rng& rng);

// V(X): number of zero diagonal entries. Strictly increases along the
// equilibrium-seeking procedures, which bounds the iteration count by n.
int potential(const StrategyMatrix& X);

struct EquilibriumRun {
  StrategyMatrix X;
  int iterations = 0;
  std::vector<int> potential_trace;  // V(X(0)), V(X(1)), ...
};

// Builds a pure-strategy Nash equilibrium from X(0) = diag(p) by repeated
// preferable adjustments (procedure 1: pairs of mutually hostile countries
// with positive self-allocations; procedure 2: zero-diagonal countries whose
// adjustment strictly gains a precarious enemy).
EquilibriumRun find_equilibrium(const SignedNetwork& net, const PowerVector& p, Rng& rng);

struct VerifyResult {
  enum class Status { Equilibrium, Deviation, BudgetExceeded };
  Status status = Status::Equilibrium;
  int node = -1;                  // deviating node, or node whose enumeration blew the budget
  std::vector<int> improving_row; // full-length row achieving higher utility
  int utility_before = 0;
  int utility_after = 0;
  std::uint64_t rows_enumerated = 0;

  bool is_equilibrium() const { return status == Status::Equilibrium; }
};

inline constexpr std::uint64_t kDefaultVerifyBudget = 2'000'000;

// Brute-force check of the Nash property: enumerates every unilateral row
// change (weak compositions of p_i over i's closed neighborhood) and looks
// for one that strictly increases the chosen utility. The per-node
// composition count must stay within `budget`.
VerifyResult verify_equilibrium(const SignedNetwork& net, const PowerVector& p,
                                const StrategyMatrix& X, UtilityVariant variant,
                                std::uint64_t budget = kDefaultVerifyBudget);

// True when X allocates nothing between distinct friendly countries.
bool no_friendly_transfers(const SignedNetwork& net, const StrategyMatrix& X);

}  // namespace powergame
