#pragma once

#include "powergame/core.hpp"
#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

// Fully antagonistic worlds: every pair of countries is mutually hostile.

// True iff at most n-1 countries are safe under X. Throws if the network is
// not fully antagonistic.
bool max_safe_check(const SignedNetwork& net, const PowerVector& p, const StrategyMatrix& X);

// Equilibrium for a world with one country stronger than everyone else
// combined: the dominant country mirrors every opponent's full power while
// keeping the surplus on itself; the others all attack it. Exactly the
// dominant country ends up safe. Throws when no dominant country exists.
StrategyMatrix dominant_equilibrium(const SignedNetwork& net, const PowerVector& p);

// Equilibrium with every country precarious, which exists whenever no
// country outweighs the rest combined (and, for odd power totals, at least
// three countries hold positive power). Even totals yield a symmetric
// zero-diagonal matrix; odd totals get a cyclic +1 patch over three nodes and
// are not symmetric.
StrategyMatrix all_precarious_equilibrium(const SignedNetwork& net, const PowerVector& p,
                                          Rng& rng);

}  // namespace powergame
