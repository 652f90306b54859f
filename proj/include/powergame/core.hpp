#pragma once

#include <vector>

#include "powergame/types.hpp"

namespace powergame {

// s_i(X): power i spends attacking enemies, plus incoming support from
// friends (including i's own self-allocation), minus incoming attacks.
int support_score(const SignedNetwork& net, const StrategyMatrix& X, int i);
std::vector<int> support_scores(const SignedNetwork& net, const StrategyMatrix& X);

std::vector<CountryState> states(const SignedNetwork& net, const StrategyMatrix& X);
std::string states_string(const SignedNetwork& net, const StrategyMatrix& X);

enum class UtilityVariant { Static, Dynamic, Survival };

// u_{ji}(X): 1 if j is a friend of i (including j == i) that is not
// dangerous, or an enemy of i that is not safe.
bool contributes(const SignedNetwork& net, const std::vector<int>& scores, int j, int i);

int utility(const SignedNetwork& net, const StrategyMatrix& X, int i, UtilityVariant variant);
int utility_from_scores(const SignedNetwork& net, const std::vector<int>& scores, int i,
                        UtilityVariant variant);

// Number of precarious countries, optionally excluding one node.
int precarious_count(const std::vector<int>& scores, int excluded = -1);

enum class Preference { Preferred, NotPreferred, Incomparable };

// Whether country i prefers X to Y. Preferred iff X >=_i Y; NotPreferred iff
// only Y >=_i X; Incomparable if neither direction holds.
Preference prefers(const SignedNetwork& net, const StrategyMatrix& X, const StrategyMatrix& Y,
                   int i);

}  // namespace powergame
