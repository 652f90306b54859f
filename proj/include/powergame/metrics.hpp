#pragma once

#include <cstdint>
#include <vector>

#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

struct FrustrationOptions {
  int exact_limit = 20;   // exhaustive bipartition search up to this many nodes
  int restarts = 50;      // local-search restarts beyond the exact limit
  std::uint64_t seed = 0; // seeds the heuristic restarts
};

struct FrustrationResult {
  long long value = 0;
  long long edge_count = 0;
  bool exact = true;
  double normalized() const { return edge_count == 0 ? 0.0 : double(value) / double(edge_count); }
};

// Frustration index: minimum over node bipartitions of the number of
// sign-violating edges (positive edges across the cut plus negative edges
// within a part). Exact by enumeration up to exact_limit nodes, otherwise a
// greedy-flip local search over `restarts` random starts (an upper bound).
FrustrationResult frustration(const SignedNetwork& net, const FrustrationOptions& opts = {});

// True iff the signed graph is structurally balanced (frustration zero),
// decided by parity union-find. Independent of the frustration search.
bool is_balanced(const SignedNetwork& net);

// Population Gini coefficient of a power profile:
// sum_ij |p_i - p_j| / (2 n^2 mu), with the 0/0 -> 0 convention.
double gini(const std::vector<int>& powers);
double gini(const std::vector<double>& powers);

}  // namespace powergame
