#pragma once

#include <cstdint>

#include "powergame/rng.hpp"
#include "powergame/types.hpp"

namespace powergame {

struct GenParams {
  int n = 0;
  double q_e = 0.0;  // probability an unordered pair is connected
  double q_n = 0.0;  // probability a drawn edge is negative
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 0) throw Error("node count must be non-negative");
    if (q_e < 0.0 || q_e > 1.0) throw Error("q_e must lie in [0, 1]");
    if (q_n < 0.0 || q_n > 1.0) throw Error("q_n must lie in [0, 1]");
  }
};

// Random signed network: each unordered pair gets an edge independently with
// probability q_e, and each edge is negative with probability q_n.
SignedNetwork generate(const GenParams& params);
SignedNetwork generate(const GenParams& params, Rng& rng);

}  // namespace powergame
