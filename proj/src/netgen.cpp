#include "powergame/netgen.hpp"

namespace powergame {

SignedNetwork generate(const GenParams& params, Rng& rng) {
  params.validate();
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      if (!rng.bernoulli(params.q_e)) continue;
      edges.push_back({i, j, rng.bernoulli(params.q_n) ? -1 : 1});
    }
  }
  return SignedNetwork::from_edges(params.n, edges);
}

SignedNetwork generate(const GenParams& params) {
  Rng rng(params.seed);
  return generate(params, rng);
}

}  // namespace powergame
