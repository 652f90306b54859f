#include "powergame/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace powergame {

namespace {

struct EdgeList {
  std::vector<std::array<int, 3>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, sign)

  explicit EdgeList(const SignedNetwork& net) : adj(net.n()) {
    edges = net.edges();
    for (const auto& e : edges) {
      adj[e[0]].emplace_back(e[1], e[2]);
      adj[e[1]].emplace_back(e[0], e[2]);
    }
  }
};

long long cut_cost(const EdgeList& el, const std::vector<char>& side) {
  long long cost = 0;
  for (const auto& e : el.edges) {
    const bool same = side[e[0]] == side[e[1]];
    if (e[2] > 0 ? !same : same) ++cost;
  }
  return cost;
}

long long exact_frustration(const SignedNetwork& net, const EdgeList& el) {
  const int n = net.n();
  if (n == 0) return 0;
  std::vector<char> side(n, 0);
  long long cur = cut_cost(el, side);
  long long best = cur;
  // Gray-code walk over the 2^(n-1) bipartitions with node 0 pinned; each
  // step flips one node and adjusts the cost by its incident edges.
  const std::uint64_t limit = n == 1 ? 1 : (1ULL << (n - 1));
  for (std::uint64_t g = 1; g < limit; ++g) {
    const int flip = 1 + __builtin_ctzll(g);  // node to toggle (never node 0)
    long long delta = 0;
    for (const auto& [nb, sign] : el.adj[flip]) {
      const bool same = side[flip] == side[nb];
      const bool viol_before = sign > 0 ? !same : same;
      delta += viol_before ? -1 : 1;
    }
    side[flip] ^= 1;
    cur += delta;
    best = std::min(best, cur);
  }
  return best;
}

long long heuristic_frustration(const SignedNetwork& net, const EdgeList& el,
                                const FrustrationOptions& opts) {
  const int n = net.n();
  Rng rng(opts.seed);
  long long best = std::numeric_limits<long long>::max();
  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    std::vector<char> side(n);
    for (int i = 0; i < n; ++i) side[i] = rng.bernoulli(0.5) ? 1 : 0;
    long long cur = cut_cost(el, side);
    bool improved = true;
    while (improved) {
      improved = false;
      int best_node = -1;
      long long best_delta = 0;
      for (int v = 0; v < n; ++v) {
        long long delta = 0;
        for (const auto& [nb, sign] : el.adj[v]) {
          const bool same = side[v] == side[nb];
          const bool viol = sign > 0 ? !same : same;
          delta += viol ? -1 : 1;
        }
        if (delta < best_delta) {
          best_delta = delta;
          best_node = v;
        }
      }
      if (best_node >= 0) {
        side[best_node] ^= 1;
        cur += best_delta;
        improved = true;
      }
    }
    best = std::min(best, cur);
  }
  return best;
}

}  // namespace

FrustrationResult frustration(const SignedNetwork& net, const FrustrationOptions& opts) {
  EdgeList el(net);
  FrustrationResult res;
  res.edge_count = static_cast<long long>(el.edges.size());
  if (net.n() <= opts.exact_limit) {
    res.exact = true;
    res.value = exact_frustration(net, el);
  } else {
    res.exact = false;
    res.value = heuristic_frustration(net, el, opts);
  }
  return res;
}

bool is_balanced(const SignedNetwork& net) {
  // Union-find with parity: joining along a positive edge keeps parity,
  // a negative edge flips it; a contradiction means an unbalanced cycle.
  const int n = net.n();
  std::vector<int> parent(n), rank_(n, 0), parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    int p = 0;
    int root = v;
    while (parent[root] != root) {
      p ^= parity[root];
      root = parent[root];
    }
    // path compression with parity update
    int cur = v, carry = p;
    while (parent[cur] != root) {
      const int next = parent[cur];
      const int next_carry = carry ^ parity[cur];
      parent[cur] = root;
      parity[cur] = carry;
      cur = next;
      carry = next_carry;
    }
    return std::pair<int, int>(root, p);
  };
  for (const auto& e : net.edges()) {
    const int want = e[2] > 0 ? 0 : 1;
    auto [ra, pa] = find(e[0]);
    auto [rb, pb] = find(e[1]);
    if (ra == rb) {
      if ((pa ^ pb) != want) return false;
      continue;
    }
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ want;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
  }
  return true;
}

namespace {
template <class T>
double gini_impl(const std::vector<T>& powers) {
  const std::size_t n = powers.size();
  if (n == 0) return 0.0;
  double mu = 0.0;
  for (T v : powers) mu += static_cast<double>(v);
  if (mu <= 0.0) return 0.0;
  mu /= static_cast<double>(n);
  std::vector<double> sorted(powers.begin(), powers.end());
  std::sort(sorted.begin(), sorted.end());
  // sum_ij |p_i - p_j| = 2 * sum_k (2k - n + 1) p_(k), zero-based ranks
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += (2.0 * static_cast<double>(k) - static_cast<double>(n) + 1.0) * sorted[k];
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n) * mu);
}
}  // namespace

double gini(const std::vector<int>& powers) { return gini_impl(powers); }
double gini(const std::vector<double>& powers) { return gini_impl(powers); }

}  // namespace powergame
