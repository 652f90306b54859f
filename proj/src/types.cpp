#include "powergame/types.hpp"

#include <algorithm>

namespace powergame {

SignedNetwork SignedNetwork::from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
  if (n < 0) throw Error("node count must be non-negative");
  SignedNetwork net;
  net.n_ = n;
  net.rel_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : edges) {
    const int i = e[0], j = e[1], sign = e[2];
    if (i < 0 || i >= n || j < 0 || j >= n) throw Error("edge endpoint out of range");
    if (i == j) throw Error("self relations are not allowed");
    if (sign != 1 && sign != -1) throw Error("edge sign must be +1 or -1");
    auto& a = net.rel_[static_cast<std::size_t>(i) * n + j];
    auto& b = net.rel_[static_cast<std::size_t>(j) * n + i];
    if ((a != 0 && a != sign) || (b != 0 && b != sign)) {
      throw Error("conflicting signs for edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    a = static_cast<std::int8_t>(sign);
    b = static_cast<std::int8_t>(sign);
  }
  net.build_lists();
  return net;
}

SignedNetwork SignedNetwork::fully_antagonistic(int n) {
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, -1});
  return from_edges(n, edges);
}

SignedNetwork SignedNetwork::fully_friendly(int n) {
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
  return from_edges(n, edges);
}

void SignedNetwork::build_lists() {
  friends_.assign(n_, {});
  enemies_.assign(n_, {});
  closed_.assign(n_, {});
  for (int i = 0; i < n_; ++i) {
    friends_[i].push_back(i);
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      switch (relation(i, j)) {
        case Relation::Friend: friends_[i].push_back(j); break;
        case Relation::Enemy: enemies_[i].push_back(j); break;
        case Relation::None: break;
      }
    }
    std::sort(friends_[i].begin(), friends_[i].end());
    closed_[i] = friends_[i];
    closed_[i].insert(closed_[i].end(), enemies_[i].begin(), enemies_[i].end());
    std::sort(closed_[i].begin(), closed_[i].end());
  }
}

bool SignedNetwork::is_fully_antagonistic() const {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(enemies_[i].size()) != n_ - 1) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> SignedNetwork::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const Relation r = relation(i, j);
      if (r != Relation::None) out.push_back({i, j, r == Relation::Friend ? 1 : -1});
    }
  return out;
}

bool respects_support(const SignedNetwork& net, const StrategyMatrix& X) {
  if (X.n() != net.n()) return false;
  for (int i = 0; i < net.n(); ++i)
    for (int j = 0; j < net.n(); ++j) {
      if (X.at(i, j) < 0) return false;
      if (X.at(i, j) > 0 && !net.is_neighbor(i, j)) return false;
    }
  return true;
}

bool in_static_omega(const SignedNetwork& net, const StrategyMatrix& X, const PowerVector& p) {
  if (!respects_support(net, X) || p.n() != X.n()) return false;
  for (int i = 0; i < X.n(); ++i)
    if (X.row_sum(i) != p.p[i]) return false;
  return true;
}

bool in_dynamic_s(const SignedNetwork& net, const StrategyMatrix& X, int K) {
  if (!respects_support(net, X)) return false;
  for (int i = 0; i < X.n(); ++i)
    if (X.row_sum(i) > K) return false;
  return true;
}

}  // namespace powergame
