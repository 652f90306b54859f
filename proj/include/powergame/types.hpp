#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace powergame {

// Library-wide error type. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class CountryState : std::uint8_t { Safe, Precarious, Dangerous };

inline char state_char(CountryState s) {
  switch (s) {
    case CountryState::Safe: return 'S';
    case CountryState::Precarious: return 'P';
    default: return 'D';
  }
}

inline CountryState state_of(long long score) {
  if (score > 0) return CountryState::Safe;
  if (score == 0) return CountryState::Precarious;
  return CountryState::Dangerous;
}

enum class Relation : std::int8_t { None = 0, Friend = 1, Enemy = -1 };

// Undirected, unweighted signed graph over n countries. Friend sets always
// contain the node itself; friend/enemy sets are disjoint and symmetric.
// Completeness is not required.
class SignedNetwork {
 public:
  SignedNetwork() = default;

  // edges: (i, j, sign) with sign +1 (friend) or -1 (enemy), i != j.
  static SignedNetwork from_edges(int n, const std::vector<std::array<int, 3>>& edges);
  static SignedNetwork fully_antagonistic(int n);
  static SignedNetwork fully_friendly(int n);

  int n() const { return n_; }

  Relation relation(int i, int j) const {
    if (i == j) return Relation::Friend;
    return static_cast<Relation>(rel_[static_cast<std::size_t>(i) * n_ + j]);
  }
  bool is_friend(int i, int j) const { return relation(i, j) == Relation::Friend; }
  bool is_enemy(int i, int j) const { return relation(i, j) == Relation::Enemy; }
  bool is_neighbor(int i, int j) const { return i == j || relation(i, j) != Relation::None; }

  // Sorted; includes i itself.
  const std::vector<int>& friends_of(int i) const { return friends_[i]; }
  // Sorted.
  const std::vector<int>& enemies_of(int i) const { return enemies_[i]; }
  // Sorted union of friends (incl. self) and enemies: the nodes i may
  // allocate power to.
  const std::vector<int>& closed_neighborhood(int i) const { return closed_[i]; }

  bool is_fully_antagonistic() const;

  // (i, j, sign) with i < j, sorted lexicographically.
  std::vector<std::array<int, 3>> edges() const;
  std::size_t edge_count() const { return edges().size(); }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw Error("node index out of range: " + std::to_string(i));
  }
  void build_lists();

  int n_ = 0;
  std::vector<std::int8_t> rel_;  // n x n, symmetric, zero diagonal
  std::vector<std::vector<int>> friends_, enemies_, closed_;
};

// Per-country non-negative integer power; `cap` is the universal bound K used
// by the dynamic model.
struct PowerVector {
  std::vector<int> p;
  std::optional<int> cap;

  int n() const { return static_cast<int>(p.size()); }
  long long total() const {
    long long t = 0;
    for (int v : p) t += v;
    return t;
  }
  void validate() const {
    if (cap && *cap <= 0) throw Error("power cap must be positive");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0) throw Error("power must be non-negative (node " + std::to_string(i) + ")");
      if (cap && p[i] > *cap) throw Error("power exceeds cap at node " + std::to_string(i));
    }
  }
};

// Dense n x n matrix of non-negative integer allocations.
class StrategyMatrix {
 public:
  StrategyMatrix() = default;
  explicit StrategyMatrix(int n) : n_(n), x_(static_cast<std::size_t>(n) * n, 0) {}

  static StrategyMatrix diagonal(const std::vector<int>& p) {
    StrategyMatrix m(static_cast<int>(p.size()));
    for (int i = 0; i < m.n_; ++i) m.at(i, i) = p[i];
    return m;
  }

  int n() const { return n_; }
  int& at(int i, int j) { return x_[static_cast<std::size_t>(i) * n_ + j]; }
  int at(int i, int j) const { return x_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<int> row(int i) const {
    return std::vector<int>(x_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                            x_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  }
  void set_row(int i, const std::vector<int>& r) {
    for (int j = 0; j < n_; ++j) at(i, j) = r[j];
  }

  long long row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
  }
  long long total() const {
    long long s = 0;
    for (int v : x_) s += v;
    return s;
  }

  bool operator==(const StrategyMatrix& o) const { return n_ == o.n_ && x_ == o.x_; }
  bool operator!=(const StrategyMatrix& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<int> x_;
};

// x_ij = 0 whenever j is not in i's closed neighborhood, entries >= 0.
bool respects_support(const SignedNetwork& net, const StrategyMatrix& X);
// Membership in the static feasible set: support + row sums equal to p.
bool in_static_omega(const SignedNetwork& net, const StrategyMatrix& X, const PowerVector& p);
// Membership in the dynamic feasible set S: support + row sums <= K.
bool in_dynamic_s(const SignedNetwork& net, const StrategyMatrix& X, int K);

}  // namespace powergame
