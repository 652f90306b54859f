#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "powergame/rng.hpp"

namespace powergame {

// Weak compositions: ways to write `total` as an ordered sum over cells,
// optionally bounded per cell. Shared by the brute-force verifiers, the
// dynamics samplers, and the inference discretizer.

// C(total + cells - 1, cells - 1), saturating at uint64 max.
std::uint64_t composition_count(int total, int cells);

// Number of compositions with per-cell upper bounds, saturating.
std::uint64_t bounded_composition_count(const std::vector<int>& caps, int total);

// Visits every composition with per-cell bounds. `fn` receives the cell
// vector; it must not retain the reference. Returns the number visited.
template <class Fn>
std::uint64_t for_each_bounded_composition(const std::vector<int>& caps, int total, Fn&& fn) {
  const int k = static_cast<int>(caps.size());
  if (k == 0) {
    if (total == 0) {
      std::vector<int> empty;
      fn(empty);
      return 1;
    }
    return 0;
  }
  std::vector<long long> suffix(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + caps[i];
  if (total < 0 || total > suffix[0]) return 0;

  std::vector<int> cell(k, 0);
  std::uint64_t visited = 0;
  // Iterative descent: cell[0..k-2] chosen, last cell forced.
  auto rec = [&](auto&& self, int idx, int rem) -> void {
    if (idx == k - 1) {
      cell[idx] = rem;
      ++visited;
      fn(cell);
      return;
    }
    const int lo = static_cast<int>(std::max<long long>(0, rem - suffix[idx + 1]));
    const int hi = std::min(caps[idx], rem);
    for (int v = lo; v <= hi; ++v) {
      cell[idx] = v;
      self(self, idx + 1, rem - v);
    }
  };
  rec(rec, 0, total);
  return visited;
}

// DP table of composition counts in double precision, used for near-uniform
// sampling when enumeration is too large. cnt[i][r] = ways to fill cells
// i..k-1 with sum r.
class CompositionSampler {
 public:
  CompositionSampler(std::vector<int> caps, int total);

  bool empty() const { return total_count_ <= 0.0; }
  double total_count() const { return total_count_; }

  // Draws one composition (uniform up to floating-point rounding).
  std::vector<int> sample(Rng& rng) const;

 private:
  std::vector<int> caps_;
  int total_;
  std::vector<std::vector<double>> cnt_;
  double total_count_ = 0.0;
};

}  // namespace powergame
