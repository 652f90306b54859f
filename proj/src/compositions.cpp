#include "powergame/compositions.hpp"

#include <algorithm>

#include "powergame/types.hpp"

namespace powergame {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}
}  // namespace

std::uint64_t composition_count(int total, int cells) {
  if (cells <= 0) return total == 0 ? 1 : 0;
  // C(total + cells - 1, cells - 1) with overflow clamping.
  const int k = cells - 1;
  const int m = total + cells - 1;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result *= (m - k + i); result /= i;  -- keep exact by dividing first.
    const std::uint64_t num = static_cast<std::uint64_t>(m - k + i);
    if (result > kSaturated / num) return kSaturated;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t bounded_composition_count(const std::vector<int>& caps, int total) {
  if (total < 0) return 0;
  std::vector<std::uint64_t> dp(total + 1, 0);
  dp[0] = 1;
  for (int cap : caps) {
    std::vector<std::uint64_t> next(total + 1, 0);
    // prefix-sum sliding window, saturating
    std::uint64_t window = 0;
    for (int r = 0; r <= total; ++r) {
      window = sat_add(window, dp[r]);
      if (r - cap - 1 >= 0 && window != kSaturated) window -= dp[r - cap - 1];
      next[r] = window;
    }
    dp.swap(next);
  }
  return dp[total];
}

CompositionSampler::CompositionSampler(std::vector<int> caps, int total)
    : caps_(std::move(caps)), total_(total) {
  const int k = static_cast<int>(caps_.size());
  cnt_.assign(k + 1, std::vector<double>(total_ + 1, 0.0));
  cnt_[k][0] = 1.0;
  for (int i = k - 1; i >= 0; --i) {
    for (int r = 0; r <= total_; ++r) {
      double acc = 0.0;
      const int hi = std::min(caps_[i], r);
      for (int v = 0; v <= hi; ++v) acc += cnt_[i + 1][r - v];
      cnt_[i][r] = acc;
    }
  }
  total_count_ = cnt_[0][total_];
}

std::vector<int> CompositionSampler::sample(Rng& rng) const {
  if (empty()) throw Error("cannot sample from an empty composition set");
  const int k = static_cast<int>(caps_.size());
  std::vector<int> out(k, 0);
  int rem = total_;
  for (int i = 0; i < k; ++i) {
    const double r = rng.real01() * cnt_[i][rem];
    double acc = 0.0;
    const int hi = std::min(caps_[i], rem);
    int chosen = hi;
    for (int v = 0; v <= hi; ++v) {
      acc += cnt_[i + 1][rem - v];
      if (r < acc) {
        chosen = v;
        break;
      }
    }
    out[i] = chosen;
    rem -= chosen;
  }
  return out;
}

}  // namespace powergame
