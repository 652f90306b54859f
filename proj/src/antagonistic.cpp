#include "powergame/antagonistic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace powergame {

namespace {

void require_fully_antagonistic(const SignedNetwork& net) {
  if (!net.is_fully_antagonistic()) throw Error("network is not fully antagonistic");
}

// Symmetric zero-diagonal matrix with the given (ascending) row sums, all
// entries non-negative integers. Requires an even total and q_i <= sum of the
// others for every i.
void build_sorted(const std::vector<long long>& q, std::vector<std::vector<long long>>& x) {
  const int N = static_cast<int>(q.size());
  const long long total = std::accumulate(q.begin(), q.end(), 0LL);

  if (N == 3) {
    x[0][1] = x[1][0] = (q[0] + q[1] - q[2]) / 2;
    x[0][2] = x[2][0] = (q[0] + q[2] - q[1]) / 2;
    x[1][2] = x[2][1] = (q[1] + q[2] - q[0]) / 2;
    return;
  }

  const long long rest = total - q[N - 1];  // everyone but the strongest
  if (q[N - 1] + 2 * q[N - 3] >= rest) {
    // Strongest absorbs the small countries; the two runners-up split the
    // remainder among themselves and the strongest.
    for (int i = 0; i <= N - 4; ++i) x[i][N - 1] = x[N - 1][i] = q[i];
    const long long a = (q[N - 1] + 2 * q[N - 3] - rest) / 2;
    x[N - 3][N - 2] = x[N - 2][N - 3] = (rest - q[N - 1]) / 2;
    x[N - 3][N - 1] = x[N - 1][N - 3] = a;
    x[N - 2][N - 1] = x[N - 1][N - 2] = a + q[N - 2] - q[N - 3];
    return;
  }

  // Auxiliary system on N-1 countries; the strongest one pairs off against
  // the reduction residuals p_i - p*_i.
  const long long r = q[N - 1] - (q[N - 2] - q[N - 3]);
  int kappa = 0;
  long long prefix = q[0];
  while (prefix < r) {
    ++kappa;
    prefix += q[kappa];
  }
  std::vector<long long> aux(N - 1);
  for (int i = 0; i < kappa; ++i) aux[i] = 0;
  aux[kappa] = prefix - r;
  for (int i = kappa + 1; i <= N - 3; ++i) aux[i] = q[i];
  aux[N - 2] = q[N - 3];

  std::vector<std::vector<long long>> sub(N - 1, std::vector<long long>(N - 1, 0));
  build_sorted(aux, sub);
  for (int i = 0; i < N - 1; ++i)
    for (int j = 0; j < N - 1; ++j) x[i][j] = sub[i][j];
  for (int i = 0; i < N - 1; ++i) {
    x[N - 1][i] = x[i][N - 1] = q[i] - aux[i];
  }
  x[N - 1][N - 1] = 0;
}

StrategyMatrix build_even(const SignedNetwork& net, const std::vector<int>& powers) {
  const int n = net.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return powers[a] < powers[b]; });
  std::vector<long long> q(n);
  for (int s = 0; s < n; ++s) q[s] = powers[order[s]];

  std::vector<std::vector<long long>> sorted(n, std::vector<long long>(n, 0));
  build_sorted(q, sorted);

  StrategyMatrix X(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const long long v = sorted[a][b];
      if (v < 0) throw Error("internal error: negative entry in precarious construction");
      X.at(order[a], order[b]) = static_cast<int>(v);
    }
  return X;
}

}  // namespace

bool max_safe_check(const SignedNetwork& net, const PowerVector& p, const StrategyMatrix& X) {
  require_fully_antagonistic(net);
  (void)p;
  int safe = 0;
  for (CountryState s : states(net, X)) safe += s == CountryState::Safe ? 1 : 0;
  return safe <= net.n() - 1;
}

StrategyMatrix dominant_equilibrium(const SignedNetwork& net, const PowerVector& p) {
  require_fully_antagonistic(net);
  if (p.n() != net.n()) throw Error("power vector size does not match network");
  p.validate();
  const long long total = p.total();
  int dominant = -1;
  for (int i = 0; i < net.n(); ++i) {
    if (p.p[i] > total - p.p[i]) {
      dominant = i;
      break;  // at most one country can exceed the sum of the rest
    }
  }
  if (dominant < 0) throw Error("no dominant country: no p_i exceeds the sum of the others");

  StrategyMatrix X(net.n());
  long long mirrored = 0;
  for (int j = 0; j < net.n(); ++j) {
    if (j == dominant) continue;
    X.at(dominant, j) = p.p[j];
    mirrored += p.p[j];
    X.at(j, dominant) = p.p[j];
  }
  X.at(dominant, dominant) = static_cast<int>(p.p[dominant] - mirrored);
  return X;
}

StrategyMatrix all_precarious_equilibrium(const SignedNetwork& net, const PowerVector& p,
                                          Rng& rng) {
  (void)rng;  // construction is fully determined; kept for interface parity
  require_fully_antagonistic(net);
  if (p.n() != net.n()) throw Error("power vector size does not match network");
  if (net.n() < 3) throw Error("all-precarious construction requires n >= 3");
  p.validate();
  const long long total = p.total();
  for (int i = 0; i < net.n(); ++i) {
    if (p.p[i] > total - p.p[i]) {
      throw Error("precondition violated: p_" + std::to_string(i) +
                  " exceeds the total power of all other countries");
    }
  }

  if (total % 2 == 0) return build_even(net, p.p);

  // Odd total: temporarily take one unit from the three strongest
  // positive-power countries, solve the even system, then hand the units
  // back along a 3-cycle. The patched matrix stays feasible and keeps every
  // score at zero, but is no longer symmetric.
  std::vector<int> positive;
  for (int i = 0; i < net.n(); ++i)
    if (p.p[i] > 0) positive.push_back(i);
  if (positive.size() < 3) {
    throw Error("precondition violated: odd power total requires at least three countries "
                "with positive power");
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [&](int a, int b) { return p.p[a] > p.p[b]; });
  std::vector<int> trio(positive.begin(), positive.begin() + 3);
  std::sort(trio.begin(), trio.end());

  std::vector<int> reduced = p.p;
  for (int i : trio) --reduced[i];
  StrategyMatrix X = build_even(net, reduced);
  X.at(trio[0], trio[1]) += 1;
  X.at(trio[1], trio[2]) += 1;
  X.at(trio[2], trio[0]) += 1;
  return X;
}

}  // namespace powergame
