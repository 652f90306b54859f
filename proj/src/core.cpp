#include "powergame/core.hpp"

#include <string>

namespace powergame {

int support_score(const SignedNetwork& net, const StrategyMatrix& X, int i) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range: " + std::to_string(i));
  if (X.n() != net.n()) throw Error("matrix size does not match network");
  int s = 0;
  for (int j : net.enemies_of(i)) s += X.at(i, j) - X.at(j, i);
  for (int j : net.friends_of(i)) s += X.at(j, i);
  return s;
}

std::vector<int> support_scores(const SignedNetwork& net, const StrategyMatrix& X) {
  std::vector<int> s(net.n());
  for (int i = 0; i < net.n(); ++i) s[i] = support_score(net, X, i);
  return s;
}

std::vector<CountryState> states(const SignedNetwork& net, const StrategyMatrix& X) {
  std::vector<CountryState> st(net.n());
  for (int i = 0; i < net.n(); ++i) st[i] = state_of(support_score(net, X, i));
  return st;
}

std::string states_string(const SignedNetwork& net, const StrategyMatrix& X) {
  std::string s;
  s.reserve(net.n());
  for (CountryState c : states(net, X)) s.push_back(state_char(c));
  return s;
}

bool contributes(const SignedNetwork& net, const std::vector<int>& scores, int j, int i) {
  if (net.is_friend(i, j)) return scores[j] >= 0;
  if (net.is_enemy(i, j)) return scores[j] <= 0;
  return false;
}

int utility_from_scores(const SignedNetwork& net, const std::vector<int>& scores, int i,
                        UtilityVariant variant) {
  const int n = net.n();
  switch (variant) {
    case UtilityVariant::Static: {
      int u = scores[i] >= 0 ? n : 0;
      for (int j : net.friends_of(i)) u += scores[j] >= 0 ? 1 : 0;
      for (int j : net.enemies_of(i)) u += scores[j] <= 0 ? 1 : 0;
      return u;
    }
    case UtilityVariant::Dynamic: {
      int u = scores[i] >= 0 ? n : 0;
      for (int j = 0; j < n; ++j) u += contributes(net, scores, j, i) ? 1 : 0;
      return u;
    }
    case UtilityVariant::Survival: {
      if (scores[i] < 0) return 0;
      int u = 0;
      for (int j : net.friends_of(i)) u += contributes(net, scores, j, i) ? 1 : 0;
      for (int j : net.enemies_of(i)) u += contributes(net, scores, j, i) ? 1 : 0;
      return u;
    }
  }
  return 0;
}

int utility(const SignedNetwork& net, const StrategyMatrix& X, int i, UtilityVariant variant) {
  return utility_from_scores(net, support_scores(net, X), i, variant);
}

int precarious_count(const std::vector<int>& scores, int excluded) {
  int c = 0;
  for (std::size_t j = 0; j < scores.size(); ++j) {
    if (static_cast<int>(j) != excluded && scores[j] == 0) ++c;
  }
  return c;
}

namespace {

int preference_indicator_sum(const SignedNetwork& net, const std::vector<int>& scores, int i) {
  int v = 0;
  for (int j : net.enemies_of(i)) v += scores[j] <= 0 ? 1 : 0;
  for (int j : net.friends_of(i)) v += scores[j] >= 0 ? 1 : 0;
  return v;
}

bool geq(const SignedNetwork& net, const std::vector<int>& sx, const std::vector<int>& sy, int i) {
  if (sx[i] >= 0 && sy[i] < 0) return true;
  const bool same_category = (sx[i] >= 0 && sy[i] >= 0) || (sx[i] < 0 && sy[i] < 0);
  if (!same_category) return false;
  return preference_indicator_sum(net, sx, i) >= preference_indicator_sum(net, sy, i);
}

}  // namespace

Preference prefers(const SignedNetwork& net, const StrategyMatrix& X, const StrategyMatrix& Y,
                   int i) {
  const auto sx = support_scores(net, X);
  const auto sy = support_scores(net, Y);
  if (geq(net, sx, sy, i)) return Preference::Preferred;
  if (geq(net, sy, sx, i)) return Preference::NotPreferred;
  return Preference::Incomparable;
}

}  // namespace powergame
