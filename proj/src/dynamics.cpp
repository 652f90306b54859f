#include "powergame/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "powergame/compositions.hpp"
#include "powergame/row_eval.hpp"

namespace powergame {

namespace {

struct RuleBounds {
  std::vector<int> nodes;
  std::vector<int> caps;
  int max_sum = 0;    // min(p_i, sum of caps)
  bool exact_sum = true;
};

RuleBounds rule_bounds(const SignedNetwork& net, const StrategyMatrix& X,
                       const std::vector<int>& scores, int power_now, int i, bool allocate_max) {
  RuleBounds rb;
  rb.nodes = net.closed_neighborhood(i);
  rb.caps.resize(rb.nodes.size());
  long long cap_sum = 0;
  for (std::size_t c = 0; c < rb.nodes.size(); ++c) {
    const int j = rb.nodes[c];
    const int old = X.at(i, j);
    rb.caps[c] = contributes(net, scores, j, i) ? old : old + std::abs(scores[j]);
    cap_sum += rb.caps[c];
  }
  rb.max_sum = static_cast<int>(std::min<long long>(power_now, cap_sum));
  rb.exact_sum = allocate_max;
  return rb;
}

bool row_in_omega2(const RowContext& ctx, const std::vector<int>& cell, int u, int u_old) {
  if (u < u_old) return false;
  for (int c = 0; c < ctx.cells(); ++c) {
    if (c == ctx.self_cell) continue;
    if (ctx.counts_to_self[c]) {
      if (cell[c] > ctx.old_row[c]) return false;  // attacks may only retract
    } else {
      if (cell[c] != ctx.old_row[c]) return false;  // friend support frozen
    }
  }
  return true;
}

struct EnumeratedChoice {
  ChosenSet set = ChosenSet::KeepUtility;
  std::vector<int> cell;
  bool singleton = false;
};

EnumeratedChoice choose_by_enumeration(const RowContext& ctx, const RuleBounds& rb, int u_old,
                                       Rng& rng) {
  const int lo_sum = rb.exact_sum ? rb.max_sum : 0;
  std::uint64_t n1 = 0, n2 = 0, n3 = 0, nall = 0;
  for (int s = lo_sum; s <= rb.max_sum; ++s) {
    for_each_row(ctx, rb.caps, s, [&](const std::vector<int>& cell, int u, int) {
      ++nall;
      if (u > u_old) ++n1;
      if (row_in_omega2(ctx, cell, u, u_old)) ++n2;
      if (u == u_old) ++n3;
    });
  }
  EnumeratedChoice out;
  std::uint64_t size = nall;
  int which = 4;
  if (n1 > 0) {
    out.set = ChosenSet::ImproveUtility;
    size = n1;
    which = 1;
  } else if (n2 > 0) {
    out.set = ChosenSet::ReduceConflict;
    size = n2;
    which = 2;
  } else if (n3 > 0) {
    out.set = ChosenSet::KeepUtility;
    size = n3;
    which = 3;
  } else {
    out.set = ChosenSet::AnyFeasible;
  }
  if (size == 0) throw Error("internal error: empty feasible row set");
  const std::uint64_t pick = rng.below(size);
  std::uint64_t seen = 0;
  bool done = false;
  for (int s = lo_sum; s <= rb.max_sum && !done; ++s) {
    for_each_row(ctx, rb.caps, s, [&](const std::vector<int>& cell, int u, int) {
      if (done) return;
      bool member = false;
      switch (which) {
        case 1: member = u > u_old; break;
        case 2: member = row_in_omega2(ctx, cell, u, u_old); break;
        case 3: member = u == u_old; break;
        default: member = true; break;
      }
      if (!member) return;
      if (seen++ == pick) {
        out.cell = cell;
        done = true;
      }
    });
  }
  out.singleton = size == 1 && out.cell == ctx.old_row;
  return out;
}

// Scalable fallback used when the row set is too large to enumerate: rule
// membership stays exact for the drawn row, uniformity is approximate.
EnumeratedChoice choose_by_sampling(const RowContext& ctx, const RuleBounds& rb, int u_old,
                                    Rng& rng, const DynamicsConfig& config) {
  EnumeratedChoice out;

  std::vector<int> sums;
  std::vector<double> weights;
  double weight_total = 0.0;
  const int lo_sum = rb.exact_sum ? rb.max_sum : 0;
  for (int s = lo_sum; s <= rb.max_sum; ++s) {
    const double w = static_cast<double>(bounded_composition_count(rb.caps, s));
    if (w <= 0.0) continue;
    sums.push_back(s);
    weights.push_back(w);
    weight_total += w;
  }
  if (sums.empty()) throw Error("internal error: empty feasible row set");
  auto draw_sum = [&]() {
    double r = rng.real01() * weight_total;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      r -= weights[k];
      if (r < 0.0) return sums[k];
    }
    return sums.back();
  };
  auto uniform_row = [&](int s) {
    CompositionSampler sampler(rb.caps, s);
    return sampler.sample(rng);
  };

  int best_u = -1;
  for (int s : sums) best_u = std::max(best_u, max_utility_row(ctx, rb.caps, s).utility);

  if (best_u > u_old) {
    out.set = ChosenSet::ImproveUtility;
    for (int tries = 0; tries < config.rejection_tries; ++tries) {
      auto cell = uniform_row(draw_sum());
      if (ctx.utility_of_cells(cell) > u_old) {
        out.cell = std::move(cell);
        return out;
      }
    }
    for (int s : sums) {
      auto res = max_utility_row(ctx, rb.caps, s, &rng);
      if (res.utility > u_old) {
        out.cell = std::move(res.cell_values);
        return out;
      }
    }
    throw Error("internal error: lost track of an improving row");
  }

  // Omega_2: keep every live contribution, retract attacks, freeze friends.
  {
    std::vector<int> lo(ctx.cells()), hi(ctx.cells());
    int fixed_bits = 0;
    long long friend_old = 0;
    for (int c = 0; c < ctx.cells(); ++c) {
      if (c == ctx.self_cell) {
        lo[c] = 0;
        hi[c] = rb.caps[c];
      } else if (ctx.counts_to_self[c]) {
        hi[c] = ctx.old_row[c];
        // keep a live bit above its threshold; a dead bit's range stays free
        lo[c] = ctx.old_row[c] >= ctx.threshold[c] ? std::max(0, ctx.threshold[c]) : 0;
        if (lo[c] >= ctx.threshold[c]) ++fixed_bits;
      } else {
        lo[c] = hi[c] = ctx.old_row[c];
        friend_old += ctx.old_row[c];
        if (ctx.old_row[c] >= ctx.threshold[c]) ++fixed_bits;
      }
    }
    long long lo_total = 0;
    std::vector<int> shifted(ctx.cells());
    for (int c = 0; c < ctx.cells(); ++c) {
      lo_total += lo[c];
      shifted[c] = hi[c] - lo[c];
    }
    std::vector<int> feasible;
    std::vector<double> fw;
    double fw_total = 0.0;
    for (int s : sums) {
      const int rem = s - static_cast<int>(lo_total);
      if (rem < 0) continue;
      const double w = static_cast<double>(bounded_composition_count(shifted, rem));
      if (w <= 0.0) continue;
      const int es = s - static_cast<int>(friend_old);
      if (ctx.utility_of(fixed_bits, es) < u_old) continue;
      feasible.push_back(s);
      fw.push_back(w);
      fw_total += w;
    }
    if (!feasible.empty()) {
      out.set = ChosenSet::ReduceConflict;
      double r = rng.real01() * fw_total;
      int s = feasible.back();
      for (std::size_t k = 0; k < feasible.size(); ++k) {
        r -= fw[k];
        if (r < 0.0) {
          s = feasible[k];
          break;
        }
      }
      CompositionSampler sampler(shifted, s - static_cast<int>(lo_total));
      auto cell = sampler.sample(rng);
      for (int c = 0; c < ctx.cells(); ++c) cell[c] += lo[c];
      out.cell = std::move(cell);
      return out;
    }
    // A few uniform draws can still catch utility-compensated retractions.
    for (int tries = 0; tries < config.rejection_tries / 4; ++tries) {
      auto cell = uniform_row(draw_sum());
      if (row_in_omega2(ctx, cell, ctx.utility_of_cells(cell), u_old)) {
        out.set = ChosenSet::ReduceConflict;
        out.cell = std::move(cell);
        return out;
      }
    }
  }

  if (best_u == u_old) {
    out.set = ChosenSet::KeepUtility;
    for (int tries = 0; tries < config.rejection_tries; ++tries) {
      auto cell = uniform_row(draw_sum());
      if (ctx.utility_of_cells(cell) == u_old) {
        out.cell = std::move(cell);
        return out;
      }
    }
    for (int s : sums) {
      auto res = max_utility_row(ctx, rb.caps, s, &rng);
      if (res.utility == u_old) {
        out.cell = std::move(res.cell_values);
        return out;
      }
    }
  }

  out.set = ChosenSet::AnyFeasible;
  out.cell = uniform_row(draw_sum());
  return out;
}

struct SampleInternal {
  SampleResult result;
  int u_old = 0;
};

SampleInternal sample_row(const SignedNetwork& net, const StrategyMatrix& X,
                          const std::vector<int>& scores, int power_now, int i, Rng& rng,
                          const DynamicsConfig& config) {
  RowContext ctx = RowContext::build(net, X, scores, i, UtilityVariant::Dynamic);
  RuleBounds rb = rule_bounds(net, X, scores, power_now, i, config.allocate_max_feasible);
  const int u_old = ctx.utility_of_cells(ctx.old_row);

  std::uint64_t total = 0;
  const int lo_sum = rb.exact_sum ? rb.max_sum : 0;
  for (int s = lo_sum; s <= rb.max_sum && total <= config.enum_budget; ++s) {
    const std::uint64_t c = bounded_composition_count(rb.caps, s);
    total = (c > config.enum_budget) ? config.enum_budget + 1 : total + c;
  }

  SampleInternal si;
  si.u_old = u_old;
  EnumeratedChoice choice;
  if (total <= config.enum_budget) {
    choice = choose_by_enumeration(ctx, rb, u_old, rng);
    si.result.exact = true;
  } else {
    choice = choose_by_sampling(ctx, rb, u_old, rng, config);
    si.result.exact = false;
  }
  si.result.set = choice.set;
  si.result.singleton = choice.singleton;
  si.result.row = ctx.expand(choice.cell);
  return si;
}

}  // namespace

bool FeasibleRowSet::contains(const StrategyMatrix& X_prev, const std::vector<int>& row) const {
  if (static_cast<int>(row.size()) != X_prev.n()) return false;
  long long sum = 0;
  std::size_t c = 0;
  for (int j = 0; j < X_prev.n(); ++j) {
    if (c < nodes.size() && nodes[c] == j) {
      if (row[j] < 0 || row[j] > caps[c]) return false;
      sum += row[j];
      ++c;
    } else if (row[j] != 0) {
      return false;
    }
  }
  return sum == row_sum;
}

FeasibleRowSet feasible_set_omega(const SignedNetwork& net, const DynamicState& state, int i,
                                  bool allocate_max) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range");
  const auto scores = support_scores(net, state.X);
  RuleBounds rb = rule_bounds(net, state.X, scores, state.p.p[i], i, allocate_max);
  FeasibleRowSet fs;
  fs.nodes = std::move(rb.nodes);
  fs.caps = std::move(rb.caps);
  fs.node = i;
  fs.row_sum = rb.max_sum;
  return fs;
}

PowerVector update_power(const SignedNetwork& net, const DynamicState& state, int i) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range");
  if (!state.p.cap) throw Error("dynamic power update requires a cap K");
  const int K = *state.p.cap;
  PowerVector next = state.p;
  const int s = support_score(net, state.X, i);
  if (s > 0) {
    next.p[i] = std::min(K, state.p.p[i] + 1);
  } else if (s < 0) {
    next.p[i] = std::max(0, state.p.p[i] - 1);
  }
  return next;
}

SampleResult sample_update(const SignedNetwork& net, const DynamicState& state, int i, Rng& rng,
                           const DynamicsConfig& config) {
  if (i < 0 || i >= net.n()) throw Error("node index out of range");
  const auto scores = support_scores(net, state.X);
  return sample_row(net, state.X, scores, state.p.p[i], i, rng, config).result;
}

long long aid(const SignedNetwork& net, const StrategyMatrix& X) {
  long long total = 0;
  for (int j = 0; j < net.n(); ++j) {
    for (int i : net.friends_of(j)) {
      if (i != j) total += X.at(i, j);
    }
  }
  return total;
}

DynamicsRun run_dynamics(const SignedNetwork& net, const PowerVector& p0,
                         const StrategyMatrix& X0, int K, Rng& rng,
                         const DynamicsConfig& config, int checkpoint_interval) {
  const int n = net.n();
  if (n == 0) throw Error("dynamics require at least one country");
  if (p0.n() != n) throw Error("power vector size does not match network");
  if (K <= 0) throw Error("power cap K must be positive");
  for (int i = 0; i < n; ++i) {
    if (p0.p[i] < 0 || p0.p[i] > K) throw Error("initial power outside [0, K]");
    if (X0.row_sum(i) != p0.p[i]) throw Error("initial matrix row sums must equal p0");
  }
  if (!in_dynamic_s(net, X0, K)) throw Error("initial matrix is not dynamically feasible");

  DynamicsRun run;
  DynamicState state;
  state.p = p0;
  state.p.cap = K;
  state.X = X0;

  std::vector<int> scores = support_scores(net, state.X);
  long long cur_aid = aid(net, state.X);

  run.trajectory.initial_states = states_string(net, state.X);
  run.trajectory.initial_powers = state.p.p;
  run.trajectory.initial_aid = cur_aid;

  const int stall = config.stall_window > 0 ? config.stall_window : 3 * n;
  std::set<int> certified_fixed, seen_fixed;
  long long noop_streak = 0;

  for (long long t = 1; t <= config.max_steps; ++t) {
    const int i = static_cast<int>(rng.index(n));

    StepRecord rec;
    rec.t = t;
    rec.node = i;
    rec.state_before = state_of(scores[i]);
    rec.u_before = utility_from_scores(net, scores, i, UtilityVariant::Dynamic);
    rec.np_excl_before = precarious_count(scores, i);

    const int old_power = state.p.p[i];
    if (scores[i] > 0) {
      state.p.p[i] = std::min(K, old_power + 1);
    } else if (scores[i] < 0) {
      state.p.p[i] = std::max(0, old_power - 1);
    }
    const bool power_changed = state.p.p[i] != old_power;

    SampleInternal si = sample_row(net, state.X, scores, state.p.p[i], i, rng, config);
    bool row_changed = false;
    for (int j = 0; j < n; ++j) {
      const int delta = si.result.row[j] - state.X.at(i, j);
      if (delta == 0) continue;
      row_changed = true;
      if (j == i) {
        scores[i] += delta;
      } else if (net.is_enemy(i, j)) {
        scores[j] -= delta;
        scores[i] += delta;
      } else {
        scores[j] += delta;
        cur_aid += delta;
      }
      state.X.at(i, j) = si.result.row[j];
    }

    rec.set = si.result.set;
    rec.changed = power_changed || row_changed;
    rec.u_after = utility_from_scores(net, scores, i, UtilityVariant::Dynamic);
    rec.aid_after = cur_aid;
    rec.np_excl_after = precarious_count(scores, i);
    rec.np_total_after = precarious_count(scores);
    rec.powers_after = state.p.p;
    rec.states_after.reserve(n);
    for (int j = 0; j < n; ++j) rec.states_after.push_back(state_char(state_of(scores[j])));
    run.trajectory.records.push_back(std::move(rec));
    state.t = t;

    if (checkpoint_interval > 0 && t % checkpoint_interval == 0) {
      run.trajectory.checkpoints.emplace_back(t, state.X);
    }

    if (run.trajectory.records.back().changed) {
      certified_fixed.clear();
      seen_fixed.clear();
      noop_streak = 0;
    } else {
      ++noop_streak;
      seen_fixed.insert(i);
      if (!power_changed && si.result.singleton) certified_fixed.insert(i);
      const bool certified = static_cast<int>(certified_fixed.size()) == n;
      const bool stalled =
          noop_streak >= stall && static_cast<int>(seen_fixed.size()) == n;
      if (certified || stalled) {
        run.report.converged = true;
        run.report.certified = certified;
        run.report.steps = t;
        break;
      }
    }
    run.report.steps = t;
  }

  run.report.final_powers = state.p.p;
  run.report.effective_powers.resize(n);
  for (int i = 0; i < n; ++i) run.report.effective_powers[i] = static_cast<int>(state.X.row_sum(i));
  run.report.final_states = states_string(net, state.X);
  for (char c : run.report.final_states) run.report.dangerous_count += c == 'D' ? 1 : 0;
  run.final_X = state.X;
  return run;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t n = traj.initial_powers.size();
  out << "t,node,state_before,set,changed,u_before,u_after,aid,states";
  for (std::size_t j = 0; j < n; ++j) out << ",p" << j;
  out << "\n";
  out << "0,,,,,,," << traj.initial_aid << "," << traj.initial_states;
  for (std::size_t j = 0; j < n; ++j) out << "," << traj.initial_powers[j];
  out << "\n";
  for (const auto& r : traj.records) {
    out << r.t << "," << r.node << "," << state_char(r.state_before) << ","
        << chosen_set_name(r.set) << "," << (r.changed ? 1 : 0) << "," << r.u_before << ","
        << r.u_after << "," << r.aid_after << "," << r.states_after;
    for (std::size_t j = 0; j < n; ++j) out << "," << r.powers_after[j];
    out << "\n";
  }
}

const char* chosen_set_name(ChosenSet set) {
  switch (set) {
    case ChosenSet::ImproveUtility: return "improve";
    case ChosenSet::ReduceConflict: return "retract";
    case ChosenSet::KeepUtility: return "keep";
    default: return "any";
  }
}

}  // namespace powergame
