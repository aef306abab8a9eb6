#include "ldlmdp/solve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ldlmdp {
namespace {

double q_value(const ExtendedMdp& mdp, const std::vector<double>& v,
               uint32_t s, size_t a, double gamma) {
  double q = mdp.reward[s][a];
  for (auto [t, p] : mdp.trans[s][a]) q += gamma * p * v[t];
  return q;
}

}  // namespace

Solution value_iterate(const ExtendedMdp& mdp, const SolverConfig& cfg) {
  if (cfg.gamma <= 0.0 || cfg.gamma >= 1.0)
    throw std::invalid_argument("value iteration needs gamma in (0,1)");
  if (cfg.epsilon <= 0.0)
    throw std::invalid_argument("epsilon must be positive");
  const size_t n = mdp.states.size();
  const double threshold = cfg.epsilon * (1.0 - cfg.gamma) / (2.0 * cfg.gamma);

  Solution sol;
  sol.value.assign(n, 0.0);
  std::vector<double> next(n, 0.0);
  for (sol.iterations = 1; sol.iterations <= cfg.max_iters; ++sol.iterations) {
    double residual = 0.0;
    for (uint32_t s = 0; s < n; ++s) {
      bool any = false;
      double best = 0.0;
      for (size_t a = 0; a < mdp.num_actions(); ++a) {
        if (mdp.trans[s][a].empty()) continue;
        double q = q_value(mdp, sol.value, s, a, cfg.gamma);
        if (!any || q > best) best = q;
        any = true;
      }
      next[s] = any ? best : 0.0;
      residual = std::max(residual, std::abs(next[s] - sol.value[s]));
    }
    std::swap(sol.value, next);
    sol.residual = residual;
    if (residual < threshold) break;
  }
  if (sol.residual >= threshold)
    throw NoConvergence("value iteration: residual " +
                        std::to_string(sol.residual) + " after " +
                        std::to_string(cfg.max_iters) + " sweeps");

  sol.policy.assign(n, 0);
  for (uint32_t s = 0; s < n; ++s) {
    bool any = false;
    double best = 0.0;
    size_t best_a = 0;
    for (size_t a = 0; a < mdp.num_actions(); ++a) {
      if (mdp.trans[s][a].empty()) continue;
      double q = q_value(mdp, sol.value, s, a, cfg.gamma);
      if (!any || q > best) {
        best = q;
        best_a = a;
      }
      any = true;
    }
    sol.policy[s] = best_a;
  }
  return sol;
}

std::vector<double> brute_force_value(const ExtendedMdp& mdp, size_t horizon) {
  const size_t n = mdp.states.size();
  const double gamma = mdp.spec.discount;
  std::vector<double> v(n, 0.0), next(n, 0.0);
  for (size_t h = 0; h < horizon; ++h) {
    for (uint32_t s = 0; s < n; ++s) {
      bool any = false;
      double best = 0.0;
      for (size_t a = 0; a < mdp.num_actions(); ++a) {
        if (mdp.trans[s][a].empty()) continue;
        double q = q_value(mdp, v, s, a, gamma);
        if (!any || q > best) best = q;
        any = true;
      }
      next[s] = any ? best : 0.0;
    }
    std::swap(v, next);
  }
  return v;
}

SimStats simulate(const ExtendedMdp& mdp, const std::vector<size_t>& policy,
                  size_t episodes, size_t horizon, uint64_t seed,
                  double gamma_override) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const double gamma =
      gamma_override >= 0.0 ? gamma_override : mdp.spec.discount;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  SimStats stats;
  stats.episodes = episodes;
  stats.formula_frequency.assign(mdp.dfas.size(), 0.0);
  std::vector<double> returns;
  returns.reserve(episodes);

  for (size_t e = 0; e < episodes; ++e) {
    uint32_t s = mdp.initial;
    double ret = 0.0, disc = 1.0;
    std::vector<bool> satisfied(mdp.dfas.size(), false);
    bool recorded = false;
    for (size_t step = 0; step < horizon; ++step) {
      size_t a = policy.at(s);
      if (mdp.trans[s][a].empty()) break;
      ret += disc * mdp.reward[s][a];
      // Component acceptance after this step, for the satisfaction report.
      const ExtState& cur = mdp.states[s];
      if (!cur.terminal) {
        Letter letter = mdp.tracking_letter(cur.t, a);
        bool stopping = mdp.spec.mode == RewardMode::CompleteTrace &&
                        mdp.domain.actions[a] == kStopAction;
        for (size_t i = 0; i < mdp.dfas.size(); ++i)
          satisfied[i] = mdp.dfas[i].is_final[mdp.dfas[i].next[cur.q[i]][letter]];
        if (stopping) recorded = true;
      }
      // Sample the successor.
      double u = unif(rng), acc = 0.0;
      uint32_t nxt = mdp.trans[s][a].back().first;
      for (auto [t, p] : mdp.trans[s][a]) {
        acc += p;
        if (u < acc) {
          nxt = t;
          break;
        }
      }
      s = nxt;
      disc *= gamma;
      if (mdp.states[s].terminal && recorded) break;
    }
    for (size_t i = 0; i < mdp.dfas.size(); ++i)
      if (satisfied[i]) stats.formula_frequency[i] += 1.0;
    returns.push_back(ret);
  }

  double sum = 0.0;
  for (double r : returns) sum += r;
  stats.mean = episodes ? sum / static_cast<double>(episodes) : 0.0;
  double ss = 0.0;
  for (double r : returns) ss += (r - stats.mean) * (r - stats.mean);
  stats.stdev = episodes > 1 ? std::sqrt(ss / static_cast<double>(episodes - 1)) : 0.0;
  for (double& f : stats.formula_frequency)
    f /= episodes ? static_cast<double>(episodes) : 1.0;
  return stats;
}

}  // namespace ldlmdp
