// solve.hpp — discounted value iteration with greedy policy extraction,
// exact finite-horizon backward induction (the test oracle), and seeded
// Monte-Carlo rollouts.

#pragma once

#include <cstdint>
#include <vector>

#include "ldlmdp/extended.hpp"

namespace ldlmdp {

struct SolverConfig {
  double gamma = 0.95;     // in (0,1): infinite-horizon discounting
  double epsilon = 1e-8;   // value-accuracy target
  size_t max_iters = 1000000;
};

struct Solution {
  std::vector<double> value;    // per reachable extended state
  std::vector<size_t> policy;   // greedy, ties to the lowest action index
  size_t iterations = 0;
  double residual = 0.0;        // max-norm change of the final sweep
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterates V_{k+1}(s) = max_a [R(s,a) + gamma * sum_s' P(s,a,s') V_k(s')]
// from V_0 = 0 until the residual drops under eps*(1-gamma)/(2*gamma),
// which bounds |V - V*| by eps.
Solution value_iterate(const ExtendedMdp& mdp, const SolverConfig& cfg);

// Exact optimal value for `horizon` remaining steps, by backward induction.
std::vector<double> brute_force_value(const ExtendedMdp& mdp, size_t horizon);

struct SimStats {
  double mean = 0.0;
  double stdev = 0.0;          // sample standard deviation of returns
  size_t episodes = 0;
  // Fraction of episodes whose trace satisfied formula i (at stop in
  // complete mode, at the horizon in per-prefix mode).
  std::vector<double> formula_frequency;
};

// Seeded rollouts following the policy; returns are discounted by
// spec.discount unless gamma_override >= 0.  Reproducible per seed.
SimStats simulate(const ExtendedMdp& mdp, const std::vector<size_t>& policy,
                  size_t episodes, size_t horizon, uint64_t seed,
                  double gamma_override = -1.0);

}  // namespace ldlmdp
