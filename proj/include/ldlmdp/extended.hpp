// extended.hpp — the equivalent Markovian model.
//
// The extended state couples one tracking-automaton state per reward
// formula with the domain state; only states reachable from the lifted
// initial state are materialized.  The projection tau drops the automaton
// components and the injection sigma pairs the automaton initial states
// with a domain state, so the equivalence conditions are structural.
//
// Per-prefix mode: each action reads the current interpretation into every
// automaton and pays sum(r_i : component i accepting after the step).
//
// Complete-trace mode: non-stop actions advance the automata with no
// reward; stop reads the final interpretation, pays sum(r_i : component i
// accepting), and enters an absorbing zero-reward terminal.  The tracking
// automata are the minimal last-free DFAs, whose step-then-accept check
// coincides with the last-augmented transition on the word read so far.

#pragma once

#include <functional>

#include "ldlmdp/automata.hpp"
#include "ldlmdp/domain.hpp"

namespace ldlmdp {

struct BuildOptions {
  bool action_props = false;  // extend the alphabet with one prop per action
  size_t state_cap = kDefaultStateCap;
};

struct ExtState {
  std::vector<uint32_t> q;  // one DFA state per reward formula
  uint32_t t = 0;           // domain state index
  bool terminal = false;    // absorbing post-stop state (complete mode)
  uint32_t shaped_bits = 0; // first-trigger bookkeeping (shaped MDPs only)

  auto operator<=>(const ExtState&) const = default;
};

struct ExtendedMdp {
  DomainModel domain;
  RewardSpec spec;
  std::vector<Dfa> dfas;       // minimal, last-free, shared alphabet
  Alphabet track_alphabet;     // domain props (+ action props)
  bool action_props = false;

  std::vector<ExtState> states;
  uint32_t initial = 0;
  // trans[state][action] -> (successor, probability); empty = inapplicable
  std::vector<std::vector<std::vector<std::pair<uint32_t, double>>>> trans;
  std::vector<std::vector<double>> reward;

  size_t num_actions() const { return domain.actions.size(); }
  uint32_t state_index(const ExtState& s) const;
  std::string state_key(uint32_t s) const;  // "(q1,...,qm|t-bitset)"

  // The letter the tracking automata read when action a is taken in domain
  // state t.
  Letter tracking_letter(uint32_t t, size_t action) const;
};

ExtendedMdp build_extended_mdp(const DomainModel& domain, const RewardSpec& spec,
                               const BuildOptions& opts = {});

// Oracle-side reward of one prefix: sum of r_i over formulas the prefix
// satisfies, evaluated by the trace semantics (no automata involved).
double reward_of_prefix(const RewardSpec& spec, const Alphabet& alpha,
                        const Trace& prefix);

// One step of domain history.
struct HistoryStep {
  size_t action;
  uint32_t state;  // domain state reached after the action
};

// Replays a domain history through the tracking automata and returns the
// extended state the policy should consult.
uint32_t run_history(const ExtendedMdp& mdp, uint32_t t0,
                     const std::vector<HistoryStep>& history);

// Wraps an extended-MDP policy (state index -> action) into a
// history-dependent domain policy.
std::function<size_t(uint32_t, const std::vector<HistoryStep>&)>
lift_policy(const ExtendedMdp& mdp, const std::vector<size_t>& policy);

}  // namespace ldlmdp
