// domain.hpp — probabilistic planning domain and temporal reward
// specification, with the JSON file formats used by the CLI.
//
// Domain file:
//   { "props": ["a","b"],
//     "states": [["a"], []],            // optional; inferred when absent
//     "actions": ["go","stay"],
//     "initial": ["a"],
//     "transitions": [ {"from": ["a"], "action": "go", "to": [], "p": 0.5},
//                      ... ] }
//
// Reward spec file:
//   { "discount": 0.95,
//     "mode": "prefix" | "complete",
//     "rewards": [ {"formula": "F g", "value": 1.0}, ... ] }

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldlmdp/formula.hpp"
#include "ldlmdp/trace.hpp"

namespace ldlmdp {

inline constexpr const char* kStopAction = "stop";

enum class RewardMode { PerPrefix, CompleteTrace };

struct DomainModel {
  Alphabet props;
  std::vector<Letter> states;        // explicit interpretations, unique
  std::vector<std::string> actions;  // ordered; complete mode includes stop
  uint32_t initial = 0;
  // trans[state][action] = list of (successor state index, probability);
  // an empty list marks the action inapplicable in that state.
  std::vector<std::vector<std::vector<std::pair<uint32_t, double>>>> trans;

  size_t action_index(const std::string& name) const;
  std::optional<uint32_t> state_index(Letter interp) const;

  // Mass checks, stop-action shape in complete mode, uniqueness.
  void validate(RewardMode mode) const;

  // Appends the reserved stop action (point-mass self-loops) if missing.
  void ensure_stop_action();
};

struct RewardPair {
  FormulaId formula;
  std::string formula_text;
  double value = 0.0;
};

struct RewardSpec {
  std::vector<RewardPair> pairs;  // order keys automaton labels
  double discount = 0.95;
  RewardMode mode = RewardMode::PerPrefix;
};

DomainModel load_domain(const std::string& path);
DomainModel domain_from_json_text(const std::string& text);
RewardSpec load_reward_spec(const std::string& path);
RewardSpec reward_spec_from_json_text(const std::string& text);

}  // namespace ldlmdp
