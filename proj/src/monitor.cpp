#include "ldlmdp/monitor.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace ldlmdp {

const char* color_name(MonitorColor c) {
  switch (c) {
    case MonitorColor::True: return "true";
    case MonitorColor::False: return "false";
    case MonitorColor::WillTrue: return "will_true";
    case MonitorColor::WillFalse: return "will_false";
    case MonitorColor::WillTempTrue: return "will_temp_true";
    case MonitorColor::TempTrue: return "temp_true";
    case MonitorColor::TempFalse: return "temp_false";
  }
  return "?";
}

const char* color_tint(MonitorColor c) {
  switch (c) {
    case MonitorColor::True: return "palegreen";
    case MonitorColor::False: return "lightcoral";
    case MonitorColor::WillTrue: return "aquamarine";
    case MonitorColor::WillFalse: return "lightpink";
    case MonitorColor::WillTempTrue: return "khaki";
    case MonitorColor::TempTrue: return "lightyellow";
    case MonitorColor::TempFalse: return "lightgray";
  }
  return "white";
}

namespace {

// States admitting an infinite path that never enters `avoid`; computed by
// iteratively deleting states with no surviving successor.
std::vector<bool> can_avoid_forever(const Dfa& dfa,
                                    const std::vector<bool>& avoid) {
  std::vector<bool> alive(dfa.num_states);
  for (uint32_t s = 0; s < dfa.num_states; ++s) alive[s] = !avoid[s];
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t s = 0; s < dfa.num_states; ++s) {
      if (!alive[s]) continue;
      bool has_succ = false;
      for (uint32_t d : dfa.next[s])
        if (alive[d]) has_succ = true;
      if (!has_succ) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  return alive;
}

}  // namespace

std::vector<MonitorColor> color_states(const Dfa& dfa) {
  const size_t n = dfa.num_states;
  std::vector<bool> settled_true(n, false), settled_false(n, false);
  for (uint32_t s = 0; s < n; ++s) {
    std::vector<uint32_t> r = reach(dfa, s);
    bool all_final = true, any_final = false;
    for (uint32_t q : r) {
      all_final = all_final && dfa.is_final[q];
      any_final = any_final || dfa.is_final[q];
    }
    settled_true[s] = dfa.is_final[s] && all_final;
    settled_false[s] = !dfa.is_final[s] && !any_final;
  }

  std::vector<bool> not_final(n);
  for (uint32_t s = 0; s < n; ++s) not_final[s] = !dfa.is_final[s];
  // A run can keep the verdict open only while looping outside the settled
  // regions (resp. outside acceptance, for the will_temp_true rule).
  std::vector<bool> dodge_true = can_avoid_forever(dfa, settled_true);
  std::vector<bool> dodge_false = can_avoid_forever(dfa, settled_false);
  std::vector<bool> dodge_final([&] {
    std::vector<bool> finals(n);
    for (uint32_t s = 0; s < n; ++s) finals[s] = dfa.is_final[s];
    return can_avoid_forever(dfa, finals);
  }());

  std::vector<MonitorColor> colors(n);
  for (uint32_t s = 0; s < n; ++s) {
    if (settled_true[s]) colors[s] = MonitorColor::True;
    else if (settled_false[s]) colors[s] = MonitorColor::False;
    else if (!dodge_true[s]) colors[s] = MonitorColor::WillTrue;
    else if (!dodge_false[s]) colors[s] = MonitorColor::WillFalse;
    else if (!dfa.is_final[s] && !dodge_final[s]) colors[s] = MonitorColor::WillTempTrue;
    else if (dfa.is_final[s]) colors[s] = MonitorColor::TempTrue;
    else colors[s] = MonitorColor::TempFalse;
  }
  return colors;
}

std::string coloring_to_json(const Dfa& dfa,
                             const std::vector<MonitorColor>& colors) {
  nlohmann::json j = nlohmann::json::object();
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    j[std::to_string(s)] = color_name(colors[s]);
  return j.dump(2);
}

ShapedMdp shape_rewards(const ExtendedMdp& base, ShapeMode mode) {
  const bool complete = base.spec.mode == RewardMode::CompleteTrace;
  if (mode == ShapeMode::NegativeTransform && !complete)
    throw std::invalid_argument(
        "negative transform requires complete-trace mode");
  if (base.dfas.size() > 31)
    throw std::invalid_argument("too many formulas for first-trigger bits");

  ShapedMdp out;
  out.mdp = base;
  for (const Dfa& d : base.dfas) out.colorings.push_back(color_states(d));
  if (base.spec.discount < 1.0)
    out.warnings.push_back(
        "discount < 1: earlier shaped rewards weigh more, the optimal "
        "policy may change");
  out.warnings.push_back(
      "first-trigger bits enlarge the extended state; minimality guarantees "
      "do not apply to the shaped model");

  auto triggered = [&](size_t i, uint32_t q) {
    MonitorColor c = out.colorings[i][q];
    if (mode == ShapeMode::EarlyPositive)
      return c == MonitorColor::True || c == MonitorColor::WillTrue ||
             c == MonitorColor::WillTempTrue;
    return c == MonitorColor::False || c == MonitorColor::WillFalse;
  };

  ExtendedMdp& m = out.mdp;
  m.states.clear();
  m.trans.clear();
  m.reward.clear();

  const size_t n_actions = base.num_actions();
  std::map<ExtState, uint32_t> index;
  auto intern = [&](ExtState s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(m.states.size());
    index.emplace(s, id);
    m.states.push_back(std::move(s));
    m.trans.emplace_back(n_actions);
    m.reward.emplace_back(n_actions, 0.0);
    return id;
  };

  ExtState init = base.states[base.initial];
  if (mode == ShapeMode::EarlyPositive) {
    // Components already in a trigger color never "enter" it; mark them
    // so no bonus is paid for free.
    for (size_t i = 0; i < base.dfas.size(); ++i)
      if (triggered(i, init.q[i])) init.shaped_bits |= 1u << i;
  }
  m.initial = intern(std::move(init));

  const size_t stop =
      complete ? base.domain.action_index(kStopAction) : SIZE_MAX;

  for (uint32_t s = 0; s < m.states.size(); ++s) {
    const ExtState cur = m.states[s];
    if (cur.terminal) {
      for (size_t a = 0; a < n_actions; ++a)
        m.trans[s][a] = {{s, 1.0}};
      continue;
    }
    for (size_t a = 0; a < n_actions; ++a) {
      const auto& dist = base.domain.trans[cur.t][a];
      if (dist.empty()) continue;
      const Letter letter = base.tracking_letter(cur.t, a);
      std::vector<uint32_t> q_next(base.dfas.size());
      for (size_t i = 0; i < base.dfas.size(); ++i)
        q_next[i] = base.dfas[i].next[cur.q[i]][letter];

      uint32_t bits = cur.shaped_bits;
      double reward = 0.0;
      const bool stopping = complete && a == stop;

      if (mode == ShapeMode::EarlyPositive) {
        // Base reward as in the unshaped model.
        if (!complete || stopping)
          for (size_t i = 0; i < base.dfas.size(); ++i)
            if (base.dfas[i].is_final[q_next[i]])
              reward += base.spec.pairs[i].value;
        for (size_t i = 0; i < base.dfas.size(); ++i)
          if (!(bits & (1u << i)) && triggered(i, q_next[i])) {
            reward += base.spec.pairs[i].value;
            bits |= 1u << i;
          }
      } else {  // NegativeTransform
        if (stopping) {
          for (size_t i = 0; i < base.dfas.size(); ++i) {
            bool accepted = base.dfas[i].is_final[q_next[i]];
            if (!accepted && !(bits & (1u << i)))
              reward -= base.spec.pairs[i].value;
          }
        } else {
          for (size_t i = 0; i < base.dfas.size(); ++i)
            if (!(bits & (1u << i)) && triggered(i, q_next[i])) {
              reward -= base.spec.pairs[i].value;
              bits |= 1u << i;
            }
        }
      }

      m.reward[s][a] = reward;
      if (stopping) {
        ExtState t;
        t.terminal = true;
        m.trans[s][a] = {{intern(std::move(t)), 1.0}};
        continue;
      }
      for (auto [t2, p] : dist) {
        ExtState nxt;
        nxt.q = q_next;
        nxt.t = t2;
        nxt.shaped_bits = bits;
        m.trans[s][a].push_back({intern(std::move(nxt)), p});
      }
    }
  }
  return out;
}

}  // namespace ldlmdp
