#include "ldlmdp/extended.hpp"

#include <map>
#include <sstream>

#include "ldlmdp/compile.hpp"
#include "ldlmdp/rewrite.hpp"
#include "ldlmdp/semantics.hpp"

namespace ldlmdp {

uint32_t ExtendedMdp::state_index(const ExtState& s) const {
  for (uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return i;
  throw std::out_of_range("extended state not materialized");
}

std::string ExtendedMdp::state_key(uint32_t s) const {
  const ExtState& st = states[s];
  if (st.terminal) return "(terminal)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < st.q.size(); ++i) os << (i ? "," : "") << st.q[i];
  os << "|" << domain.states[st.t] << ")";
  return os.str();
}

Letter ExtendedMdp::tracking_letter(uint32_t t, size_t action) const {
  Letter l = domain.states[t];
  if (action_props)
    l |= Letter{1} << (domain.props.props.size() + action);
  return l;
}

namespace {

Alphabet tracking_alphabet(const DomainModel& domain, bool action_props) {
  Alphabet a = domain.props;
  if (action_props) {
    for (const auto& act : domain.actions) {
      if (a.index_of(act))
        throw std::invalid_argument("action name collides with proposition: " + act);
      a.props.push_back(act);
    }
  }
  return a;
}

}  // namespace

ExtendedMdp build_extended_mdp(const DomainModel& domain_in,
                               const RewardSpec& spec,
                               const BuildOptions& opts) {
  ExtendedMdp mdp;
  mdp.domain = domain_in;
  if (spec.mode == RewardMode::CompleteTrace) mdp.domain.ensure_stop_action();
  mdp.domain.validate(spec.mode);
  mdp.spec = spec;
  mdp.action_props = opts.action_props;
  mdp.track_alphabet = tracking_alphabet(mdp.domain, opts.action_props);

  for (const RewardPair& pair : spec.pairs) {
    FormulaId expanded = expand_sugar(pair.formula);
    std::vector<std::string> used;
    collect_props(expanded, used);
    for (const auto& p : used)
      if (p != kLastProp && !mdp.track_alphabet.index_of(p))
        throw std::invalid_argument("reward formula mentions proposition '" +
                                    p + "' outside the domain alphabet");
    mdp.dfas.push_back(
        formula_to_min_dfa(expanded, mdp.track_alphabet, opts.state_cap));
  }

  const size_t n_actions = mdp.domain.actions.size();
  const bool complete = spec.mode == RewardMode::CompleteTrace;
  const size_t stop =
      complete ? mdp.domain.action_index(kStopAction) : SIZE_MAX;

  std::map<ExtState, uint32_t> index;
  auto intern = [&](ExtState s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (mdp.states.size() >= opts.state_cap)
      throw StateCapExceeded("build_extended_mdp: state cap exceeded");
    uint32_t id = static_cast<uint32_t>(mdp.states.size());
    index.emplace(s, id);
    mdp.states.push_back(std::move(s));
    mdp.trans.emplace_back(n_actions);
    mdp.reward.emplace_back(n_actions, 0.0);
    return id;
  };

  ExtState init;
  for (const Dfa& d : mdp.dfas) init.q.push_back(d.initial);
  init.t = mdp.domain.initial;
  mdp.initial = intern(std::move(init));

  uint32_t terminal = kNoId;
  if (complete) {
    ExtState t;
    t.terminal = true;
    terminal = intern(std::move(t));
    // Absorbing and reward-free; every action self-loops.
    for (size_t a = 0; a < n_actions; ++a)
      mdp.trans[terminal][a] = {{terminal, 1.0}};
  }

  for (uint32_t s = 0; s < mdp.states.size(); ++s) {
    const ExtState cur = mdp.states[s];
    if (cur.terminal) continue;
    for (size_t a = 0; a < n_actions; ++a) {
      const auto& dist = mdp.domain.trans[cur.t][a];
      if (dist.empty()) continue;
      const Letter letter = mdp.tracking_letter(cur.t, a);
      std::vector<uint32_t> q_next(mdp.dfas.size());
      for (size_t i = 0; i < mdp.dfas.size(); ++i)
        q_next[i] = mdp.dfas[i].next[cur.q[i]][letter];

      if (complete && a == stop) {
        double r = 0;
        for (size_t i = 0; i < mdp.dfas.size(); ++i)
          if (mdp.dfas[i].is_final[q_next[i]]) r += spec.pairs[i].value;
        mdp.reward[s][a] = r;
        mdp.trans[s][a] = {{terminal, 1.0}};
        continue;
      }
      if (complete) {
        mdp.reward[s][a] = 0.0;
      } else {
        double r = 0;
        for (size_t i = 0; i < mdp.dfas.size(); ++i)
          if (mdp.dfas[i].is_final[q_next[i]]) r += spec.pairs[i].value;
        mdp.reward[s][a] = r;
      }
      for (auto [t2, p] : dist) {
        ExtState nxt;
        nxt.q = q_next;
        nxt.t = t2;
        mdp.trans[s][a].push_back({intern(std::move(nxt)), p});
      }
    }
  }
  return mdp;
}

double reward_of_prefix(const RewardSpec& spec, const Alphabet& alpha,
                        const Trace& prefix) {
  double total = 0;
  for (const RewardPair& pair : spec.pairs)
    if (satisfies(alpha, prefix, expand_sugar(pair.formula)))
      total += pair.value;
  return total;
}

uint32_t run_history(const ExtendedMdp& mdp, uint32_t t0,
                     const std::vector<HistoryStep>& history) {
  ExtState s;
  for (const Dfa& d : mdp.dfas) s.q.push_back(d.initial);
  s.t = t0;
  uint32_t prev = t0;
  for (const HistoryStep& step : history) {
    if (step.state >= mdp.domain.states.size())
      throw std::out_of_range("history leaves the declared state set");
    const Letter letter = mdp.tracking_letter(prev, step.action);
    for (size_t i = 0; i < mdp.dfas.size(); ++i)
      s.q[i] = mdp.dfas[i].next[s.q[i]][letter];
    s.t = step.state;
    prev = step.state;
  }
  return mdp.state_index(s);
}

std::function<size_t(uint32_t, const std::vector<HistoryStep>&)>
lift_policy(const ExtendedMdp& mdp, const std::vector<size_t>& policy) {
  return [&mdp, policy](uint32_t t0, const std::vector<HistoryStep>& h) {
    return policy.at(run_history(mdp, t0, h));
  };
}

}  // namespace ldlmdp
