#include "ldlmdp/domain.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ldlmdp/parser.hpp"

namespace ldlmdp {

size_t DomainModel::action_index(const std::string& name) const {
  for (size_t i = 0; i < actions.size(); ++i)
    if (actions[i] == name) return i;
  throw std::invalid_argument("unknown action: " + name);
}

std::optional<uint32_t> DomainModel::state_index(Letter interp) const {
  for (uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == interp) return i;
  return std::nullopt;
}

void DomainModel::validate(RewardMode mode) const {
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = i + 1; j < states.size(); ++j)
      if (states[i] == states[j])
        throw std::invalid_argument("duplicate domain state interpretation");
  if (initial >= states.size())
    throw std::invalid_argument("initial state out of range");
  for (size_t s = 0; s < states.size(); ++s) {
    for (size_t a = 0; a < actions.size(); ++a) {
      const auto& dist = trans[s][a];
      if (dist.empty()) continue;
      double mass = 0;
      for (auto [t, p] : dist) {
        if (t >= states.size())
          throw std::invalid_argument("transition target out of range");
        if (p < 0.0 || p > 1.0)
          throw std::invalid_argument("probability out of [0,1]");
        mass += p;
      }
      if (std::abs(mass - 1.0) > 1e-9)
        throw std::invalid_argument("distribution mass differs from 1");
    }
  }
  if (mode == RewardMode::CompleteTrace) {
    size_t stop = action_index(kStopAction);
    for (size_t s = 0; s < states.size(); ++s) {
      const auto& dist = trans[s][stop];
      if (dist.size() != 1 || dist[0].first != s || dist[0].second != 1.0)
        throw std::invalid_argument(
            "stop must be a deterministic self-loop in every state");
    }
  }
}

void DomainModel::ensure_stop_action() {
  for (const auto& a : actions)
    if (a == kStopAction) return;
  actions.push_back(kStopAction);
  for (size_t s = 0; s < states.size(); ++s)
    trans[s].push_back({{static_cast<uint32_t>(s), 1.0}});
}

namespace {

Letter interp_from_json(const nlohmann::json& j, const Alphabet& props) {
  Letter l = 0;
  for (const auto& name : j) {
    auto ix = props.index_of(name.get<std::string>());
    if (!ix)
      throw std::invalid_argument("undeclared proposition in state: " +
                                  name.get<std::string>());
    l |= Letter{1} << *ix;
  }
  return l;
}

}  // namespace

DomainModel domain_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DomainModel d;
  d.props = make_alphabet(j.at("props").get<std::vector<std::string>>());
  d.actions = j.at("actions").get<std::vector<std::string>>();
  for (size_t i = 0; i < d.actions.size(); ++i)
    for (size_t k = i + 1; k < d.actions.size(); ++k)
      if (d.actions[i] == d.actions[k])
        throw std::invalid_argument("duplicate action: " + d.actions[i]);

  std::vector<Letter> states;
  if (j.contains("states")) {
    for (const auto& st : j.at("states"))
      states.push_back(interp_from_json(st, d.props));
  }
  auto intern_state = [&](Letter l) {
    for (uint32_t i = 0; i < states.size(); ++i)
      if (states[i] == l) return i;
    if (j.contains("states"))
      throw std::invalid_argument("transition mentions undeclared state");
    states.push_back(l);
    return static_cast<uint32_t>(states.size() - 1);
  };

  Letter init = interp_from_json(j.at("initial"), d.props);
  uint32_t init_ix = intern_state(init);

  struct RawTrans {
    uint32_t from, to;
    size_t action;
    double p;
  };
  std::vector<RawTrans> raw;
  for (const auto& t : j.at("transitions")) {
    RawTrans r;
    r.from = intern_state(interp_from_json(t.at("from"), d.props));
    r.to = intern_state(interp_from_json(t.at("to"), d.props));
    r.p = t.at("p").get<double>();
    std::string action = t.at("action").get<std::string>();
    bool found = false;
    for (size_t a = 0; a < d.actions.size(); ++a)
      if (d.actions[a] == action) {
        r.action = a;
        found = true;
      }
    if (!found) throw std::invalid_argument("undeclared action: " + action);
    raw.push_back(r);
  }

  d.states = states;
  d.initial = init_ix;
  d.trans.assign(states.size(), std::vector<std::vector<std::pair<uint32_t, double>>>(
                                    d.actions.size()));
  for (const RawTrans& r : raw)
    d.trans[r.from][r.action].push_back({r.to, r.p});
  return d;
}

DomainModel load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open domain file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return domain_from_json_text(ss.str());
}

RewardSpec reward_spec_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RewardSpec spec;
  if (j.contains("discount")) spec.discount = j.at("discount").get<double>();
  if (spec.discount <= 0.0 || spec.discount > 1.0)
    throw std::invalid_argument("discount must be in (0,1]");
  if (j.contains("mode")) {
    std::string m = j.at("mode").get<std::string>();
    if (m == "prefix" || m == "per-prefix")
      spec.mode = RewardMode::PerPrefix;
    else if (m == "complete" || m == "complete-trace")
      spec.mode = RewardMode::CompleteTrace;
    else
      throw std::invalid_argument("unknown mode: " + m);
  }
  for (const auto& r : j.at("rewards")) {
    RewardPair pair;
    pair.formula_text = r.at("formula").get<std::string>();
    pair.formula = parse_formula(pair.formula_text);
    pair.value = r.at("value").get<double>();
    spec.pairs.push_back(pair);
  }
  return spec;
}

RewardSpec load_reward_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open reward spec: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return reward_spec_from_json_text(ss.str());
}

}  // namespace ldlmdp
