// ldlmdp — compile temporal reward specifications to automata, build the
// equivalent Markovian model, solve it, and monitor it.
//
// Subcommands: compile | check | solve | simulate | monitor | export-dot
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 check failure, 4 resource cap.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "ldlmdp/compile.hpp"
#include "ldlmdp/monitor.hpp"
#include "ldlmdp/parser.hpp"
#include "ldlmdp/printer.hpp"
#include "ldlmdp/rewrite.hpp"
#include "ldlmdp/semantics.hpp"
#include "ldlmdp/solve.hpp"

namespace {

using namespace ldlmdp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCheckFailure = 3;
constexpr int kExitResourceCap = 4;

struct GlobalOpts {
  std::vector<std::string> props;
  double gamma = -1.0;  // <0: take the reward spec's discount
  double epsilon = 1e-8;
  uint64_t seed = 0;
  std::string mode;  // "", "prefix", "complete"
  bool action_props = false;
  bool json_out = false;
  std::string out_dir;
};

Alphabet alphabet_for(const GlobalOpts& g, FormulaId f) {
  if (!g.props.empty()) return make_alphabet(g.props);
  std::vector<std::string> names;
  collect_props(f, names);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  names.erase(std::remove(names.begin(), names.end(), std::string(kLastProp)),
              names.end());
  return make_alphabet(names);
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/" + name);
  out << content;
}

RewardSpec apply_overrides(RewardSpec spec, const GlobalOpts& g) {
  if (g.gamma > 0) spec.discount = g.gamma;
  if (g.mode == "prefix") spec.mode = RewardMode::PerPrefix;
  if (g.mode == "complete") spec.mode = RewardMode::CompleteTrace;
  return spec;
}

// Exhaustive automaton-vs-semantics comparison; returns the number of traces
// checked, or nullopt on the first mismatch.
std::optional<uint64_t> oracle_check(FormulaId core, const Alphabet& alpha,
                                     const Nfa& raw, const Nfa& plain,
                                     const Dfa& min_dfa, size_t max_len) {
  uint64_t n = 0;
  bool ok = true;
  for_each_trace(alpha, max_len, [&](const Trace& t) {
    if (!ok) return;
    ++n;
    bool want = satisfies(alpha, t, core);
    if (raw.accepts(t) != want || plain.accepts(t) != want ||
        min_dfa.accepts(t) != want)
      ok = false;
  });
  if (!ok) return std::nullopt;
  return n;
}

int cmd_compile(const std::string& formula_text, const GlobalOpts& g,
                int oracle_len, bool use_ltlf_table) {
  FormulaId f = parse_formula(formula_text);
  Alphabet alpha = alphabet_for(g, f);
  FormulaId core = expand_sugar(f);
  CompileResult c = use_ltlf_table ? ltlf_to_nfa_direct(f, alpha)
                                   : ldlf_to_nfa(core, alpha);
  Nfa plain = eliminate_last(c.nfa);
  Dfa dfa = determinize(plain);
  Dfa min_dfa = minimize(dfa);

  write_file(g.out_dir, "nfa.json", to_json(c.nfa));
  write_file(g.out_dir, "nfa.dot", to_dot(c.nfa));
  write_file(g.out_dir, "dfa.json", to_json(dfa));
  write_file(g.out_dir, "min_dfa.json", to_json(min_dfa));
  write_file(g.out_dir, "min_dfa.dot", to_dot(min_dfa));

  std::optional<uint64_t> oracle_traces;
  if (oracle_len >= 0) {
    oracle_traces = oracle_check(core, alpha, c.nfa, plain, min_dfa,
                                 static_cast<size_t>(oracle_len));
  }

  if (g.json_out) {
    json j;
    j["command"] = "compile";
    j["formula"] = to_string(f);
    j["alphabet"] = alpha.props;
    j["nfa_states"] = c.nfa.num_states;
    j["dfa_states"] = dfa.num_states;
    j["min_dfa_states"] = min_dfa.num_states;
    j["closure_size"] = c.closure_size;
    if (oracle_len >= 0) {
      j["oracle"] = oracle_traces ? "PASS" : "FAIL";
      if (oracle_traces) j["oracle_traces"] = *oracle_traces;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "formula: " << to_string(f) << "\n";
    std::cout << "nfa states: " << c.nfa.num_states << " (closure "
              << c.closure_size << ")\n";
    std::cout << "dfa states: " << dfa.num_states << "\n";
    std::cout << "min dfa states: " << min_dfa.num_states << "\n";
    if (oracle_len >= 0) {
      if (oracle_traces)
        std::cout << "oracle: PASS (" << *oracle_traces << " traces)\n";
      else
        std::cout << "oracle: FAIL\n";
    }
  }
  if (oracle_len >= 0 && !oracle_traces) return kExitCheckFailure;
  return kExitOk;
}

int cmd_check(const std::string& lhs_text, const std::string& rhs_text,
              const GlobalOpts& g, int max_len) {
  FormulaId lhs = parse_formula(lhs_text);
  FormulaId rhs = parse_formula(rhs_text);
  Alphabet alpha = g.props.empty() ? alphabet_for(g, f_and(lhs, rhs))
                                   : make_alphabet(g.props);
  Dfa a = formula_to_min_dfa(expand_sugar(lhs), alpha);
  Dfa b = formula_to_min_dfa(expand_sugar(rhs), alpha);
  bool iso = isomorphic(a, b);
  bool sweep = true;
  for_each_trace(alpha, static_cast<size_t>(max_len), [&](const Trace& t) {
    if (a.accepts(t) != b.accepts(t)) sweep = false;
  });
  bool equal = iso && sweep;
  if (g.json_out) {
    json j;
    j["command"] = "check";
    j["equivalent"] = equal;
    j["isomorphic_min_dfa"] = iso;
    j["trace_sweep"] = sweep;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (equal ? "equivalent" : "NOT equivalent") << " (min-DFA "
              << (iso ? "isomorphic" : "different") << ", traces "
              << (sweep ? "agree" : "disagree") << ")\n";
  }
  return equal ? kExitOk : kExitCheckFailure;
}

struct Project {
  DomainModel domain;
  RewardSpec spec;
  ExtendedMdp mdp;
};

Project load_project(const std::string& domain_path,
                     const std::string& rewards_path, const GlobalOpts& g) {
  Project p{load_domain(domain_path),
            apply_overrides(load_reward_spec(rewards_path), g),
            {}};
  BuildOptions opts;
  opts.action_props = g.action_props;
  p.mdp = build_extended_mdp(p.domain, p.spec, opts);
  return p;
}

int cmd_solve(const std::string& domain_path, const std::string& rewards_path,
              const GlobalOpts& g) {
  Project p = load_project(domain_path, rewards_path, g);
  SolverConfig cfg;
  cfg.gamma = p.spec.discount;
  cfg.epsilon = g.epsilon;
  Solution sol = value_iterate(p.mdp, cfg);

  json pol = json::object(), val = json::object();
  for (uint32_t s = 0; s < p.mdp.states.size(); ++s) {
    pol[p.mdp.state_key(s)] = p.mdp.domain.actions[sol.policy[s]];
    val[p.mdp.state_key(s)] = sol.value[s];
  }
  write_file(g.out_dir, "policy.json",
             json{{"policy", pol}, {"value", val}}.dump(2));

  if (g.json_out) {
    json j;
    j["command"] = "solve";
    j["extended_states"] = p.mdp.states.size();
    j["iterations"] = sol.iterations;
    j["residual"] = sol.residual;
    j["initial_value"] = sol.value[p.mdp.initial];
    j["initial_action"] = p.mdp.domain.actions[sol.policy[p.mdp.initial]];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "extended states: " << p.mdp.states.size() << "\n";
    std::cout << "iterations: " << sol.iterations << " (residual "
              << sol.residual << ")\n";
    std::cout << "V(initial) = " << sol.value[p.mdp.initial] << "\n";
    std::cout << "initial action: "
              << p.mdp.domain.actions[sol.policy[p.mdp.initial]] << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& domain_path,
                 const std::string& rewards_path, const GlobalOpts& g,
                 size_t episodes, size_t horizon) {
  Project p = load_project(domain_path, rewards_path, g);
  SolverConfig cfg;
  cfg.gamma = p.spec.discount;
  cfg.epsilon = g.epsilon;
  Solution sol = value_iterate(p.mdp, cfg);
  SimStats stats = simulate(p.mdp, sol.policy, episodes, horizon, g.seed);
  if (g.json_out) {
    json j;
    j["command"] = "simulate";
    j["episodes"] = stats.episodes;
    j["mean"] = stats.mean;
    j["stdev"] = stats.stdev;
    j["predicted"] = sol.value[p.mdp.initial];
    j["formula_frequency"] = stats.formula_frequency;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "episodes: " << stats.episodes << "\n";
    std::cout << "mean discounted return: " << stats.mean << " (stdev "
              << stats.stdev << ")\n";
    std::cout << "value-iteration prediction: " << sol.value[p.mdp.initial]
              << "\n";
    for (size_t i = 0; i < stats.formula_frequency.size(); ++i)
      std::cout << "formula " << i << " satisfied in "
                << 100.0 * stats.formula_frequency[i] << "% of episodes\n";
  }
  return kExitOk;
}

int cmd_monitor(const std::string& domain_path,
                const std::string& rewards_path, const GlobalOpts& g,
                const std::string& shape) {
  Project p = load_project(domain_path, rewards_path, g);
  json report;
  report["command"] = "monitor";
  report["formulas"] = json::array();
  for (size_t i = 0; i < p.mdp.dfas.size(); ++i) {
    const Dfa& dfa = p.mdp.dfas[i];
    auto colors = color_states(dfa);
    std::vector<std::string> tints;
    for (auto c : colors) tints.push_back(color_tint(c));
    write_file(g.out_dir, "monitor_" + std::to_string(i) + ".dot",
               to_dot(dfa, tints));
    write_file(g.out_dir, "monitor_" + std::to_string(i) + ".json",
               coloring_to_json(dfa, colors));
    json entry;
    entry["formula"] = p.spec.pairs[i].formula_text;
    entry["colors"] = json::parse(coloring_to_json(dfa, colors));
    report["formulas"].push_back(entry);
    if (!g.json_out) {
      std::cout << "formula " << i << ": " << p.spec.pairs[i].formula_text
                << "\n";
      for (uint32_t s = 0; s < dfa.num_states; ++s)
        std::cout << "  state " << s << ": " << color_name(colors[s]) << "\n";
    }
  }
  if (!shape.empty()) {
    ShapeMode mode = shape == "early-positive" ? ShapeMode::EarlyPositive
                                               : ShapeMode::NegativeTransform;
    ShapedMdp shaped = shape_rewards(p.mdp, mode);
    report["shaped_states"] = shaped.mdp.states.size();
    report["warnings"] = shaped.warnings;
    if (!g.json_out) {
      std::cout << "shaped extended states: " << shaped.mdp.states.size()
                << "\n";
      for (const auto& w : shaped.warnings)
        std::cout << "warning: " << w << "\n";
    }
  }
  if (g.json_out) std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& formula_text, const GlobalOpts& g,
                   const std::string& stage) {
  FormulaId f = parse_formula(formula_text);
  Alphabet alpha = alphabet_for(g, f);
  CompileResult c = ldlf_to_nfa(expand_sugar(f), alpha);
  if (stage == "nfa") {
    std::cout << to_dot(c.nfa);
    return kExitOk;
  }
  Dfa min_dfa = minimize(determinize(eliminate_last(c.nfa)));
  if (stage == "monitor") {
    auto colors = color_states(min_dfa);
    std::vector<std::string> tints;
    for (auto col : colors) tints.push_back(color_tint(col));
    std::cout << to_dot(min_dfa, tints);
  } else {
    std::cout << to_dot(min_dfa);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTLf/LDLf reward compiler and MDP toolkit"};
  app.require_subcommand(1);
  // Global options may be given after the subcommand.
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--props", g.props, "declared propositions")->delimiter(',');
  app.add_option("--gamma", g.gamma, "discount override");
  app.add_option("--epsilon", g.epsilon, "value-iteration accuracy");
  app.add_option("--seed", g.seed, "simulation seed");
  app.add_option("--mode", g.mode, "reward mode")
      ->check(CLI::IsMember({"prefix", "complete"}));
  app.add_flag("--action-props", g.action_props,
               "extend formulas with one proposition per action");
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--out", g.out_dir, "artifact output directory");

  std::string formula, formula2, domain_path, rewards_path;
  int oracle_len = -1;
  bool ltlf_table = false;
  auto* compile =
      app.add_subcommand("compile", "formula -> NFA/DFA/minimal DFA");
  compile->add_option("formula", formula)->required();
  compile->add_option("--check-oracle", oracle_len,
                      "exhaustively compare with the trace semantics");
  compile->add_flag("--ltlf-table", ltlf_table,
                    "use the direct LTLf transition table");

  auto* check =
      app.add_subcommand("check", "language equivalence of two formulas");
  check->add_option("formula", formula)->required();
  int check_len = 5;
  check->add_option("--equiv", formula2, "second formula")->required();
  check->add_option("--max-len", check_len, "trace sweep length");

  auto* solve =
      app.add_subcommand("solve", "build the extended MDP and solve it");
  solve->add_option("--domain", domain_path)->required();
  solve->add_option("--rewards", rewards_path)->required();

  size_t episodes = 1000, horizon = 100;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte-Carlo policy rollout");
  simulate_cmd->add_option("--domain", domain_path)->required();
  simulate_cmd->add_option("--rewards", rewards_path)->required();
  simulate_cmd->add_option("--episodes", episodes);
  simulate_cmd->add_option("--horizon", horizon);

  std::string shape;
  auto* monitor = app.add_subcommand("monitor", "color automaton states");
  monitor->add_option("--domain", domain_path)->required();
  monitor->add_option("--rewards", rewards_path)->required();
  monitor->add_option("--shape", shape, "reward shaping mode")
      ->check(CLI::IsMember({"early-positive", "negative-transform"}));

  std::string stage = "min";
  auto* export_dot = app.add_subcommand("export-dot", "GraphViz export");
  export_dot->add_option("formula", formula)->required();
  export_dot->add_option("--stage", stage)
      ->check(CLI::IsMember({"nfa", "min", "monitor"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile) return cmd_compile(formula, g, oracle_len, ltlf_table);
    if (*check) return cmd_check(formula, formula2, g, check_len);
    if (*solve) return cmd_solve(domain_path, rewards_path, g);
    if (*simulate_cmd)
      return cmd_simulate(domain_path, rewards_path, g, episodes, horizon);
    if (*monitor) return cmd_monitor(domain_path, rewards_path, g, shape);
    if (*export_dot) return cmd_export_dot(formula, g, stage);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StateCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
