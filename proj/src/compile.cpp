#include "ldlmdp/compile.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ldlmdp/printer.hpp"
#include "ldlmdp/rewrite.hpp"

namespace ldlmdp {
namespace {

std::string macro_name(const MacroState& m) {
  if (m.empty()) return "{}";
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m[i]);
  }
  out += "}";
  return out;
}

// Shared forward fixpoint; parameterized over the delta table.
Nfa build_nfa(FormulaId root, const Alphabet& props, size_t state_cap,
              const std::function<PosBool(DeltaContext&, FormulaId, Letter)>& step,
              const std::function<bool(FormulaId)>& eps) {
  if (props.props.size() > kMaxExplicitProps)
    throw StateCapExceeded("alphabet larger than the explicit-enumeration cap");
  Alphabet alpha = props.with_last();
  DeltaContext ctx(alpha);
  const size_t letters = alpha.letter_count();

  std::map<MacroState, uint32_t> index;
  std::vector<MacroState> states;
  Nfa nfa;
  nfa.alphabet = alpha;

  auto intern = [&](MacroState m) {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (states.size() >= state_cap)
      throw StateCapExceeded("ldlf_to_nfa: state cap exceeded");
    uint32_t id = static_cast<uint32_t>(states.size());
    index.emplace(m, id);
    states.push_back(std::move(m));
    nfa.next.emplace_back(letters);
    return id;
  };

  uint32_t s0 = intern(MacroState{root});
  uint32_t sf = intern(MacroState{});  // single final state of the algorithm
  nfa.initial = {s0};

  for (uint32_t q = 0; q < states.size(); ++q) {
    // Copy: intern() may grow the vector and invalidate references.
    const MacroState atoms = states[q];
    for (size_t l = 0; l < letters; ++l) {
      PosBool pb = PosBool::mk_true();
      for (FormulaId psi : atoms)
        pb = PosBool::mk_and(pb, step(ctx, psi, static_cast<Letter>(l)));
      for (const MacroState& succ : minimal_models(pb))
        nfa.next[q][l].push_back(intern(succ));
      std::sort(nfa.next[q][l].begin(), nfa.next[q][l].end());
    }
  }

  nfa.num_states = states.size();
  // Finals: the empty macro-state (all obligations discharged), plus the
  // initial state exactly when the formula admits the empty trace.  Runs
  // over nonempty traces are discharged on the `last`-marked letter, so no
  // other state needs to accept.
  nfa.finals = eps(root) ? std::vector<uint32_t>{s0, sf}
                         : std::vector<uint32_t>{sf};
  std::sort(nfa.finals.begin(), nfa.finals.end());
  nfa.state_names.reserve(states.size());
  for (const MacroState& m : states) nfa.state_names.push_back(macro_name(m));
  return nfa;
}

}  // namespace

CompileResult ldlf_to_nfa(FormulaId f, const Alphabet& props, size_t state_cap) {
  FormulaId nf = to_nnf(f);
  CompileResult res;
  res.nnf = nf;
  res.closure_size = closure(nf).size();
  res.nfa = build_nfa(
      nf, props, state_cap,
      [](DeltaContext& ctx, FormulaId psi, Letter l) { return ctx.delta(psi, l); },
      [](FormulaId psi) { return eps_truth(psi); });
  return res;
}

CompileResult ltlf_to_nfa_direct(FormulaId f, const Alphabet& props,
                                 size_t state_cap) {
  FormulaId nf = ltlf_nnf(f);
  CompileResult res;
  res.nnf = nf;
  res.closure_size = closure_ltlf(nf).size();
  res.nfa = build_nfa(
      nf, props, state_cap,
      [](DeltaContext& ctx, FormulaId psi, Letter l) { return ctx.delta_ltlf(psi, l); },
      [](FormulaId psi) { return eps_truth_ltlf(psi); });
  return res;
}

Nfa eliminate_last(const Nfa& nfa) {
  if (!nfa.alphabet.has_last)
    throw std::logic_error("eliminate_last: automaton has no last bit");
  const Letter last = nfa.alphabet.last_mask();
  const Alphabet alpha = nfa.alphabet.without_last();
  const size_t letters = alpha.letter_count();

  // On `last`-letters every delta output is constant, so the only reachable
  // target is the accepting sink (the empty macro-state); testing for any
  // final target keeps this independent of state numbering.
  auto is_final_old = [](const Nfa& n, uint32_t q) {
    return std::binary_search(n.finals.begin(), n.finals.end(), q);
  };
  auto is_final = [&](uint32_t q) { return is_final_old(nfa, q); };

  Nfa out;
  out.alphabet = alpha;
  out.num_states = nfa.num_states + 1;
  const uint32_t ended = static_cast<uint32_t>(nfa.num_states);
  out.initial = nfa.initial;
  // Every nonempty word is discharged on its `last`-marked letter, so
  // `ended` is the sole accepting state for them; an accepting initial
  // state stays final to keep the empty word.  Mid-word finals must not
  // survive: a plain transition into them can be valid mid-word yet
  // invalid on the closing letter (an atom over `last` decides differently
  // once the bit is set), and acceptance may only route through the
  // `last`-aware rule.
  for (uint32_t q : nfa.initial)
    if (is_final_old(nfa, q)) out.finals.push_back(q);
  out.finals.push_back(ended);
  std::sort(out.finals.begin(), out.finals.end());
  out.next.assign(out.num_states, std::vector<std::vector<uint32_t>>(letters));
  for (uint32_t q = 0; q < nfa.num_states; ++q) {
    for (size_t l = 0; l < letters; ++l) {
      out.next[q][l] = nfa.next[q][l];
      bool to_ended = false;
      for (uint32_t d : nfa.next[q][l | last])
        if (is_final(d)) to_ended = true;
      if (to_ended) {
        out.next[q][l].push_back(ended);
        std::sort(out.next[q][l].begin(), out.next[q][l].end());
      }
    }
  }
  out.state_names = nfa.state_names;
  if (!out.state_names.empty()) out.state_names.push_back("ended");
  return out;
}

Dfa formula_to_min_dfa(FormulaId f, const Alphabet& props, size_t state_cap) {
  CompileResult c = ldlf_to_nfa(f, props, state_cap);
  return minimize(determinize(eliminate_last(c.nfa), state_cap));
}

Dfa pltl_reward_dfa(FormulaId f, const Alphabet& props, size_t state_cap) {
  CompileResult c = ldlf_to_nfa(f, props, state_cap);
  Nfa forward = eliminate_last(c.nfa);
  return minimize(determinize(reverse_nfa(forward), state_cap));
}

}  // namespace ldlmdp
