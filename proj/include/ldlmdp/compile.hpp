// compile.hpp — forward NFA construction from the delta function, the
// `last`-elimination step, and the formula -> minimal DFA pipeline.
//
// States are macro-states (sets of quoted subformulas, read conjunctively);
// the construction starts from {formula} and the empty set is the accepting
// sink of discharged obligations.  A macro-state is additionally accepting
// when its conjunction holds at the end of the trace, which settles empty
// traces.

#pragma once

#include "ldlmdp/automata.hpp"
#include "ldlmdp/delta.hpp"
#include "ldlmdp/formula.hpp"

namespace ldlmdp {

struct CompileResult {
  Nfa nfa;               // over the `last`-extended alphabet
  size_t closure_size;   // syntactic closure bound for the state count
  FormulaId nnf;         // the compiled normal form
};

// Forward fixpoint over macro-states.  `f` must be sugar-free (expand_sugar
// image); NNF is applied internally.
CompileResult ldlf_to_nfa(FormulaId f, const Alphabet& props,
                          size_t state_cap = kDefaultStateCap);

// Same construction over the direct LTLf table; `f` must be an LTLf surface
// formula (sugar operators, no path modalities).
CompileResult ltlf_to_nfa_direct(FormulaId f, const Alphabet& props,
                                 size_t state_cap = kDefaultStateCap);

// Removes the `last` pseudo-proposition: adds the `ended` final state with
// (q, L, ended) whenever (q, L + {last}, {}) was a transition.
Nfa eliminate_last(const Nfa& nfa);

// parse-free helper: sugar-free formula -> minimal last-free DFA.
Dfa formula_to_min_dfa(FormulaId f, const Alphabet& props,
                       size_t state_cap = kDefaultStateCap);

// PLTL-style reward automaton: compiles f, reverses the language, and
// determinizes, so running the result forward over a prefix accepts iff the
// reversed prefix satisfies f.
Dfa pltl_reward_dfa(FormulaId f, const Alphabet& props,
                    size_t state_cap = kDefaultStateCap);

}  // namespace ldlmdp
