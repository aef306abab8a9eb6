// semantics.hpp — executable finite-trace semantics, by literal recursion on
// the defining clauses.  This is the independent oracle every automaton in
// the project is checked against; nothing here shares code with the
// delta-based compiler.
//
// Positions run from 0 to length(trace); evaluating at position length (or
// past it, for nested modalities) follows the out-of-range convention: box
// formulas hold trivially, diamond formulas fail trivially, positive
// literals fail and negated literals hold.
//
// Both sub-languages are handled by one evaluator: LDLf core formulas by the
// path-relation clauses, LTLf operators by their direct clauses.  `last` is
// true exactly at the final element, `end` exactly past it.

#pragma once

#include "ldlmdp/formula.hpp"
#include "ldlmdp/trace.hpp"

namespace ldlmdp {

struct UndeclaredProp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool satisfies(const Alphabet& a, const Trace& t, FormulaId f);
bool satisfies_at(const Alphabet& a, const Trace& t, size_t i, FormulaId f);

// The L(rho) relation: does the trace segment from i to j match rho?
bool path_matches(const Alphabet& a, const Trace& t, size_t i, size_t j,
                  PathId rho);

// Evaluates a propositional formula against one letter.
bool eval_prop(const Alphabet& a, Letter letter, FormulaId f);

}  // namespace ldlmdp
