// rewrite.hpp — sugar expansion and negation normal form.
//
// expand_sugar rewrites the LTLf operators and the last/end markers into the
// LDLf core (TT/FF/literals/Not/And/Or/Diamond/Box):
//
//   X f     ->  <true> f            (continuation strengthened, see below)
//   WX f    ->  [true](f | !true)
//   a U b   ->  <(a?; true)*> b
//   a R b   ->  [(!a?; true)*](b | !true)
//   F f     ->  true U f
//   G f     ->  ![F !f]-dual
//   last    ->  the reserved `last` proposition
//   end     ->  [true?] ff
//
// A continuation that would also hold past the final element (e.g. a negated
// literal or a box formula) is conjoined with the propositional constant
// `true`, which holds exactly at in-trace positions.  This keeps the LTLf
// operators bounded by the trace the way their direct semantics demand; for
// continuations that already fail past the end the conjunct is omitted, so
// e.g. X a becomes exactly <true> a.  Dually, box continuations gain `| !true`
// only when they could otherwise fail vacuously at the end.
//
// to_nnf pushes negation down to literals.  Negation survives only as
// NotAtom or as Not around the propositional constants (Not true == the
// trace has ended at this position).

#pragma once

#include "ldlmdp/formula.hpp"

namespace ldlmdp {

// Truth of f at a position past the final trace element (equivalently, at
// position 0 of the empty trace).  Defined for sugar-free formulas and for
// the LTLf fragment; markers evaluate as their constants.
bool eps_truth(FormulaId f);

FormulaId expand_sugar(FormulaId f);

// Requires sugar-free input (expand_sugar image).
FormulaId to_nnf(FormulaId f);

// Negates a formula already in NNF, staying in NNF.
FormulaId nnf_negate(FormulaId f);

// NNF for the direct LTLf pipeline: keeps X/WX/U/R/F/G, pushes negation to
// literals, maps last to the reserved proposition.  Rejects Diamond/Box/end.
FormulaId ltlf_nnf(FormulaId f);

// True iff f is inside the LTLf surface fragment (no path modalities, no
// `end`).
bool is_ltlf(FormulaId f);

}  // namespace ldlmdp
