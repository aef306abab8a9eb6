// delta.hpp — the transition function of the implicit alternating automaton.
//
// delta takes a quoted NNF formula and one interpretation (possibly carrying
// the reserved `last` bit) and returns a positive boolean formula over quoted
// subformulas.  Starred path expressions unfold through T/F markers: the
// marker rows make pure-test iterations inert, and E(.) replaces markers by
// their formulas whenever an atomic step actually consumes a letter, so
// markers never appear inside automaton states.
//
// On letters carrying `last`, the step rows evaluate the expanded
// continuation at the end of the trace (delta(E(f), epsilon)); the epsilon
// evaluation recurses through tests and stars so that e.g. <rho*>phi can
// still be discharged by phi alone at the end.
//
// A parallel table implements the LTLf operators directly (delta_ltlf),
// without path expressions; the two compilation routes are cross-checked in
// the tests.

#pragma once

#include <vector>

#include "ldlmdp/formula.hpp"
#include "ldlmdp/trace.hpp"

namespace ldlmdp {

// Positive boolean formula over quoted formulas.  Constructors fold
// constants, and atoms for tt/ff collapse to constants.
struct PosBool {
  enum class K : uint8_t { True, False, Atom, And, Or };
  K k = K::False;
  FormulaId atom = kNoId;
  std::vector<PosBool> kids;

  static PosBool mk_true() { return PosBool{K::True, kNoId, {}}; }
  static PosBool mk_false() { return PosBool{K::False, kNoId, {}}; }
  static PosBool mk_atom(FormulaId f);
  static PosBool mk_and(PosBool a, PosBool b);
  static PosBool mk_or(PosBool a, PosBool b);
  static PosBool mk_const(bool b) { return b ? mk_true() : mk_false(); }

  bool is_const() const { return k == K::True || k == K::False; }
};

// A state of the constructed NFA: a set of quoted formulas read
// conjunctively.  The empty set stands for true.
using MacroState = std::vector<FormulaId>;  // sorted, unique

// Replaces every T/F marker by its (recursively expanded) formula.
FormulaId e_expand(FormulaId f);

// Subset-minimal sets of atoms satisfying pb, as an antichain in canonical
// order.  ConstTrue yields { {} }, ConstFalse yields no models.
std::vector<MacroState> minimal_models(const PosBool& pb);

class DeltaContext {
 public:
  // The alphabet must carry the `last` bit.
  explicit DeltaContext(const Alphabet& a);

  // LDLf delta; f must be sugar-free NNF (markers allowed).
  PosBool delta(FormulaId f, Letter letter);

  // End-of-trace row: constant-valued by construction.
  PosBool delta_epsilon(FormulaId f);

  // Direct LTLf table; f must be LTLf NNF (X/WX/U/R/F/G and literals).
  PosBool delta_ltlf(FormulaId f, Letter letter);
  PosBool delta_epsilon_ltlf(FormulaId f);

  const Alphabet& alphabet() const { return alpha_; }

 private:
  PosBool dia(PathId p, FormulaId cont, FormulaId whole, Letter letter);
  PosBool box(PathId p, FormulaId cont, FormulaId whole, Letter letter);
  bool guard_holds(FormulaId g, Letter letter) const;

  Alphabet alpha_;
};

// Epsilon truth of an LTLf NNF formula (for the direct pipeline).
bool eps_truth_ltlf(FormulaId f);

// Syntactic closure of an NNF formula: every quoted atom the delta fixpoint
// can produce belongs to it.  Used for the exponential state bound.
std::vector<FormulaId> closure(FormulaId f);
std::vector<FormulaId> closure_ltlf(FormulaId f);

}  // namespace ldlmdp
