// ============================================================================
// formula.hpp — Interned AST for LTLf/LDLf formulas and regular path
// expressions.
// ============================================================================
//
// All nodes live in a process-wide arena and are hash-consed: building the
// same node twice yields the same id, so structural equality is id equality
// and every transformation downstream (sugar expansion, NNF, delta) can be
// memoized on ids.  Nodes are immutable after construction.
//
// Propositional formulas (path guards, domain-state queries) are represented
// with the same node kinds, restricted to True/False/Atom/Not/And/Or; see
// is_propositional().

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ldlmdp {

using FormulaId = uint32_t;
using PathId = uint32_t;
inline constexpr uint32_t kNoId = 0xffffffffu;

// Reserved proposition marking the final trace element during automaton
// construction.  Never user-declarable.
inline constexpr const char* kLastProp = "last";

enum class FKind : uint8_t {
  TT,          // LDLf logical true
  FF,          // LDLf logical false
  True,        // propositional constant true (holds at in-trace positions)
  False,       // propositional constant false
  Atom,        // proposition occurrence
  NotAtom,     // negated proposition literal (NNF)
  Not,         // general negation (eliminated by to_nnf except on True/False)
  And,
  Or,
  Next,        // X
  WeakNext,    // WX
  Until,       // U
  Release,     // R
  Eventually,  // F
  Always,      // G
  Last,        // final-element marker (sugar)
  End,         // trace-has-ended marker (sugar)
  Diamond,     // <path> f
  Box,         // [path] f
  TMark,       // internal delta marker, always satisfied
  FMark,       // internal delta marker, never satisfied
};

enum class PKind : uint8_t {
  Guard,   // single step constrained by a propositional formula
  Test,    // f? — zero-width check of an arbitrary formula
  Union,   // p1 + p2
  Concat,  // p1 ; p2
  Star,    // p*
};

struct FormulaNode {
  FKind kind;
  uint32_t a = kNoId;  // first child: FormulaId, or PathId for Diamond/Box
  uint32_t b = kNoId;  // second child FormulaId
  uint32_t name = kNoId;  // Atom/NotAtom: index into the name table
};

struct PathNode {
  PKind kind;
  uint32_t a = kNoId;  // Guard/Test: FormulaId; otherwise PathId
  uint32_t b = kNoId;  // PathId for Union/Concat
};

// --- constructors (interned) -----------------------------------------------

FormulaId f_tt();
FormulaId f_ff();
FormulaId f_true();
FormulaId f_false();
FormulaId f_atom(const std::string& name);
FormulaId f_not_atom(const std::string& name);
FormulaId f_not(FormulaId f);
FormulaId f_and(FormulaId a, FormulaId b);
FormulaId f_or(FormulaId a, FormulaId b);
FormulaId f_next(FormulaId f);
FormulaId f_weak_next(FormulaId f);
FormulaId f_until(FormulaId a, FormulaId b);
FormulaId f_release(FormulaId a, FormulaId b);
FormulaId f_eventually(FormulaId f);
FormulaId f_always(FormulaId f);
FormulaId f_last();
FormulaId f_end();
FormulaId f_diamond(PathId p, FormulaId f);
FormulaId f_box(PathId p, FormulaId f);
FormulaId f_tmark(FormulaId f);
FormulaId f_fmark(FormulaId f);

PathId p_guard(FormulaId prop);
PathId p_test(FormulaId f);
PathId p_union(PathId a, PathId b);
PathId p_concat(PathId a, PathId b);
PathId p_star(PathId a);

// --- accessors --------------------------------------------------------------

const FormulaNode& fnode(FormulaId id);
const PathNode& pnode(PathId id);
const std::string& atom_name(FormulaId id);

// --- queries ----------------------------------------------------------------

// True iff f uses only True/False/Atom/NotAtom/Not/And/Or.
bool is_propositional(FormulaId f);

// Node count, counting both formula and path nodes.
size_t formula_size(FormulaId f);
size_t path_size(PathId p);

// Collects the names of all propositions mentioned (guards and tests
// included).  `last` is reported like any other name.
void collect_props(FormulaId f, std::vector<std::string>& out);

// True iff the formula mentions any of X/WX/U/R/F/G/Last/End/Diamond/Box.
bool is_temporal(FormulaId f);

}  // namespace ldlmdp
