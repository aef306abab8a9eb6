// parser.hpp — concrete syntax for LTLf/LDLf formulas.
//
// Grammar sketch (see README for the full EBNF):
//
//   formula := iff
//   iff     := imp ('<->' imp)*
//   imp     := or ('->' imp)?                      right associative
//   or      := and (('||' | '|') and)*
//   and     := until (('&&' | '&') until)*
//   until   := unary (('U' | 'R') until)?          right associative
//   unary   := ('!' | 'X' | 'WX' | 'F' | 'G') unary
//            | '<' path '>' unary | '[' path ']' unary
//            | 'if' prop 'then' path 'else' path   (sugar for <...> end)
//            | 'while' prop 'do' path
//            | primary
//   primary := ident | 'true' | 'false' | 'tt' | 'ff' | 'last' | 'end'
//            | '(' formula ')'
//   path    := pconcat ('+' pconcat)*
//   pconcat := pstar (';' pstar)*
//   pstar   := pprim '*'*
//   pprim   := 'if' prop 'then' path 'else' path
//            | 'while' prop 'do' path
//            | formula '?'          (test)
//            | prop                 (single-step guard)
//            | '(' path ')'
//
// Unicode aliases are accepted for the ASCII operators.  Reserved words
// (true, false, tt, ff, last, end, if, then, else, while, do) cannot be
// used as proposition names.

#pragma once

#include <stdexcept>
#include <string>

#include "ldlmdp/formula.hpp"

namespace ldlmdp {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        column(col_) {}
};

FormulaId parse_formula(const std::string& text);

// Parses a purely propositional formula (guards, domain queries).
FormulaId parse_prop_formula(const std::string& text);

// True for identifiers the grammar reserves (cannot be declared as props).
bool is_reserved_word(const std::string& name);

}  // namespace ldlmdp
