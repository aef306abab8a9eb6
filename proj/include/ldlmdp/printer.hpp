// printer.hpp — canonical ASCII rendering of formulas and path expressions.
// parse_formula(to_string(f)) == f for every marker-free formula.

#pragma once

#include <string>

#include "ldlmdp/formula.hpp"

namespace ldlmdp {

std::string to_string(FormulaId f);
std::string path_to_string(PathId p);

}  // namespace ldlmdp
