#include "ldlmdp/printer.hpp"

namespace ldlmdp {
namespace {

// Formula precedence levels, loosest to tightest.  Matches the parser:
// or(1) < and(2) < until/release(3) < unary(4) < primary(5).
constexpr int kPrecOr = 1;
constexpr int kPrecAnd = 2;
constexpr int kPrecUntil = 3;
constexpr int kPrecUnary = 4;
constexpr int kPrecPrim = 5;

constexpr int kPathUnion = 1;
constexpr int kPathConcat = 2;
constexpr int kPathStar = 3;

int fprec(FormulaId f) {
  switch (fnode(f).kind) {
    case FKind::Or: return kPrecOr;
    case FKind::And: return kPrecAnd;
    case FKind::Until:
    case FKind::Release: return kPrecUntil;
    case FKind::Not:
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Eventually:
    case FKind::Always:
    case FKind::Diamond:
    case FKind::Box:
    case FKind::TMark:
    case FKind::FMark: return kPrecUnary;
    default: return kPrecPrim;
  }
}

int pprec(PathId p) {
  switch (pnode(p).kind) {
    case PKind::Union: return kPathUnion;
    case PKind::Concat: return kPathConcat;
    case PKind::Star: return kPathStar;
    default: return kPathStar + 1;
  }
}

std::string fmt(FormulaId f, int min_prec);

std::string pfmt(PathId p, int min_prec) {
  const PathNode& n = pnode(p);
  std::string s;
  switch (n.kind) {
    case PKind::Guard:
      s = fmt(n.a, kPrecPrim);
      break;
    case PKind::Test:
      s = fmt(n.a, kPrecPrim) + "?";
      break;
    case PKind::Union:
      // '+' is left associative in the grammar.
      s = pfmt(n.a, kPathUnion) + " + " + pfmt(n.b, kPathConcat);
      break;
    case PKind::Concat:
      s = pfmt(n.a, kPathConcat) + "; " + pfmt(n.b, kPathStar);
      break;
    case PKind::Star:
      s = pfmt(n.a, kPathStar + 1) + "*";
      break;
  }
  if (pprec(p) < min_prec) return "(" + s + ")";
  return s;
}

std::string fmt(FormulaId f, int min_prec) {
  const FormulaNode& n = fnode(f);
  std::string s;
  switch (n.kind) {
    case FKind::TT: s = "tt"; break;
    case FKind::FF: s = "ff"; break;
    case FKind::True: s = "true"; break;
    case FKind::False: s = "false"; break;
    case FKind::Last: s = "last"; break;
    case FKind::End: s = "end"; break;
    case FKind::Atom: s = atom_name(f); break;
    case FKind::NotAtom: s = "!" + atom_name(f); break;
    case FKind::Not: s = "!" + fmt(n.a, kPrecUnary); break;
    case FKind::Next: s = "X " + fmt(n.a, kPrecUnary); break;
    case FKind::WeakNext: s = "WX " + fmt(n.a, kPrecUnary); break;
    case FKind::Eventually: s = "F " + fmt(n.a, kPrecUnary); break;
    case FKind::Always: s = "G " + fmt(n.a, kPrecUnary); break;
    case FKind::Until:
      s = fmt(n.a, kPrecUnary) + " U " + fmt(n.b, kPrecUntil);
      break;
    case FKind::Release:
      s = fmt(n.a, kPrecUnary) + " R " + fmt(n.b, kPrecUntil);
      break;
    case FKind::And:
      // '&&' is left associative; a right-nested And needs parentheses.
      s = fmt(n.a, kPrecAnd) + " && " + fmt(n.b, kPrecUntil);
      break;
    case FKind::Or:
      s = fmt(n.a, kPrecOr) + " || " + fmt(n.b, kPrecAnd);
      break;
    case FKind::Diamond:
      s = "<" + pfmt(n.a, 0) + "> " + fmt(n.b, kPrecUnary);
      break;
    case FKind::Box:
      s = "[" + pfmt(n.a, 0) + "] " + fmt(n.b, kPrecUnary);
      break;
    case FKind::TMark: s = "T{" + fmt(n.a, 0) + "}"; break;
    case FKind::FMark: s = "F{" + fmt(n.a, 0) + "}"; break;
  }
  if (fprec(f) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

std::string to_string(FormulaId f) { return fmt(f, 0); }
std::string path_to_string(PathId p) { return pfmt(p, 0); }

}  // namespace ldlmdp
