#include "ldlmdp/rewrite.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ldlmdp {
namespace {

bool eps_diamond(PathId p, FormulaId f);
bool eps_box(PathId p, FormulaId f);

}  // namespace

bool eps_truth(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return true;
    case FKind::FF: return false;
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::Last:
      return false;
    case FKind::NotAtom:
    case FKind::End:
      return true;
    case FKind::Not: return !eps_truth(n.a);
    case FKind::And: return eps_truth(n.a) && eps_truth(n.b);
    case FKind::Or: return eps_truth(n.a) || eps_truth(n.b);
    case FKind::Next:
    case FKind::Eventually:
    case FKind::Until:
      return false;
    case FKind::WeakNext:
    case FKind::Always:
    case FKind::Release:
      return true;
    case FKind::Diamond: return eps_diamond(n.a, n.b);
    case FKind::Box: return eps_box(n.a, n.b);
    case FKind::TMark: return true;
    case FKind::FMark: return false;
  }
  return false;
}

namespace {

bool eps_diamond(PathId p, FormulaId f) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
      return false;  // a step needs a position
    case PKind::Test:
      return eps_truth(n.a) && eps_truth(f);
    case PKind::Union:
      return eps_diamond(n.a, f) || eps_diamond(n.b, f);
    case PKind::Concat:
      return eps_diamond(n.a, f_diamond(n.b, f));
    case PKind::Star:
      return eps_truth(f);
  }
  return false;
}

bool eps_box(PathId p, FormulaId f) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
      return true;
    case PKind::Test:
      return !eps_truth(n.a) || eps_truth(f);
    case PKind::Union:
      return eps_box(n.a, f) && eps_box(n.b, f);
    case PKind::Concat:
      return eps_box(n.a, f_box(n.b, f));
    case PKind::Star:
      return eps_truth(f);
  }
  return true;
}

PathId expand_path(PathId p);

std::unordered_map<FormulaId, FormulaId>& expand_memo() {
  static std::unordered_map<FormulaId, FormulaId> m;
  return m;
}

FormulaId expand(FormulaId f) {
  auto& memo = expand_memo();
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const FormulaNode n = fnode(f);
  FormulaId out = f;
  switch (n.kind) {
    case FKind::TT:
    case FKind::FF:
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::NotAtom:
      break;
    case FKind::Last:
      out = f_atom(kLastProp);
      break;
    case FKind::End:
      out = f_box(p_test(f_true()), f_ff());
      break;
    case FKind::Not:
      out = f_not(expand(n.a));
      break;
    case FKind::And:
      out = f_and(expand(n.a), expand(n.b));
      break;
    case FKind::Or:
      out = f_or(expand(n.a), expand(n.b));
      break;
    case FKind::Next: {
      FormulaId body = expand(n.a);
      if (eps_truth(body)) body = f_and(body, f_true());
      out = f_diamond(p_guard(f_true()), body);
      break;
    }
    case FKind::Until: {
      FormulaId left = expand(n.a);
      FormulaId body = expand(n.b);
      if (eps_truth(body)) body = f_and(body, f_true());
      out = f_diamond(p_star(p_concat(p_test(left), p_guard(f_true()))), body);
      break;
    }
    case FKind::Eventually:
      out = expand(f_until(f_true(), n.a));
      break;
    case FKind::WeakNext:
      out = expand(f_not(f_next(f_not(n.a))));
      break;
    case FKind::Release:
      out = expand(f_not(f_until(f_not(n.a), f_not(n.b))));
      break;
    case FKind::Always:
      out = expand(f_not(f_eventually(f_not(n.a))));
      break;
    case FKind::Diamond:
      out = f_diamond(expand_path(n.a), expand(n.b));
      break;
    case FKind::Box:
      out = f_box(expand_path(n.a), expand(n.b));
      break;
    case FKind::TMark:
    case FKind::FMark:
      throw std::logic_error("expand_sugar: marker in input");
  }
  memo.emplace(f, out);
  return out;
}

PathId expand_path(PathId p) {
  const PathNode n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
      return p;  // guards are propositional, nothing to expand
    case PKind::Test:
      return p_test(expand(n.a));
    case PKind::Union:
      return p_union(expand_path(n.a), expand_path(n.b));
    case PKind::Concat:
      return p_concat(expand_path(n.a), expand_path(n.b));
    case PKind::Star:
      return p_star(expand_path(n.a));
  }
  return p;
}

PathId nnf_path(PathId p);
FormulaId nnf_neg(FormulaId f);

std::unordered_map<FormulaId, FormulaId>& nnf_memo() {
  static std::unordered_map<FormulaId, FormulaId> m;
  return m;
}

FormulaId nnf(FormulaId f) {
  auto& memo = nnf_memo();
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const FormulaNode n = fnode(f);
  FormulaId out;
  switch (n.kind) {
    case FKind::TT:
    case FKind::FF:
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::NotAtom:
      out = f;
      break;
    case FKind::Not:
      out = nnf_neg(n.a);
      break;
    case FKind::And:
      out = f_and(nnf(n.a), nnf(n.b));
      break;
    case FKind::Or:
      out = f_or(nnf(n.a), nnf(n.b));
      break;
    case FKind::Diamond:
      out = f_diamond(nnf_path(n.a), nnf(n.b));
      break;
    case FKind::Box:
      out = f_box(nnf_path(n.a), nnf(n.b));
      break;
    default:
      throw std::logic_error("to_nnf: input not sugar-free");
  }
  memo.emplace(f, out);
  return out;
}

// NNF of the negation of f.
FormulaId nnf_neg(FormulaId f) {
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return f_ff();
    case FKind::FF: return f_tt();
    case FKind::True: return f_not(f_true());
    case FKind::False: return f_tt();
    case FKind::Atom: return f_not_atom(atom_name(f));
    case FKind::NotAtom: return f_atom(atom_name(f));
    case FKind::Not:
      // !true (end-of-trace leaf) or a double negation.
      if (fnode(n.a).kind == FKind::True) return f_true();
      return nnf(n.a);
    case FKind::And: return f_or(nnf_neg(n.a), nnf_neg(n.b));
    case FKind::Or: return f_and(nnf_neg(n.a), nnf_neg(n.b));
    case FKind::Diamond: return f_box(nnf_path(n.a), nnf_neg(n.b));
    case FKind::Box: return f_diamond(nnf_path(n.a), nnf_neg(n.b));
    default:
      throw std::logic_error("to_nnf: input not sugar-free");
  }
}

PathId nnf_path(PathId p) {
  const PathNode n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
      return p;
    case PKind::Test:
      return p_test(nnf(n.a));
    case PKind::Union:
      return p_union(nnf_path(n.a), nnf_path(n.b));
    case PKind::Concat:
      return p_concat(nnf_path(n.a), nnf_path(n.b));
    case PKind::Star:
      return p_star(nnf_path(n.a));
  }
  return p;
}

}  // namespace

FormulaId expand_sugar(FormulaId f) { return expand(f); }

FormulaId to_nnf(FormulaId f) { return nnf(f); }

FormulaId nnf_negate(FormulaId f) {
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return f_ff();
    case FKind::FF: return f_tt();
    case FKind::True: return f_not(f_true());
    case FKind::False: return f_tt();
    case FKind::Atom: return f_not_atom(atom_name(f));
    case FKind::NotAtom: return f_atom(atom_name(f));
    case FKind::Not:
      if (fnode(n.a).kind == FKind::True) return f_true();
      if (fnode(n.a).kind == FKind::False) return f_false();
      throw std::logic_error("nnf_negate: input not in NNF");
    case FKind::And: return f_or(nnf_negate(n.a), nnf_negate(n.b));
    case FKind::Or: return f_and(nnf_negate(n.a), nnf_negate(n.b));
    case FKind::Diamond: return f_box(n.a, nnf_negate(n.b));
    case FKind::Box: return f_diamond(n.a, nnf_negate(n.b));
    case FKind::TMark: return f_fmark(fnode(f).a);
    case FKind::FMark: return f_tmark(fnode(f).a);
    default:
      throw std::logic_error("nnf_negate: input not in NNF");
  }
}

namespace {

FormulaId ltlf_nnf_neg(FormulaId f);

FormulaId ltlf_nnf_pos(FormulaId f) {
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::TT:
    case FKind::FF:
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::NotAtom:
      return f;
    case FKind::Last:
      return f_atom(kLastProp);
    case FKind::Not:
      return ltlf_nnf_neg(n.a);
    case FKind::And: return f_and(ltlf_nnf_pos(n.a), ltlf_nnf_pos(n.b));
    case FKind::Or: return f_or(ltlf_nnf_pos(n.a), ltlf_nnf_pos(n.b));
    case FKind::Next: return f_next(ltlf_nnf_pos(n.a));
    case FKind::WeakNext: return f_weak_next(ltlf_nnf_pos(n.a));
    case FKind::Until: return f_until(ltlf_nnf_pos(n.a), ltlf_nnf_pos(n.b));
    case FKind::Release: return f_release(ltlf_nnf_pos(n.a), ltlf_nnf_pos(n.b));
    case FKind::Eventually: return f_eventually(ltlf_nnf_pos(n.a));
    case FKind::Always: return f_always(ltlf_nnf_pos(n.a));
    default:
      throw std::logic_error("ltlf_nnf: not an LTLf formula");
  }
}

FormulaId ltlf_nnf_neg(FormulaId f) {
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return f_ff();
    case FKind::FF: return f_tt();
    case FKind::True: return f_not(f_true());
    case FKind::False: return f_tt();
    case FKind::Atom: return f_not_atom(atom_name(f));
    case FKind::NotAtom: return f_atom(atom_name(f));
    case FKind::Last: return f_not_atom(kLastProp);
    case FKind::Not:
      if (fnode(n.a).kind == FKind::True) return f_true();
      return ltlf_nnf_pos(n.a);
    case FKind::And: return f_or(ltlf_nnf_neg(n.a), ltlf_nnf_neg(n.b));
    case FKind::Or: return f_and(ltlf_nnf_neg(n.a), ltlf_nnf_neg(n.b));
    case FKind::Next: return f_weak_next(ltlf_nnf_neg(n.a));
    case FKind::WeakNext: return f_next(ltlf_nnf_neg(n.a));
    case FKind::Until: return f_release(ltlf_nnf_neg(n.a), ltlf_nnf_neg(n.b));
    case FKind::Release: return f_until(ltlf_nnf_neg(n.a), ltlf_nnf_neg(n.b));
    case FKind::Eventually: return f_always(ltlf_nnf_neg(n.a));
    case FKind::Always: return f_eventually(ltlf_nnf_neg(n.a));
    default:
      throw std::logic_error("ltlf_nnf: not an LTLf formula");
  }
}

}  // namespace

FormulaId ltlf_nnf(FormulaId f) { return ltlf_nnf_pos(f); }

bool is_ltlf(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::End:
    case FKind::Diamond:
    case FKind::Box:
    case FKind::TMark:
    case FKind::FMark:
      return false;
    case FKind::Not:
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Eventually:
    case FKind::Always:
      return is_ltlf(n.a);
    case FKind::And:
    case FKind::Or:
    case FKind::Until:
    case FKind::Release:
      return is_ltlf(n.a) && is_ltlf(n.b);
    default:
      return true;
  }
}

}  // namespace ldlmdp
