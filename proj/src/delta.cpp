#include "ldlmdp/delta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ldlmdp/rewrite.hpp"
#include "ldlmdp/semantics.hpp"

namespace ldlmdp {

PosBool PosBool::mk_atom(FormulaId f) {
  FKind k = fnode(f).kind;
  if (k == FKind::TT) return mk_true();
  if (k == FKind::FF) return mk_false();
  return PosBool{K::Atom, f, {}};
}

PosBool PosBool::mk_and(PosBool a, PosBool b) {
  if (a.k == K::False || b.k == K::False) return mk_false();
  if (a.k == K::True) return b;
  if (b.k == K::True) return a;
  PosBool r{K::And, kNoId, {}};
  r.kids.push_back(std::move(a));
  r.kids.push_back(std::move(b));
  return r;
}

PosBool PosBool::mk_or(PosBool a, PosBool b) {
  if (a.k == K::True || b.k == K::True) return mk_true();
  if (a.k == K::False) return b;
  if (b.k == K::False) return a;
  PosBool r{K::Or, kNoId, {}};
  r.kids.push_back(std::move(a));
  r.kids.push_back(std::move(b));
  return r;
}

namespace {

PathId e_expand_path(PathId p);

std::unordered_map<FormulaId, FormulaId>& e_memo() {
  static std::unordered_map<FormulaId, FormulaId> m;
  return m;
}

}  // namespace

FormulaId e_expand(FormulaId f) {
  auto& memo = e_memo();
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const FormulaNode n = fnode(f);
  FormulaId out = f;
  switch (n.kind) {
    case FKind::TMark:
    case FKind::FMark:
      out = e_expand(n.a);
      break;
    case FKind::Not:
      out = f_not(e_expand(n.a));
      break;
    case FKind::And:
      out = f_and(e_expand(n.a), e_expand(n.b));
      break;
    case FKind::Or:
      out = f_or(e_expand(n.a), e_expand(n.b));
      break;
    case FKind::Diamond:
      out = f_diamond(e_expand_path(n.a), e_expand(n.b));
      break;
    case FKind::Box:
      out = f_box(e_expand_path(n.a), e_expand(n.b));
      break;
    default:
      break;  // leaves and LTLf operators carry no markers
  }
  memo.emplace(f, out);
  return out;
}

namespace {

PathId e_expand_path(PathId p) {
  const PathNode n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
      return p;
    case PKind::Test:
      return p_test(e_expand(n.a));
    case PKind::Union:
      return p_union(e_expand_path(n.a), e_expand_path(n.b));
    case PKind::Concat:
      return p_concat(e_expand_path(n.a), e_expand_path(n.b));
    case PKind::Star:
      return p_star(e_expand_path(n.a));
  }
  return p;
}

void dnf(const PosBool& pb, std::vector<MacroState>& acc) {
  switch (pb.k) {
    case PosBool::K::True:
      acc.push_back({});
      return;
    case PosBool::K::False:
      return;
    case PosBool::K::Atom:
      acc.push_back({pb.atom});
      return;
    case PosBool::K::Or:
      for (const auto& kid : pb.kids) dnf(kid, acc);
      return;
    case PosBool::K::And: {
      std::vector<MacroState> left, right;
      dnf(pb.kids[0], left);
      dnf(pb.kids[1], right);
      for (const auto& l : left)
        for (const auto& r : right) {
          MacroState m = l;
          m.insert(m.end(), r.begin(), r.end());
          std::sort(m.begin(), m.end());
          m.erase(std::unique(m.begin(), m.end()), m.end());
          acc.push_back(std::move(m));
        }
      return;
    }
  }
}

bool subset_of(const MacroState& a, const MacroState& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<MacroState> minimal_models(const PosBool& pb) {
  std::vector<MacroState> all;
  dnf(pb, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<MacroState> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < all.size() && minimal; ++j)
      if (j != i && subset_of(all[j], all[i]) && all[j] != all[i])
        minimal = false;
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

DeltaContext::DeltaContext(const Alphabet& a) : alpha_(a) {
  if (!alpha_.has_last)
    throw std::logic_error("DeltaContext requires the last-extended alphabet");
}

bool DeltaContext::guard_holds(FormulaId g, Letter letter) const {
  return eval_prop(alpha_, letter, g);
}

PosBool DeltaContext::delta(FormulaId f, Letter letter) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return PosBool::mk_true();
    case FKind::FF: return PosBool::mk_false();
    case FKind::True: return PosBool::mk_true();
    case FKind::False: return PosBool::mk_false();
    case FKind::Not:
      // NNF leaf: negated propositional constant.
      if (fnode(n.a).kind == FKind::True) return PosBool::mk_false();
      if (fnode(n.a).kind == FKind::False) return PosBool::mk_true();
      throw std::logic_error("delta: input not in NNF");
    case FKind::Atom: {
      auto ix = alpha_.index_of(atom_name(f));
      if (!ix) throw UndeclaredProp("undeclared proposition: " + atom_name(f));
      return PosBool::mk_const((letter >> *ix) & 1);
    }
    case FKind::NotAtom: {
      auto ix = alpha_.index_of(atom_name(f));
      if (!ix) throw UndeclaredProp("undeclared proposition: " + atom_name(f));
      return PosBool::mk_const(!((letter >> *ix) & 1));
    }
    case FKind::And:
      return PosBool::mk_and(delta(n.a, letter), delta(n.b, letter));
    case FKind::Or:
      return PosBool::mk_or(delta(n.a, letter), delta(n.b, letter));
    case FKind::Diamond:
      return dia(n.a, n.b, f, letter);
    case FKind::Box:
      return box(n.a, n.b, f, letter);
    case FKind::TMark: return PosBool::mk_true();
    case FKind::FMark: return PosBool::mk_false();
    default:
      throw std::logic_error("delta: sugar operator in LDLf table");
  }
}

PosBool DeltaContext::dia(PathId p, FormulaId cont, FormulaId whole,
                          Letter letter) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard: {
      if (!guard_holds(n.a, letter)) return PosBool::mk_false();
      FormulaId next = e_expand(cont);
      if (letter & alpha_.last_mask())
        return PosBool::mk_const(eps_truth(next));
      return PosBool::mk_atom(next);
    }
    case PKind::Test:
      return PosBool::mk_and(delta(n.a, letter), delta(cont, letter));
    case PKind::Union:
      return PosBool::mk_or(delta(f_diamond(n.a, cont), letter),
                            delta(f_diamond(n.b, cont), letter));
    case PKind::Concat:
      return delta(f_diamond(n.a, f_diamond(n.b, cont)), letter);
    case PKind::Star:
      return PosBool::mk_or(delta(cont, letter),
                            delta(f_diamond(n.a, f_fmark(whole)), letter));
  }
  return PosBool::mk_false();
}

PosBool DeltaContext::box(PathId p, FormulaId cont, FormulaId whole,
                          Letter letter) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard: {
      if (!guard_holds(n.a, letter)) return PosBool::mk_true();
      FormulaId next = e_expand(cont);
      if (letter & alpha_.last_mask())
        return PosBool::mk_const(eps_truth(next));
      return PosBool::mk_atom(next);
    }
    case PKind::Test:
      return PosBool::mk_or(delta(nnf_negate(n.a), letter),
                            delta(cont, letter));
    case PKind::Union:
      return PosBool::mk_and(delta(f_box(n.a, cont), letter),
                             delta(f_box(n.b, cont), letter));
    case PKind::Concat:
      return delta(f_box(n.a, f_box(n.b, cont)), letter);
    case PKind::Star:
      return PosBool::mk_and(delta(cont, letter),
                             delta(f_box(n.a, f_tmark(whole)), letter));
  }
  return PosBool::mk_true();
}

PosBool DeltaContext::delta_epsilon(FormulaId f) {
  return PosBool::mk_const(eps_truth(f));
}

PosBool DeltaContext::delta_ltlf(FormulaId f, Letter letter) {
  const FormulaNode& n = fnode(f);
  const bool at_last = (letter & alpha_.last_mask()) != 0;
  switch (n.kind) {
    case FKind::TT:
    case FKind::True:
      return PosBool::mk_true();
    case FKind::FF:
    case FKind::False:
      return PosBool::mk_false();
    case FKind::Not:
      if (fnode(n.a).kind == FKind::True) return PosBool::mk_false();
      if (fnode(n.a).kind == FKind::False) return PosBool::mk_true();
      throw std::logic_error("delta_ltlf: input not in NNF");
    case FKind::Atom: {
      auto ix = alpha_.index_of(atom_name(f));
      if (!ix) throw UndeclaredProp("undeclared proposition: " + atom_name(f));
      return PosBool::mk_const((letter >> *ix) & 1);
    }
    case FKind::NotAtom: {
      auto ix = alpha_.index_of(atom_name(f));
      if (!ix) throw UndeclaredProp("undeclared proposition: " + atom_name(f));
      return PosBool::mk_const(!((letter >> *ix) & 1));
    }
    case FKind::And:
      return PosBool::mk_and(delta_ltlf(n.a, letter), delta_ltlf(n.b, letter));
    case FKind::Or:
      return PosBool::mk_or(delta_ltlf(n.a, letter), delta_ltlf(n.b, letter));
    case FKind::Next:
      return at_last ? PosBool::mk_false() : PosBool::mk_atom(n.a);
    case FKind::WeakNext:
      return at_last ? PosBool::mk_true() : PosBool::mk_atom(n.a);
    case FKind::Eventually:
      return PosBool::mk_or(delta_ltlf(n.a, letter),
                            at_last ? PosBool::mk_false() : PosBool::mk_atom(f));
    case FKind::Always:
      return PosBool::mk_and(delta_ltlf(n.a, letter),
                             at_last ? PosBool::mk_true() : PosBool::mk_atom(f));
    case FKind::Until:
      return PosBool::mk_or(
          delta_ltlf(n.b, letter),
          PosBool::mk_and(delta_ltlf(n.a, letter),
                          at_last ? PosBool::mk_false() : PosBool::mk_atom(f)));
    case FKind::Release:
      return PosBool::mk_and(
          delta_ltlf(n.b, letter),
          PosBool::mk_or(delta_ltlf(n.a, letter),
                         at_last ? PosBool::mk_true() : PosBool::mk_atom(f)));
    default:
      throw std::logic_error("delta_ltlf: not an LTLf formula");
  }
}

bool eps_truth_ltlf(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::TT: return true;
    case FKind::FF: return false;
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
      return false;
    case FKind::NotAtom: return true;
    case FKind::Not: return fnode(n.a).kind == FKind::True ||
                            fnode(n.a).kind == FKind::False;
    case FKind::And: return eps_truth_ltlf(n.a) && eps_truth_ltlf(n.b);
    case FKind::Or: return eps_truth_ltlf(n.a) || eps_truth_ltlf(n.b);
    case FKind::Next:
    case FKind::Eventually:
    case FKind::Until:
      return false;
    case FKind::WeakNext:
    case FKind::Always:
    case FKind::Release:
      return true;
    default:
      throw std::logic_error("eps_truth_ltlf: not an LTLf formula");
  }
}

PosBool DeltaContext::delta_epsilon_ltlf(FormulaId f) {
  return PosBool::mk_const(eps_truth_ltlf(f));
}

namespace {

void closure_rec(FormulaId f, std::set<FormulaId>& seen) {
  if (!seen.insert(f).second) return;
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::And:
    case FKind::Or:
      closure_rec(n.a, seen);
      closure_rec(n.b, seen);
      return;
    case FKind::Diamond:
    case FKind::Box: {
      const bool diamond = n.kind == FKind::Diamond;
      const PathNode pn = pnode(n.a);
      closure_rec(n.b, seen);
      switch (pn.kind) {
        case PKind::Guard:
          return;
        case PKind::Test:
          closure_rec(pn.a, seen);
          closure_rec(nnf_negate(pn.a), seen);
          return;
        case PKind::Union:
          closure_rec(diamond ? f_diamond(pn.a, n.b) : f_box(pn.a, n.b), seen);
          closure_rec(diamond ? f_diamond(pn.b, n.b) : f_box(pn.b, n.b), seen);
          return;
        case PKind::Concat: {
          FormulaId inner = diamond ? f_diamond(pn.b, n.b) : f_box(pn.b, n.b);
          closure_rec(diamond ? f_diamond(pn.a, inner) : f_box(pn.a, inner),
                      seen);
          return;
        }
        case PKind::Star: {
          FormulaId step = diamond ? f_diamond(pn.a, f) : f_box(pn.a, f);
          closure_rec(step, seen);
          return;
        }
      }
      return;
    }
    default:
      return;
  }
}

}  // namespace

std::vector<FormulaId> closure(FormulaId f) {
  std::set<FormulaId> seen;
  closure_rec(f, seen);
  return {seen.begin(), seen.end()};
}

namespace {

void closure_ltlf_rec(FormulaId f, std::set<FormulaId>& seen) {
  if (!seen.insert(f).second) return;
  const FormulaNode n = fnode(f);
  switch (n.kind) {
    case FKind::Not:
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Eventually:
    case FKind::Always:
      closure_ltlf_rec(n.a, seen);
      return;
    case FKind::And:
    case FKind::Or:
    case FKind::Until:
    case FKind::Release:
      closure_ltlf_rec(n.a, seen);
      closure_ltlf_rec(n.b, seen);
      return;
    default:
      return;
  }
}

}  // namespace

std::vector<FormulaId> closure_ltlf(FormulaId f) {
  std::set<FormulaId> seen;
  closure_ltlf_rec(f, seen);
  return {seen.begin(), seen.end()};
}

}  // namespace ldlmdp
