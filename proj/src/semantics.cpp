#include "ldlmdp/semantics.hpp"

#include <set>
#include <tuple>

namespace ldlmdp {
namespace {

class Evaluator {
 public:
  Evaluator(const Alphabet& a, const Trace& t) : a_(a), t_(t) {}

  bool sat(size_t i, FormulaId f) {
    const FormulaNode& n = fnode(f);
    const size_t len = t_.length();
    switch (n.kind) {
      case FKind::TT: return true;
      case FKind::FF: return false;
      case FKind::True: return i < len;
      case FKind::False: return false;
      case FKind::Atom:
        return i < len && holds(i, f);
      case FKind::NotAtom:
        return i >= len || !holds(i, f);
      case FKind::Last: return len > 0 && i == len - 1;
      case FKind::End: return i >= len;
      case FKind::Not: return !sat(i, n.a);
      case FKind::And: return sat(i, n.a) && sat(i, n.b);
      case FKind::Or: return sat(i, n.a) || sat(i, n.b);
      case FKind::Next:
        return i + 1 < len && sat(i + 1, n.a);
      case FKind::WeakNext:
        return i + 1 >= len || sat(i + 1, n.a);
      case FKind::Until:
        for (size_t j = i; j < len; ++j) {
          if (sat(j, n.b)) return true;
          if (!sat(j, n.a)) return false;
        }
        return false;
      case FKind::Release:
        for (size_t j = i; j < len; ++j) {
          if (!sat(j, n.b)) return false;
          if (sat(j, n.a)) return true;
        }
        return true;
      case FKind::Eventually:
        for (size_t j = i; j < len; ++j)
          if (sat(j, n.a)) return true;
        return false;
      case FKind::Always:
        for (size_t j = i; j < len; ++j)
          if (!sat(j, n.a)) return false;
        return true;
      case FKind::Diamond:
        for (size_t j = i; j <= len; ++j)
          if (path(i, j, n.a) && sat(j, n.b)) return true;
        return false;
      case FKind::Box:
        for (size_t j = i; j <= len; ++j)
          if (path(i, j, n.a) && !sat(j, n.b)) return false;
        return true;
      case FKind::TMark: return true;
      case FKind::FMark: return false;
    }
    return false;
  }

  bool path(size_t i, size_t j, PathId p) {
    const PathNode& n = pnode(p);
    const size_t len = t_.length();
    switch (n.kind) {
      case PKind::Guard:
        return j == i + 1 && j <= len && eval_prop(a_, t_.letters[i], n.a);
      case PKind::Test:
        return j == i && sat(i, n.a);
      case PKind::Union:
        return path(i, j, n.a) || path(i, j, n.b);
      case PKind::Concat:
        for (size_t k = i; k <= j; ++k)
          if (path(i, k, n.a) && path(k, j, n.b)) return true;
        return false;
      case PKind::Star: {
        if (j == i) return true;
        // Least-fixpoint search; an in-progress (p,i,j) query contributes
        // nothing, which cuts cycles through nullable bodies like (tt?)*.
        auto key = std::make_tuple(p, i, j);
        if (in_progress_.count(key)) return false;
        in_progress_.insert(key);
        bool ok = false;
        for (size_t k = i; k <= j && !ok; ++k)
          if (path(i, k, n.a) && path(k, j, p)) ok = true;
        in_progress_.erase(key);
        return ok;
      }
    }
    return false;
  }

 private:
  bool holds(size_t i, FormulaId atom) {
    const std::string& name = atom_name(atom);
    if (name == kLastProp) return i == t_.length() - 1;
    auto ix = a_.index_of(name);
    if (!ix) throw UndeclaredProp("undeclared proposition: " + name);
    return (t_.letters[i] >> *ix) & 1;
  }

  const Alphabet& a_;
  const Trace& t_;
  std::set<std::tuple<PathId, size_t, size_t>> in_progress_;
};

}  // namespace

bool satisfies(const Alphabet& a, const Trace& t, FormulaId f) {
  return Evaluator(a, t).sat(0, f);
}

bool satisfies_at(const Alphabet& a, const Trace& t, size_t i, FormulaId f) {
  return Evaluator(a, t).sat(i, f);
}

bool path_matches(const Alphabet& a, const Trace& t, size_t i, size_t j,
                  PathId rho) {
  return Evaluator(a, t).path(i, j, rho);
}

bool eval_prop(const Alphabet& a, Letter letter, FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom:
    case FKind::NotAtom: {
      auto ix = a.index_of(atom_name(f));
      if (!ix) throw UndeclaredProp("undeclared proposition: " + atom_name(f));
      bool bit = (letter >> *ix) & 1;
      return n.kind == FKind::Atom ? bit : !bit;
    }
    case FKind::Not: return !eval_prop(a, letter, n.a);
    case FKind::And: return eval_prop(a, letter, n.a) && eval_prop(a, letter, n.b);
    case FKind::Or: return eval_prop(a, letter, n.a) || eval_prop(a, letter, n.b);
    default:
      throw std::logic_error("eval_prop: not a propositional formula");
  }
}

}  // namespace ldlmdp
