#include "ldlmdp/formula.hpp"

#include <array>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ldlmdp {
namespace {

struct Arena {
  std::vector<FormulaNode> fnodes;
  std::vector<PathNode> pnodes;
  std::vector<std::string> names;
  std::unordered_map<std::string, uint32_t> name_ix;
  std::map<std::array<uint32_t, 4>, FormulaId> fmap;
  std::map<std::array<uint32_t, 3>, PathId> pmap;
  std::mutex mu;

  static Arena& get() {
    static Arena a;
    return a;
  }

  FormulaId intern_f(FKind k, uint32_t a, uint32_t b, uint32_t name) {
    std::lock_guard<std::mutex> lock(mu);
    std::array<uint32_t, 4> key{static_cast<uint32_t>(k), a, b, name};
    auto it = fmap.find(key);
    if (it != fmap.end()) return it->second;
    FormulaId id = static_cast<FormulaId>(fnodes.size());
    fnodes.push_back(FormulaNode{k, a, b, name});
    fmap.emplace(key, id);
    return id;
  }

  PathId intern_p(PKind k, uint32_t a, uint32_t b) {
    std::lock_guard<std::mutex> lock(mu);
    std::array<uint32_t, 3> key{static_cast<uint32_t>(k), a, b};
    auto it = pmap.find(key);
    if (it != pmap.end()) return it->second;
    PathId id = static_cast<PathId>(pnodes.size());
    pnodes.push_back(PathNode{k, a, b});
    pmap.emplace(key, id);
    return id;
  }

  uint32_t intern_name(const std::string& s) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = name_ix.find(s);
    if (it != name_ix.end()) return it->second;
    uint32_t ix = static_cast<uint32_t>(names.size());
    names.push_back(s);
    name_ix.emplace(s, ix);
    return ix;
  }
};

}  // namespace

FormulaId f_tt() { return Arena::get().intern_f(FKind::TT, kNoId, kNoId, kNoId); }
FormulaId f_ff() { return Arena::get().intern_f(FKind::FF, kNoId, kNoId, kNoId); }
FormulaId f_true() { return Arena::get().intern_f(FKind::True, kNoId, kNoId, kNoId); }
FormulaId f_false() { return Arena::get().intern_f(FKind::False, kNoId, kNoId, kNoId); }

FormulaId f_atom(const std::string& name) {
  Arena& a = Arena::get();
  return a.intern_f(FKind::Atom, kNoId, kNoId, a.intern_name(name));
}

FormulaId f_not_atom(const std::string& name) {
  Arena& a = Arena::get();
  return a.intern_f(FKind::NotAtom, kNoId, kNoId, a.intern_name(name));
}

FormulaId f_not(FormulaId f) { return Arena::get().intern_f(FKind::Not, f, kNoId, kNoId); }
FormulaId f_and(FormulaId a, FormulaId b) { return Arena::get().intern_f(FKind::And, a, b, kNoId); }
FormulaId f_or(FormulaId a, FormulaId b) { return Arena::get().intern_f(FKind::Or, a, b, kNoId); }
FormulaId f_next(FormulaId f) { return Arena::get().intern_f(FKind::Next, f, kNoId, kNoId); }
FormulaId f_weak_next(FormulaId f) { return Arena::get().intern_f(FKind::WeakNext, f, kNoId, kNoId); }
FormulaId f_until(FormulaId a, FormulaId b) { return Arena::get().intern_f(FKind::Until, a, b, kNoId); }
FormulaId f_release(FormulaId a, FormulaId b) { return Arena::get().intern_f(FKind::Release, a, b, kNoId); }
FormulaId f_eventually(FormulaId f) { return Arena::get().intern_f(FKind::Eventually, f, kNoId, kNoId); }
FormulaId f_always(FormulaId f) { return Arena::get().intern_f(FKind::Always, f, kNoId, kNoId); }
FormulaId f_last() { return Arena::get().intern_f(FKind::Last, kNoId, kNoId, kNoId); }
FormulaId f_end() { return Arena::get().intern_f(FKind::End, kNoId, kNoId, kNoId); }
FormulaId f_diamond(PathId p, FormulaId f) { return Arena::get().intern_f(FKind::Diamond, p, f, kNoId); }
FormulaId f_box(PathId p, FormulaId f) { return Arena::get().intern_f(FKind::Box, p, f, kNoId); }
FormulaId f_tmark(FormulaId f) { return Arena::get().intern_f(FKind::TMark, f, kNoId, kNoId); }
FormulaId f_fmark(FormulaId f) { return Arena::get().intern_f(FKind::FMark, f, kNoId, kNoId); }

PathId p_guard(FormulaId prop) { return Arena::get().intern_p(PKind::Guard, prop, kNoId); }
PathId p_test(FormulaId f) { return Arena::get().intern_p(PKind::Test, f, kNoId); }
PathId p_union(PathId a, PathId b) { return Arena::get().intern_p(PKind::Union, a, b); }
PathId p_concat(PathId a, PathId b) { return Arena::get().intern_p(PKind::Concat, a, b); }
PathId p_star(PathId a) { return Arena::get().intern_p(PKind::Star, a, kNoId); }

const FormulaNode& fnode(FormulaId id) { return Arena::get().fnodes.at(id); }
const PathNode& pnode(PathId id) { return Arena::get().pnodes.at(id); }

const std::string& atom_name(FormulaId id) {
  const FormulaNode& n = fnode(id);
  assert(n.kind == FKind::Atom || n.kind == FKind::NotAtom);
  return Arena::get().names.at(n.name);
}

bool is_propositional(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::NotAtom:
      return true;
    case FKind::Not:
      return is_propositional(n.a);
    case FKind::And:
    case FKind::Or:
      return is_propositional(n.a) && is_propositional(n.b);
    default:
      return false;
  }
}

size_t formula_size(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::TT:
    case FKind::FF:
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::NotAtom:
    case FKind::Last:
    case FKind::End:
      return 1;
    case FKind::Not:
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Eventually:
    case FKind::Always:
    case FKind::TMark:
    case FKind::FMark:
      return 1 + formula_size(n.a);
    case FKind::And:
    case FKind::Or:
    case FKind::Until:
    case FKind::Release:
      return 1 + formula_size(n.a) + formula_size(n.b);
    case FKind::Diamond:
    case FKind::Box:
      return 1 + path_size(n.a) + formula_size(n.b);
  }
  return 1;
}

size_t path_size(PathId p) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
    case PKind::Test:
      return 1 + formula_size(n.a);
    case PKind::Star:
      return 1 + path_size(n.a);
    case PKind::Union:
    case PKind::Concat:
      return 1 + path_size(n.a) + path_size(n.b);
  }
  return 1;
}

namespace {

void collect_props_path(PathId p, std::vector<std::string>& out);

void collect_props_rec(FormulaId f, std::vector<std::string>& out) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::Atom:
    case FKind::NotAtom:
      out.push_back(atom_name(f));
      return;
    case FKind::Not:
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Eventually:
    case FKind::Always:
    case FKind::TMark:
    case FKind::FMark:
      collect_props_rec(n.a, out);
      return;
    case FKind::And:
    case FKind::Or:
    case FKind::Until:
    case FKind::Release:
      collect_props_rec(n.a, out);
      collect_props_rec(n.b, out);
      return;
    case FKind::Diamond:
    case FKind::Box:
      collect_props_path(n.a, out);
      collect_props_rec(n.b, out);
      return;
    default:
      return;
  }
}

void collect_props_path(PathId p, std::vector<std::string>& out) {
  const PathNode& n = pnode(p);
  switch (n.kind) {
    case PKind::Guard:
    case PKind::Test:
      collect_props_rec(n.a, out);
      return;
    case PKind::Star:
      collect_props_path(n.a, out);
      return;
    case PKind::Union:
    case PKind::Concat:
      collect_props_path(n.a, out);
      collect_props_path(n.b, out);
      return;
  }
}

}  // namespace

void collect_props(FormulaId f, std::vector<std::string>& out) {
  collect_props_rec(f, out);
}

bool is_temporal(FormulaId f) {
  const FormulaNode& n = fnode(f);
  switch (n.kind) {
    case FKind::Next:
    case FKind::WeakNext:
    case FKind::Until:
    case FKind::Release:
    case FKind::Eventually:
    case FKind::Always:
    case FKind::Last:
    case FKind::End:
    case FKind::Diamond:
    case FKind::Box:
    case FKind::TMark:
    case FKind::FMark:
      return true;
    case FKind::Not:
      return is_temporal(n.a);
    case FKind::And:
    case FKind::Or:
      return is_temporal(n.a) || is_temporal(n.b);
    default:
      return false;
  }
}

}  // namespace ldlmdp
