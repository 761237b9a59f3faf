#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "focalis/term.hpp"

namespace focalis {

// Intuitionistic formulas. The two conjunctions differ only in polarity;
// they are interprovable. Negation is not primitive: ~F is parsed as
// F -> false. Quantifier bodies live in `left`, the bound variable in
// `name`.
enum class IKind {
  Atom,
  True,
  False,
  ConjPos,  // &+
  ConjNeg,  // &-
  Disj,     // |
  Impl,     // ->
  Exists,
  Forall,
};

struct IFormula;
using IF = std::shared_ptr<const IFormula>;

struct IFormula {
  IKind kind = IKind::Atom;
  std::string name;        // Atom: predicate symbol; Exists/Forall: bound variable
  std::vector<Term> args;  // Atom only
  IF left, right;
  uint64_t hash = 0;
};

namespace detail {
inline IF mk_i(IKind k, std::string name, std::vector<Term> args, IF l, IF r) {
  auto f = std::make_shared<IFormula>();
  f->kind = k;
  f->name = std::move(name);
  f->args = std::move(args);
  f->left = std::move(l);
  f->right = std::move(r);
  uint64_t h = fnv1a(kFnvSeed, uint64_t(k) + 11);
  h = fnv1a(h, f->name);
  for (const auto& a : f->args) h = fnv1a(h, term_hash(a));
  if (f->left) h = fnv1a(h, f->left->hash);
  if (f->right) h = fnv1a(h, f->right->hash);
  f->hash = h;
  return f;
}
}  // namespace detail

inline IF iatom(std::string name, std::vector<Term> args = {}) {
  return detail::mk_i(IKind::Atom, std::move(name), std::move(args), nullptr, nullptr);
}
inline IF itrue() {
  static const IF f = detail::mk_i(IKind::True, "", {}, nullptr, nullptr);
  return f;
}
inline IF ifalse() {
  static const IF f = detail::mk_i(IKind::False, "", {}, nullptr, nullptr);
  return f;
}
inline IF iand_pos(IF a, IF b) {
  return detail::mk_i(IKind::ConjPos, "", {}, std::move(a), std::move(b));
}
inline IF iand_neg(IF a, IF b) {
  return detail::mk_i(IKind::ConjNeg, "", {}, std::move(a), std::move(b));
}
inline IF ior(IF a, IF b) {
  return detail::mk_i(IKind::Disj, "", {}, std::move(a), std::move(b));
}
inline IF iimpl(IF a, IF b) {
  return detail::mk_i(IKind::Impl, "", {}, std::move(a), std::move(b));
}
inline IF inot(IF a) { return iimpl(std::move(a), ifalse()); }
inline IF iexists(std::string var, IF body) {
  return detail::mk_i(IKind::Exists, std::move(var), {}, std::move(body), nullptr);
}
inline IF iforall(std::string var, IF body) {
  return detail::mk_i(IKind::Forall, std::move(var), {}, std::move(body), nullptr);
}

inline bool is_iatom(const IF& f) { return f->kind == IKind::Atom; }
inline bool is_binary(IKind k) {
  return k == IKind::ConjPos || k == IKind::ConjNeg || k == IKind::Disj || k == IKind::Impl;
}
inline bool is_quant(IKind k) { return k == IKind::Exists || k == IKind::Forall; }

inline int compare(const IF& a, const IF& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name); c != 0) return c < 0 ? -1 : 1;
  if (a->args.size() != b->args.size()) return a->args.size() < b->args.size() ? -1 : 1;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (int c = compare(a->args[i], b->args[i]); c != 0) return c;
  if (!!a->left != !!b->left) return a->left ? 1 : -1;
  if (a->left)
    if (int c = compare(a->left, b->left); c != 0) return c;
  if (!!a->right != !!b->right) return a->right ? 1 : -1;
  if (a->right)
    if (int c = compare(a->right, b->right); c != 0) return c;
  return 0;
}
inline bool iequal(const IF& a, const IF& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  return compare(a, b) == 0;
}

struct ILess {
  bool operator()(const IF& a, const IF& b) const { return compare(a, b) < 0; }
};

// capture-free for ground `by`; inner binders of the same name shadow
inline IF subst(const IF& f, const std::string& var, const Term& by) {
  switch (f->kind) {
    case IKind::Atom: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const auto& a : f->args) as.push_back(subst(a, var, by));
      return iatom(f->name, std::move(as));
    }
    case IKind::True:
    case IKind::False:
      return f;
    case IKind::Exists:
    case IKind::Forall:
      if (f->name == var) return f;
      return detail::mk_i(f->kind, f->name, {}, subst(f->left, var, by), nullptr);
    default:
      return detail::mk_i(f->kind, "", {}, subst(f->left, var, by), subst(f->right, var, by));
  }
}

inline void collect_atoms(const IF& f, std::set<std::string>& out) {
  if (f->kind == IKind::Atom) out.insert(f->name);
  if (f->left) collect_atoms(f->left, out);
  if (f->right) collect_atoms(f->right, out);
}

// true if the (constant or variable) symbol occurs in any term of f
inline bool occurs_symbol(const IF& f, const std::string& symbol) {
  for (const auto& a : f->args)
    if (occurs(a, symbol)) return true;
  if (f->left && occurs_symbol(f->left, symbol)) return true;
  if (f->right && occurs_symbol(f->right, symbol)) return true;
  return false;
}

// swap every &+ for &- and vice versa
inline IF flip_conj(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
    case IKind::True:
    case IKind::False:
      return f;
    case IKind::ConjPos:
      return iand_neg(flip_conj(f->left), flip_conj(f->right));
    case IKind::ConjNeg:
      return iand_pos(flip_conj(f->left), flip_conj(f->right));
    case IKind::Exists:
    case IKind::Forall:
      return detail::mk_i(f->kind, f->name, {}, flip_conj(f->left), nullptr);
    default:
      return detail::mk_i(f->kind, "", {}, flip_conj(f->left), flip_conj(f->right));
  }
}

inline size_t connective_count(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
    case IKind::True:
    case IKind::False:
      return 0;
    case IKind::Exists:
    case IKind::Forall:
      return 1 + connective_count(f->left);
    default:
      return 1 + connective_count(f->left) + connective_count(f->right);
  }
}

}  // namespace focalis
