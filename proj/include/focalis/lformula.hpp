#pragma once

#include <memory>
#include <string>
#include <vector>

#include "focalis/term.hpp"

namespace focalis {

// Linear-logic formulas in negation normal form. There is no linear
// implication constructor: A -o B is eliminated at construction as
// lneg(A) par B. Negation on compound formulas is computed by lneg.
enum class LKind {
  Atom,     // K
  NegAtom,  // K^
  One,      // 1
  Zero,     // 0
  Top,      // top
  Bot,      // bot
  Tensor,   // *
  Plus,     // (+)
  With,     // &
  Par,      // par
  Bang,     // !
  Quest,    // ?
  Exists,
  Forall,
};

struct LFormula;
using LF = std::shared_ptr<const LFormula>;

struct LFormula {
  LKind kind = LKind::Atom;
  std::string name;        // atoms: symbol; quantifiers: bound variable
  std::vector<Term> args;  // atoms only
  LF left, right;          // unary connectives and quantifier bodies use left
  uint64_t hash = 0;
};

namespace detail {
inline LF mk_l(LKind k, std::string name, std::vector<Term> args, LF l, LF r) {
  auto f = std::make_shared<LFormula>();
  f->kind = k;
  f->name = std::move(name);
  f->args = std::move(args);
  f->left = std::move(l);
  f->right = std::move(r);
  uint64_t h = fnv1a(kFnvSeed, uint64_t(k) + 71);
  h = fnv1a(h, f->name);
  for (const auto& a : f->args) h = fnv1a(h, term_hash(a));
  if (f->left) h = fnv1a(h, f->left->hash);
  if (f->right) h = fnv1a(h, f->right->hash);
  f->hash = h;
  return f;
}
}  // namespace detail

inline LF latom(std::string name, std::vector<Term> args = {}) {
  return detail::mk_l(LKind::Atom, std::move(name), std::move(args), nullptr, nullptr);
}
inline LF lneg_atom(std::string name, std::vector<Term> args = {}) {
  return detail::mk_l(LKind::NegAtom, std::move(name), std::move(args), nullptr, nullptr);
}
inline LF lone() {
  static const LF f = detail::mk_l(LKind::One, "", {}, nullptr, nullptr);
  return f;
}
inline LF lzero() {
  static const LF f = detail::mk_l(LKind::Zero, "", {}, nullptr, nullptr);
  return f;
}
inline LF ltop() {
  static const LF f = detail::mk_l(LKind::Top, "", {}, nullptr, nullptr);
  return f;
}
inline LF lbot() {
  static const LF f = detail::mk_l(LKind::Bot, "", {}, nullptr, nullptr);
  return f;
}
inline LF ltensor(LF a, LF b) {
  return detail::mk_l(LKind::Tensor, "", {}, std::move(a), std::move(b));
}
inline LF lplus(LF a, LF b) {
  return detail::mk_l(LKind::Plus, "", {}, std::move(a), std::move(b));
}
inline LF lwith(LF a, LF b) {
  return detail::mk_l(LKind::With, "", {}, std::move(a), std::move(b));
}
inline LF lpar(LF a, LF b) {
  return detail::mk_l(LKind::Par, "", {}, std::move(a), std::move(b));
}
inline LF lbang(LF a) { return detail::mk_l(LKind::Bang, "", {}, std::move(a), nullptr); }
inline LF lquest(LF a) { return detail::mk_l(LKind::Quest, "", {}, std::move(a), nullptr); }
inline LF lexists(std::string var, LF body) {
  return detail::mk_l(LKind::Exists, std::move(var), {}, std::move(body), nullptr);
}
inline LF lforall(std::string var, LF body) {
  return detail::mk_l(LKind::Forall, std::move(var), {}, std::move(body), nullptr);
}

// negation normal form dual
inline LF lneg(const LF& f) {
  switch (f->kind) {
    case LKind::Atom:
      return lneg_atom(f->name, f->args);
    case LKind::NegAtom:
      return latom(f->name, f->args);
    case LKind::One:
      return lbot();
    case LKind::Bot:
      return lone();
    case LKind::Zero:
      return ltop();
    case LKind::Top:
      return lzero();
    case LKind::Tensor:
      return lpar(lneg(f->left), lneg(f->right));
    case LKind::Par:
      return ltensor(lneg(f->left), lneg(f->right));
    case LKind::Plus:
      return lwith(lneg(f->left), lneg(f->right));
    case LKind::With:
      return lplus(lneg(f->left), lneg(f->right));
    case LKind::Bang:
      return lquest(lneg(f->left));
    case LKind::Quest:
      return lbang(lneg(f->left));
    case LKind::Exists:
      return lforall(f->name, lneg(f->left));
    case LKind::Forall:
      return lexists(f->name, lneg(f->left));
  }
  return f;  // unreachable
}

// A -o B, eliminated at construction
inline LF llolli(const LF& a, LF b) { return lpar(lneg(a), std::move(b)); }

inline bool is_lliteral(const LF& f) {
  return f->kind == LKind::Atom || f->kind == LKind::NegAtom;
}

// top-level asynchronous connective: bot, par, ?, top, &, forall
inline bool is_asynchronous(const LF& f) {
  switch (f->kind) {
    case LKind::Bot:
    case LKind::Par:
    case LKind::Quest:
    case LKind::Top:
    case LKind::With:
    case LKind::Forall:
      return true;
    default:
      return false;
  }
}

// top-level synchronous connective: 1, *, !, 0, (+), exists
inline bool is_synchronous(const LF& f) {
  return !is_lliteral(f) && !is_asynchronous(f);
}

inline int compare(const LF& a, const LF& b) {
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
inline bool lequal(const LF& a, const LF& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  return compare(a, b) == 0;
}

struct LLess {
  bool operator()(const LF& a, const LF& b) const { return compare(a, b) < 0; }
};

inline LF subst(const LF& f, const std::string& var, const Term& by) {
  switch (f->kind) {
    case LKind::Atom:
    case LKind::NegAtom: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const auto& a : f->args) as.push_back(subst(a, var, by));
      return detail::mk_l(f->kind, f->name, std::move(as), nullptr, nullptr);
    }
    case LKind::Exists:
    case LKind::Forall:
      if (f->name == var) return f;
      return detail::mk_l(f->kind, f->name, {}, subst(f->left, var, by), nullptr);
    default:
      if (!f->left) return f;
      return detail::mk_l(f->kind, "", {}, subst(f->left, var, by),
                          f->right ? subst(f->right, var, by) : nullptr);
  }
}

inline bool occurs_symbol(const LF& f, const std::string& symbol) {
  for (const auto& a : f->args)
    if (occurs(a, symbol)) return true;
  if (f->left && occurs_symbol(f->left, symbol)) return true;
  if (f->right && occurs_symbol(f->right, symbol)) return true;
  return false;
}

}  // namespace focalis
