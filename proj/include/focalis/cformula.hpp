#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "focalis/term.hpp"

namespace focalis {

// Polarized classical formulas in negation normal form. Negation appears
// only on literals and on the propositional constants; both implications
// are definitional (A ->+ B parses as ~A |+ B, A ->- B as ~A |- B).
enum class CKind {
  PosLit,    // A
  NegLit,    // ~A
  True,      // #t
  False,     // #f
  NegTrue,   // ~#t
  NegFalse,  // ~#f
  AndPos,    // &+
  AndNeg,    // &-
  OrPos,     // |+
  OrNeg,     // |-
  Exists,
  Forall,
};

struct CFormula;
using CF = std::shared_ptr<const CFormula>;

struct CFormula {
  CKind kind = CKind::PosLit;
  std::string name;        // literals: atom name; quantifiers: bound variable
  std::vector<Term> args;  // literals only
  CF left, right;
  uint64_t hash = 0;
};

namespace detail {
inline CF mk_c(CKind k, std::string name, std::vector<Term> args, CF l, CF r) {
  auto f = std::make_shared<CFormula>();
  f->kind = k;
  f->name = std::move(name);
  f->args = std::move(args);
  f->left = std::move(l);
  f->right = std::move(r);
  uint64_t h = fnv1a(kFnvSeed, uint64_t(k) + 37);
  h = fnv1a(h, f->name);
  for (const auto& a : f->args) h = fnv1a(h, term_hash(a));
  if (f->left) h = fnv1a(h, f->left->hash);
  if (f->right) h = fnv1a(h, f->right->hash);
  f->hash = h;
  return f;
}
}  // namespace detail

inline CF cpos(std::string name, std::vector<Term> args = {}) {
  return detail::mk_c(CKind::PosLit, std::move(name), std::move(args), nullptr, nullptr);
}
inline CF cneg(std::string name, std::vector<Term> args = {}) {
  return detail::mk_c(CKind::NegLit, std::move(name), std::move(args), nullptr, nullptr);
}
inline CF ctrue() {
  static const CF f = detail::mk_c(CKind::True, "", {}, nullptr, nullptr);
  return f;
}
inline CF cfalse() {
  static const CF f = detail::mk_c(CKind::False, "", {}, nullptr, nullptr);
  return f;
}
inline CF cneg_true() {
  static const CF f = detail::mk_c(CKind::NegTrue, "", {}, nullptr, nullptr);
  return f;
}
inline CF cneg_false() {
  static const CF f = detail::mk_c(CKind::NegFalse, "", {}, nullptr, nullptr);
  return f;
}
inline CF cand_pos(CF a, CF b) {
  return detail::mk_c(CKind::AndPos, "", {}, std::move(a), std::move(b));
}
inline CF cand_neg(CF a, CF b) {
  return detail::mk_c(CKind::AndNeg, "", {}, std::move(a), std::move(b));
}
inline CF cor_pos(CF a, CF b) {
  return detail::mk_c(CKind::OrPos, "", {}, std::move(a), std::move(b));
}
inline CF cor_neg(CF a, CF b) {
  return detail::mk_c(CKind::OrNeg, "", {}, std::move(a), std::move(b));
}
inline CF cexists(std::string var, CF body) {
  return detail::mk_c(CKind::Exists, std::move(var), {}, std::move(body), nullptr);
}
inline CF cforall(std::string var, CF body) {
  return detail::mk_c(CKind::Forall, std::move(var), {}, std::move(body), nullptr);
}

inline bool is_literal(const CF& f) {
  return f->kind == CKind::PosLit || f->kind == CKind::NegLit;
}
inline bool is_cbinary(CKind k) {
  return k == CKind::AndPos || k == CKind::AndNeg || k == CKind::OrPos || k == CKind::OrNeg;
}
inline bool is_cquant(CKind k) { return k == CKind::Exists || k == CKind::Forall; }

inline int compare(const CF& a, const CF& b) {
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
inline bool cequal(const CF& a, const CF& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  return compare(a, b) == 0;
}

struct CLess {
  bool operator()(const CF& a, const CF& b) const { return compare(a, b) < 0; }
};

// De Morgan dual; stays in negation normal form
inline CF cdual(const CF& f) {
  switch (f->kind) {
    case CKind::PosLit:
      return cneg(f->name, f->args);
    case CKind::NegLit:
      return cpos(f->name, f->args);
    case CKind::True:
      return cneg_true();
    case CKind::NegTrue:
      return ctrue();
    case CKind::False:
      return cneg_false();
    case CKind::NegFalse:
      return cfalse();
    case CKind::AndPos:
      return cor_neg(cdual(f->left), cdual(f->right));
    case CKind::AndNeg:
      return cor_pos(cdual(f->left), cdual(f->right));
    case CKind::OrPos:
      return cand_neg(cdual(f->left), cdual(f->right));
    case CKind::OrNeg:
      return cand_pos(cdual(f->left), cdual(f->right));
    case CKind::Exists:
      return cforall(f->name, cdual(f->left));
    case CKind::Forall:
      return cexists(f->name, cdual(f->left));
  }
  return f;  // unreachable
}

inline CF subst(const CF& f, const std::string& var, const Term& by) {
  switch (f->kind) {
    case CKind::PosLit:
    case CKind::NegLit: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const auto& a : f->args) as.push_back(subst(a, var, by));
      return detail::mk_c(f->kind, f->name, std::move(as), nullptr, nullptr);
    }
    case CKind::Exists:
    case CKind::Forall:
      if (f->name == var) return f;
      return detail::mk_c(f->kind, f->name, {}, subst(f->left, var, by), nullptr);
    default:
      if (!f->left) return f;
      return detail::mk_c(f->kind, "", {}, subst(f->left, var, by),
                          f->right ? subst(f->right, var, by) : nullptr);
  }
}

inline void collect_atoms(const CF& f, std::set<std::string>& out) {
  if (is_literal(f)) out.insert(f->name);
  if (f->left) collect_atoms(f->left, out);
  if (f->right) collect_atoms(f->right, out);
}

inline bool occurs_symbol(const CF& f, const std::string& symbol) {
  for (const auto& a : f->args)
    if (occurs(a, symbol)) return true;
  if (f->left && occurs_symbol(f->left, symbol)) return true;
  if (f->right && occurs_symbol(f->right, symbol)) return true;
  return false;
}

inline size_t connective_count(const CF& f) {
  switch (f->kind) {
    case CKind::Exists:
    case CKind::Forall:
      return 1 + connective_count(f->left);
    default: {
      if (!f->left) return 0;
      return 1 + connective_count(f->left) + connective_count(f->right);
    }
  }
}

}  // namespace focalis
