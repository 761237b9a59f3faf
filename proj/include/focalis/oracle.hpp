#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"

// Reference decision procedures, independent of the focused engines.
//
// oracle_int decides propositional intuitionistic sequents with a
// contraction-free calculus in the LJT style: hypotheses carrying an
// implication are consumed when used, with the (C->D)->B case split into
// a D->B re-assumption, so no rule reuses a principal formula and search
// terminates without loop checking. oracle_cl decides propositional
// classical validity by truth table. Both reject quantifiers.

namespace focalis {
namespace detail {

inline bool has_quantifier(const IF& f) {
  if (is_quant(f->kind)) return true;
  if (f->left && has_quantifier(f->left)) return true;
  if (f->right && has_quantifier(f->right)) return true;
  return false;
}

// provability ignores the conjunction annotation; canonicalize to &+
inline IF erase_conj(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
    case IKind::True:
    case IKind::False:
      return f;
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return iand_pos(erase_conj(f->left), erase_conj(f->right));
    case IKind::Exists:
    case IKind::Forall:
      return mk_i(f->kind, f->name, {}, erase_conj(f->left), nullptr);
    default:
      return mk_i(f->kind, "", {}, erase_conj(f->left), erase_conj(f->right));
  }
}

class G4 {
 public:
  bool prove(std::set<IF, ILess> gamma, IF goal) {
    Key key{{gamma.begin(), gamma.end()}, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = run(std::move(gamma), std::move(goal));
    return memo_[key] = r;  // every rule shrinks the weight; no cycles
  }

 private:
  struct Key {
    std::vector<IF> gamma;
    IF goal;
    bool operator<(const Key& o) const {
      if (gamma.size() != o.gamma.size()) return gamma.size() < o.gamma.size();
      for (size_t i = 0; i < gamma.size(); ++i)
        if (int c = compare(gamma[i], o.gamma[i]); c != 0) return c < 0;
      return compare(goal, o.goal) < 0;
    }
  };
  std::map<Key, bool> memo_;

  bool run(std::set<IF, ILess> g, IF goal) {
    // saturate the non-branching invertible left rules
    for (bool changed = true; changed;) {
      changed = false;
      if (g.count(ifalse())) return true;
      if (goal->kind == IKind::True) return true;
      if (goal->kind == IKind::Atom && g.count(goal)) return true;
      for (IF f : g) {  // by value: f must outlive the erase below
        std::optional<std::vector<IF>> by;
        if (f->kind == IKind::True) {
          by.emplace();
        } else if (f->kind == IKind::ConjPos) {
          by = {f->left, f->right};
        } else if (f->kind == IKind::Impl) {
          const IF a = f->left, b = f->right;
          switch (a->kind) {
            case IKind::True: by = {b}; break;
            case IKind::False: by.emplace(); break;
            case IKind::ConjPos: by = {iimpl(a->left, iimpl(a->right, b))}; break;
            case IKind::Disj: by = {iimpl(a->left, b), iimpl(a->right, b)}; break;
            case IKind::Atom:
              if (g.count(a)) by = {b};
              break;
            default: break;  // implication antecedent: handled below
          }
        }
        if (by) {
          g.erase(f);
          for (const IF& x : *by) g.insert(x);
          changed = true;
          break;
        }
      }
    }
    // invertible right rules
    if (goal->kind == IKind::Impl) {
      g.insert(goal->left);
      return prove(std::move(g), goal->right);
    }
    if (goal->kind == IKind::ConjPos)
      return prove(g, goal->left) && prove(std::move(g), goal->right);
    // invertible (but branching) disjunction on the left
    for (const IF& f : g) {
      if (f->kind != IKind::Disj) continue;
      auto rest = g;
      rest.erase(f);
      auto lhs = rest;
      lhs.insert(f->left);
      rest.insert(f->right);
      return prove(std::move(lhs), goal) && prove(std::move(rest), goal);
    }
    // choice points
    if (goal->kind == IKind::Disj) {
      if (prove(g, goal->left)) return true;
      if (prove(g, goal->right)) return true;
    }
    for (const IF& f : g) {
      if (f->kind != IKind::Impl || f->left->kind != IKind::Impl) continue;
      const IF cd = f->left, b = f->right;
      auto rest = g;
      rest.erase(f);
      auto major = rest;
      major.insert(iimpl(cd->right, b));
      if (prove(std::move(major), cd)) {
        rest.insert(b);
        if (prove(std::move(rest), goal)) return true;
      }
    }
    return false;
  }
};

}  // namespace detail

inline bool oracle_int(const std::vector<IF>& hyps, const IF& goal) {
  std::set<IF, ILess> g;
  for (const IF& h : hyps) {
    if (detail::has_quantifier(h))
      throw std::invalid_argument("oracle_int: propositional formulas only");
    g.insert(detail::erase_conj(h));
  }
  if (detail::has_quantifier(goal))
    throw std::invalid_argument("oracle_int: propositional formulas only");
  detail::G4 engine;
  return engine.prove(std::move(g), detail::erase_conj(goal));
}

inline bool oracle_int(const IF& goal) { return oracle_int({}, goal); }

// ---- classical truth tables ----

namespace detail {

inline bool ceval(const CF& f, const std::map<std::string, bool>& v) {
  switch (f->kind) {
    case CKind::PosLit: return v.at(f->name);
    case CKind::NegLit: return !v.at(f->name);
    case CKind::True: return true;
    case CKind::False: return false;
    case CKind::NegTrue: return false;
    case CKind::NegFalse: return true;
    case CKind::AndPos:
    case CKind::AndNeg:
      return ceval(f->left, v) && ceval(f->right, v);
    case CKind::OrPos:
    case CKind::OrNeg:
      return ceval(f->left, v) || ceval(f->right, v);
    case CKind::Exists:
    case CKind::Forall:
      throw std::invalid_argument("oracle_cl: propositional formulas only");
  }
  return false;
}

}  // namespace detail

// classical validity of the disjunction of `fs`
inline bool oracle_cl(const std::vector<CF>& fs) {
  std::set<std::string> atoms;
  for (const CF& f : fs) collect_atoms(f, atoms);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  if (names.size() > 20)
    throw std::invalid_argument("oracle_cl: too many atoms");
  for (uint64_t m = 0; m < (uint64_t(1) << names.size()); ++m) {
    std::map<std::string, bool> v;
    for (size_t i = 0; i < names.size(); ++i) v[names[i]] = (m >> i) & 1;
    bool any = false;
    for (const CF& f : fs)
      if (detail::ceval(f, v)) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

inline bool oracle_cl(const CF& f) { return oracle_cl(std::vector<CF>{f}); }

// polarity-erasing bridge from intuitionistic syntax to classical NNF,
// used for double-negation cross-checks between the two oracles
inline CF to_classical(const IF& f, bool positive = true) {
  switch (f->kind) {
    case IKind::Atom:
      return positive ? cpos(f->name, f->args) : cneg(f->name, f->args);
    case IKind::True:
      return positive ? ctrue() : cneg_true();
    case IKind::False:
      return positive ? cfalse() : cneg_false();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return positive ? cand_pos(to_classical(f->left), to_classical(f->right))
                      : cor_pos(to_classical(f->left, false), to_classical(f->right, false));
    case IKind::Disj:
      return positive ? cor_pos(to_classical(f->left), to_classical(f->right))
                      : cand_pos(to_classical(f->left, false), to_classical(f->right, false));
    case IKind::Impl:
      return positive ? cor_pos(to_classical(f->left, false), to_classical(f->right))
                      : cand_pos(to_classical(f->left), to_classical(f->right, false));
    case IKind::Exists:
      return positive ? cexists(f->name, to_classical(f->left))
                      : cforall(f->name, to_classical(f->left, false));
    case IKind::Forall:
      return positive ? cforall(f->name, to_classical(f->left))
                      : cexists(f->name, to_classical(f->left, false));
  }
  return cfalse();
}

}  // namespace focalis
