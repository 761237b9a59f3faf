#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "focalis/bias.hpp"
#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"
#include "focalis/lformula.hpp"
#include "focalis/polarity.hpp"

// Translations into linear logic.
//
//   zeroone_*  — the double-translation B0/B1, one ! per subformula;
//                images are searched with all atoms biased positive.
//   qj_*       — the sparse q/j pair for the {atom, false, and, or,
//                implies} fragment.
//   pm1_*      — the +1/-1 pair driven by atom permeability; bangs
//                and quests appear only at genuine bias boundaries.
//   conjljf_*  — pm1 restricted to intuitionistic use: a bias map is
//                lifted to a permeability map (positive atoms are
//                left-permeable, negative atoms neutral).
//   polaro     — polarized classical formulas to linear formulas; the
//                image of a dual is the dual of the image.
//
// Conjunction annotations on intuitionistic input are erased: both
// readings translate alike in each scheme.

namespace focalis {

struct TranslateError : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- 0/1 double translation ----

inline LF zeroone_right(const IF& f);
inline LF zeroone_left(const IF& f);

// (B^0)^perp, the form used for left-side formulas in proof search
inline LF zeroone_left_neg(const IF& f) { return lneg(zeroone_left(f)); }

inline LF zeroone_right(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return latom(f->name, f->args);
    case IKind::True:
      return lone();
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return lbang(lwith(zeroone_right(f->left), zeroone_right(f->right)));
    case IKind::Disj:
      return lplus(lbang(zeroone_right(f->left)), lbang(zeroone_right(f->right)));
    case IKind::Impl:
      if (f->right->kind == IKind::False)  // negation: 0 comes first
        return lbang(lpar(lzero(), lquest(zeroone_left_neg(f->left))));
      return lbang(
          lpar(lquest(zeroone_left_neg(f->left)), zeroone_right(f->right)));
    case IKind::Exists:
      return lexists(f->name, lbang(zeroone_right(f->left)));
    case IKind::Forall:
      return lbang(lforall(f->name, zeroone_right(f->left)));
  }
  throw TranslateError("zeroone: malformed formula");
}

inline LF zeroone_left(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return latom(f->name, f->args);
    case IKind::True:
      return ltop();
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return lwith(lbang(zeroone_left(f->left)), lbang(zeroone_left(f->right)));
    case IKind::Disj:
      return lplus(lbang(zeroone_left(f->left)), lbang(zeroone_left(f->right)));
    case IKind::Impl:
      if (f->right->kind == IKind::False)
        return llolli(lbang(zeroone_right(f->left)), lzero());
      return llolli(lbang(zeroone_right(f->left)), lbang(zeroone_left(f->right)));
    case IKind::Exists:
      return lexists(f->name, lbang(zeroone_left(f->left)));
    case IKind::Forall:
      return lforall(f->name, lbang(zeroone_left(f->left)));
  }
  throw TranslateError("zeroone: malformed formula");
}

// ---- q/j translation pair ----
// Fragment: atoms, false, conjunction, disjunction, implication.

inline LF qj_q(const IF& f);
inline LF qj_j(const IF& f);

inline LF qj_q(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return latom(f->name, f->args);
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return ltensor(qj_q(f->left), qj_q(f->right));
    case IKind::Disj:
      return lplus(qj_q(f->left), qj_q(f->right));
    case IKind::Impl:
      return ltensor(llolli(lbang(qj_j(f->left)), qj_q(f->right)), lone());
    default:
      throw TranslateError("qj: formula outside the {atom,false,&,|,->} fragment");
  }
}

inline LF qj_j(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return latom(f->name, f->args);
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return ltensor(lbang(qj_j(f->left)), lbang(qj_j(f->right)));
    case IKind::Disj:
      return lplus(lbang(qj_j(f->left)), lbang(qj_j(f->right)));
    case IKind::Impl:
      return llolli(qj_q(f->left), lbang(qj_j(f->right)));
    default:
      throw TranslateError("qj: formula outside the {atom,false,&,|,->} fragment");
  }
}

// ---- +1/-1 translation pair ----
// Atoms are classified by permeability. Left-permeable atoms behave
// positively, right-permeable atoms negatively, neutral atoms are given
// negative behavior. The -1 image of a formula that does not behave
// positively is coerced with ! where it meets a positive connective.

enum class Permeability { LeftPerm, RightPerm, Neutral };

struct PermMap {
  Permeability dflt = Permeability::Neutral;
  std::map<std::string, Permeability> overrides;

  Permeability of(const std::string& name) const {
    auto it = overrides.find(name);
    return it == overrides.end() ? dflt : it->second;
  }
  static PermMap all(Permeability p) { return PermMap{p, {}}; }
  // positive bias -> left-permeable, negative bias -> neutral
  static PermMap from_bias(const BiasMap& bias) {
    PermMap pm;
    pm.dflt = bias.dflt == Polarity::Pos ? Permeability::LeftPerm
                                         : Permeability::Neutral;
    for (const auto& [name, pol] : bias.overrides)
      pm.overrides[name] = pol == Polarity::Pos ? Permeability::LeftPerm
                                                : Permeability::Neutral;
    return pm;
  }
};

// whether a formula behaves positively (left-permeably) under pm
inline Polarity perm_polarity(const IF& f, const PermMap& pm) {
  switch (f->kind) {
    case IKind::Atom:
      return pm.of(f->name) == Permeability::LeftPerm ? Polarity::Pos
                                                      : Polarity::Neg;
    case IKind::True:
    case IKind::False:
    case IKind::ConjPos:
    case IKind::Disj:
    case IKind::Exists:
      return Polarity::Pos;
    case IKind::ConjNeg:
    case IKind::Impl:
    case IKind::Forall:
      return Polarity::Neg;
  }
  return Polarity::Neg;
}

inline LF pm1_left(const IF& f, const PermMap& pm);
inline LF pm1_right(const IF& f, const PermMap& pm);

namespace detail {

// -1 image coerced to positive behavior
inline LF pm1_left_pos(const IF& f, const PermMap& pm) {
  LF t = pm1_left(f, pm);
  return perm_polarity(f, pm) == Polarity::Pos ? t : lbang(t);
}

}  // namespace detail

inline LF pm1_left(const IF& f, const PermMap& pm) {
  using detail::pm1_left_pos;
  switch (f->kind) {
    case IKind::Atom:
      return pm.of(f->name) == Permeability::LeftPerm
                 ? lbang(latom(f->name, f->args))
                 : latom(f->name, f->args);
    case IKind::True:
      return lone();
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
      return ltensor(pm1_left_pos(f->left, pm), pm1_left_pos(f->right, pm));
    case IKind::ConjNeg:
      return lwith(pm1_left(f->left, pm), pm1_left(f->right, pm));
    case IKind::Disj:
      return lplus(pm1_left_pos(f->left, pm), pm1_left_pos(f->right, pm));
    case IKind::Impl:
      return llolli(pm1_right(f->left, pm), pm1_left(f->right, pm));
    case IKind::Exists:
      return lexists(f->name, pm1_left_pos(f->left, pm));
    case IKind::Forall:
      return lforall(f->name, pm1_left(f->left, pm));
  }
  throw TranslateError("pm1: malformed formula");
}

inline LF pm1_right(const IF& f, const PermMap& pm) {
  using detail::pm1_left_pos;
  switch (f->kind) {
    case IKind::Atom: {
      LF a = latom(f->name, f->args);
      return pm.of(f->name) == Permeability::RightPerm ? lquest(a) : a;
    }
    case IKind::True:
      return lone();
    case IKind::False:
      return lzero();
    case IKind::ConjPos:
      return ltensor(pm1_right(f->left, pm), pm1_right(f->right, pm));
    case IKind::ConjNeg:
      return lwith(pm1_right(f->left, pm), pm1_right(f->right, pm));
    case IKind::Disj:
      return lplus(pm1_right(f->left, pm), pm1_right(f->right, pm));
    case IKind::Impl:
      return llolli(pm1_left_pos(f->left, pm), pm1_right(f->right, pm));
    case IKind::Exists:
      return lexists(f->name, pm1_right(f->left, pm));
    case IKind::Forall:
      return lforall(f->name, pm1_right(f->left, pm));
  }
  throw TranslateError("pm1: malformed formula");
}

// ---- pm1 specialized to an intuitionistic bias assignment ----

inline LF conjljf_left(const IF& f, const BiasMap& bias) {
  return pm1_left(f, PermMap::from_bias(bias));
}
inline LF conjljf_right(const IF& f, const BiasMap& bias) {
  return pm1_right(f, PermMap::from_bias(bias));
}

// ---- polarized classical formulas to linear formulas ----
// Positive formulas map to themselves under !, negative ones under ?;
// coercions appear exactly where an operand's polarity disagrees with
// the connective's. Satisfies lneg(polaro(F)) == polaro(cdual(F)).

inline LF polaro(const CF& f, const BiasMap& bias);

namespace detail {

inline LF polaro_bang(const CF& f, const BiasMap& bias) {
  LF t = polaro(f, bias);
  return cpolarity(f, bias) == Polarity::Pos ? t : lbang(t);
}
inline LF polaro_quest(const CF& f, const BiasMap& bias) {
  LF t = polaro(f, bias);
  return cpolarity(f, bias) == Polarity::Neg ? t : lquest(t);
}

}  // namespace detail

inline LF polaro(const CF& f, const BiasMap& bias) {
  using detail::polaro_bang;
  using detail::polaro_quest;
  switch (f->kind) {
    case CKind::PosLit:
      return latom(f->name, f->args);
    case CKind::NegLit:
      return lneg_atom(f->name, f->args);
    case CKind::True:
      return lone();
    case CKind::NegTrue:
      return lbot();
    case CKind::False:
      return lzero();
    case CKind::NegFalse:
      return ltop();
    case CKind::AndPos:
      return ltensor(polaro_bang(f->left, bias), polaro_bang(f->right, bias));
    case CKind::AndNeg:
      return lwith(polaro_quest(f->left, bias), polaro_quest(f->right, bias));
    case CKind::OrPos:
      return lplus(polaro_bang(f->left, bias), polaro_bang(f->right, bias));
    case CKind::OrNeg:
      return lpar(polaro_quest(f->left, bias), polaro_quest(f->right, bias));
    case CKind::Exists:
      return lexists(f->name, polaro_bang(f->left, bias));
    case CKind::Forall:
      return lforall(f->name, polaro_quest(f->left, bias));
  }
  throw TranslateError("polaro: malformed formula");
}

}  // namespace focalis
