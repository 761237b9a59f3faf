#pragma once

#include "focalis/bias.hpp"
#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"

namespace focalis {

// Intuitionistic polarity under an atom bias: atoms take their assigned
// bias; true, false, &+, | and exists are positive; &-, -> and forall
// are negative.
inline Polarity ipolarity(const IF& f, const BiasMap& bias) {
  switch (f->kind) {
    case IKind::Atom:
      return bias.of(f->name);
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
  return Polarity::Pos;
}

// Classical polarity: a negated literal flips the atom's bias; the
// polarized connectives and constants carry their own sign.
inline Polarity cpolarity(const CF& f, const BiasMap& bias) {
  switch (f->kind) {
    case CKind::PosLit:
      return bias.of(f->name);
    case CKind::NegLit:
      return flip(bias.of(f->name));
    case CKind::True:
    case CKind::False:
    case CKind::AndPos:
    case CKind::OrPos:
    case CKind::Exists:
      return Polarity::Pos;
    case CKind::NegTrue:
    case CKind::NegFalse:
    case CKind::AndNeg:
    case CKind::OrNeg:
    case CKind::Forall:
      return Polarity::Neg;
  }
  return Polarity::Pos;
}

// Polarity delays. delay_neg(B) = true -> B is negative whatever B is;
// delay_pos(B) = true &+ B is positive. Both are equiprovable with B.
inline IF delay_neg(IF b) { return iimpl(itrue(), std::move(b)); }
inline IF delay_pos(IF b) { return iand_pos(itrue(), std::move(b)); }

inline bool is_delay_neg(const IF& f) {
  return f->kind == IKind::Impl && f->left->kind == IKind::True;
}
inline bool is_delay_pos(const IF& f) {
  return f->kind == IKind::ConjPos && f->left->kind == IKind::True;
}

}  // namespace focalis
