#pragma once

#include <stdexcept>

#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"
#include "focalis/polarity.hpp"

// Embeddings into LJF-ready intuitionistic syntax.
//
// Polarity delays (polarity.hpp) make a formula positive or negative
// without changing provability; inserting them interrupts focusing.
// Two hereditary left/right translations are provided — a strict one for
// the LJQ' fragment and one for full LJ — plus the top-level lambda-RCC
// guard device and the "~"-based embedding of polarized classical logic.

namespace focalis {

struct EmbedError : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- LJQ' left/right translation ----
// Fragment: atoms, false, conjunction (read as &+, annotations erased),
// disjunction, implication. Left-side formulas become negative,
// right-side positive. All atoms must be biased positive when searching
// the image.

inline IF ljq_left(const IF& f);
inline IF ljq_right(const IF& f);

inline IF ljq_left(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return f;
    case IKind::False:
      return delay_neg(ifalse());
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return delay_neg(iand_pos(ljq_left(f->left), ljq_left(f->right)));
    case IKind::Disj:
      return delay_neg(ior(ljq_left(f->left), ljq_left(f->right)));
    case IKind::Impl:
      return iimpl(ljq_right(f->left), delay_pos(ljq_left(f->right)));
    default:
      throw EmbedError("ljq embedding: formula outside the LJQ' fragment");
  }
}

inline IF ljq_right(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return f;
    case IKind::False:
      return ifalse();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return iand_pos(ljq_right(f->left), ljq_right(f->right));
    case IKind::Disj:
      return ior(ljq_right(f->left), ljq_right(f->right));
    case IKind::Impl:
      return delay_pos(iimpl(ljq_left(f->left), ljq_right(f->right)));
    default:
      throw EmbedError("ljq embedding: formula outside the LJQ' fragment");
  }
}

// ---- LJ left/right translation ----
// Enough delays to stop all focusing, embedding arbitrary LJ proofs.
// Conjunction annotations on the input are ignored (plain ∧).

inline IF lj_left(const IF& f);
inline IF lj_right(const IF& f);

inline IF lj_left(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return f;
    case IKind::False:
      return delay_neg(ifalse());
    case IKind::True:
      return delay_neg(itrue());
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return iand_neg(delay_pos(lj_left(f->left)), delay_pos(lj_left(f->right)));
    case IKind::Disj:
      return delay_neg(ior(lj_left(f->left), lj_left(f->right)));
    case IKind::Impl:
      return iimpl(delay_neg(lj_right(f->left)), delay_pos(lj_left(f->right)));
    case IKind::Exists:
      return delay_neg(iexists(f->name, lj_left(f->left)));
    case IKind::Forall:
      return iforall(f->name, delay_pos(lj_left(f->left)));
  }
  throw EmbedError("lj embedding: malformed formula");
}

inline IF lj_right(const IF& f) {
  switch (f->kind) {
    case IKind::Atom:
      return f;
    case IKind::False:
      return ifalse();
    case IKind::True:
      return itrue();
    case IKind::ConjPos:
    case IKind::ConjNeg:
      return delay_pos(iand_neg(lj_right(f->left), lj_right(f->right)));
    case IKind::Disj:
      return ior(delay_neg(lj_right(f->left)), delay_neg(lj_right(f->right)));
    case IKind::Impl:
      return delay_pos(iimpl(lj_left(f->left), lj_right(f->right)));
    case IKind::Exists:
      return iexists(f->name, delay_neg(lj_right(f->left)));
    case IKind::Forall:
      return delay_pos(iforall(f->name, lj_right(f->left)));
  }
  throw EmbedError("lj embedding: malformed formula");
}

// ---- lambda-RCC guard device ----
// For a top-level guarded clause E ⊃ D with E a positively biased atom:
// keep D from being decomposed under focus by wrapping it in delays.
// Unlike the l/r translations this does not recurse into D.

inline IF rcc_guard(const IF& f, const BiasMap& bias) {
  if (f->kind != IKind::Impl || f->left->kind != IKind::Atom ||
      bias.of(f->left->name) != Polarity::Pos)
    throw EmbedError("rcc guard: expected E -> D with E a positive atom");
  const IF& d = f->right;
  if (ipolarity(d, bias) == Polarity::Neg) return iimpl(f->left, delay_pos(d));
  return iimpl(f->left, delay_pos(delay_neg(d)));
}

// ---- classical "~" embedding ----
// ~X abbreviates X ⊃ phi for a distinguished positive atom phi (reserved
// name "_phi"). Every case lands on a positive intuitionistic formula P
// or on ~P; no intuitionistic negative atoms are used, so the image is
// searched under an all-positive bias.

inline const std::string& phi_atom_name() {
  static const std::string name = "_phi";
  return name;
}

inline IF phi_atom() { return iatom(phi_atom_name()); }

namespace detail {

inline IF approx_not(const IF& f) { return iimpl(f, phi_atom()); }

// strips one ~ if present, else adds one
inline IF approx_neg(const IF& f) {
  if (f->kind == IKind::Impl && iequal(f->right, phi_atom())) return f->left;
  return approx_not(f);
}

}  // namespace detail

inline IF classical_embed(const CF& f) {
  using detail::approx_neg;
  using detail::approx_not;
  switch (f->kind) {
    case CKind::PosLit:
      return iatom(f->name, f->args);
    case CKind::NegLit:
      return approx_not(iatom(f->name, f->args));
    case CKind::True:
      return itrue();
    case CKind::False:
      return ifalse();
    case CKind::NegTrue:
      return approx_not(itrue());
    case CKind::NegFalse:
      return approx_not(ifalse());
    case CKind::AndPos:
      return iand_pos(classical_embed(f->left), classical_embed(f->right));
    case CKind::AndNeg:
      return approx_not(ior(approx_neg(classical_embed(f->left)),
                            approx_neg(classical_embed(f->right))));
    case CKind::OrPos:
      return ior(classical_embed(f->left), classical_embed(f->right));
    case CKind::OrNeg:
      return approx_not(iand_pos(approx_neg(classical_embed(f->left)),
                                 approx_neg(classical_embed(f->right))));
    case CKind::Exists:
      return iexists(f->name, classical_embed(f->left));
    case CKind::Forall:
      return approx_not(iexists(f->name, approx_neg(classical_embed(f->left))));
  }
  throw EmbedError("classical embedding: malformed formula");
}

// no negative intuitionistic atom may appear in an embedding image when
// every atom (including _phi) is biased positive; used by tests
inline bool embed_image_atoms_positive(const IF& f, const BiasMap& bias) {
  if (f->kind == IKind::Atom && bias.of(f->name) != Polarity::Pos) return false;
  if (f->left && !embed_image_atoms_positive(f->left, bias)) return false;
  if (f->right && !embed_image_atoms_positive(f->right, bias)) return false;
  return true;
}

}  // namespace focalis
