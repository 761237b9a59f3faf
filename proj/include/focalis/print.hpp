#pragma once

#include <string>

#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"
#include "focalis/lformula.hpp"

// ASCII printers. Output round-trips through the parsers in parse.hpp.
//
// Precedence, loosest to tightest:
//   quantifiers < "->" (right assoc) < "|" < "&+" "&-"        (intuitionistic)
//   quantifiers < "->+/-" < "|+/-" < "&+/-" < "~"             (classical)
//   quantifiers < "par" "(+)" < "*" "&" < "!" "?" < "^"       (linear)
// Binary operators sharing a level associate to the left.

namespace focalis {

inline std::string print(const Term& t) {
  std::string s = t.name;
  if (!t.args.empty()) {
    s += '(';
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) s += ',';
      s += print(t.args[i]);
    }
    s += ')';
  }
  return s;
}

inline std::string print_args(const std::vector<Term>& args) {
  if (args.empty()) return "";
  std::string s = "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) s += ',';
    s += print(args[i]);
  }
  return s + ")";
}

namespace detail {

inline std::string print_i(const IF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case IKind::Atom:
      return f->name + print_args(f->args);
    case IKind::True:
      return "true";
    case IKind::False:
      return "false";
    case IKind::Forall:
      return wrap(1, "forall " + f->name + ". " + print_i(f->left, 1));
    case IKind::Exists:
      return wrap(1, "exists " + f->name + ". " + print_i(f->left, 1));
    case IKind::Impl:
      return wrap(2, print_i(f->left, 3) + " -> " + print_i(f->right, 2));
    case IKind::Disj:
      return wrap(3, print_i(f->left, 3) + " | " + print_i(f->right, 4));
    case IKind::ConjPos:
      return wrap(4, print_i(f->left, 4) + " &+ " + print_i(f->right, 5));
    case IKind::ConjNeg:
      return wrap(4, print_i(f->left, 4) + " &- " + print_i(f->right, 5));
  }
  return "?";
}

inline std::string print_c(const CF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case CKind::PosLit:
      return f->name + print_args(f->args);
    case CKind::NegLit:
      return "~" + f->name + print_args(f->args);
    case CKind::True:
      return "#t";
    case CKind::False:
      return "#f";
    case CKind::NegTrue:
      return "~#t";
    case CKind::NegFalse:
      return "~#f";
    case CKind::Forall:
      return wrap(1, "forall " + f->name + ". " + print_c(f->left, 1));
    case CKind::Exists:
      return wrap(1, "exists " + f->name + ". " + print_c(f->left, 1));
    case CKind::OrPos:
      return wrap(3, print_c(f->left, 3) + " |+ " + print_c(f->right, 4));
    case CKind::OrNeg:
      return wrap(3, print_c(f->left, 3) + " |- " + print_c(f->right, 4));
    case CKind::AndPos:
      return wrap(4, print_c(f->left, 4) + " &+ " + print_c(f->right, 5));
    case CKind::AndNeg:
      return wrap(4, print_c(f->left, 4) + " &- " + print_c(f->right, 5));
  }
  return "?";
}

inline std::string print_l(const LF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case LKind::Atom:
      return f->name + print_args(f->args);
    case LKind::NegAtom:
      return f->name + print_args(f->args) + "^";
    case LKind::One:
      return "1";
    case LKind::Zero:
      return "0";
    case LKind::Top:
      return "top";
    case LKind::Bot:
      return "bot";
    case LKind::Forall:
      return wrap(1, "forall " + f->name + ". " + print_l(f->left, 1));
    case LKind::Exists:
      return wrap(1, "exists " + f->name + ". " + print_l(f->left, 1));
    case LKind::Par:
      return wrap(2, print_l(f->left, 2) + " par " + print_l(f->right, 3));
    case LKind::Plus:
      return wrap(2, print_l(f->left, 2) + " (+) " + print_l(f->right, 3));
    case LKind::Tensor:
      return wrap(3, print_l(f->left, 3) + " * " + print_l(f->right, 4));
    case LKind::With:
      return wrap(3, print_l(f->left, 3) + " & " + print_l(f->right, 4));
    case LKind::Bang:
      return wrap(4, "!" + print_l(f->left, 4));
    case LKind::Quest:
      return wrap(4, "?" + print_l(f->left, 4));
  }
  return "?";
}

}  // namespace detail

inline std::string print(const IF& f) { return detail::print_i(f, 1); }
inline std::string print(const CF& f) { return detail::print_c(f, 1); }
inline std::string print(const LF& f) { return detail::print_l(f, 1); }

// LaTeX rendering (linear output needs the cmll package for \parr etc.)

namespace detail {

inline std::string latex_i(const IF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case IKind::Atom:
      return f->name + print_args(f->args);
    case IKind::True:
      return "\\mathit{true}";
    case IKind::False:
      return "\\mathit{false}";
    case IKind::Forall:
      return wrap(1, "\\forall " + f->name + ".\\, " + latex_i(f->left, 1));
    case IKind::Exists:
      return wrap(1, "\\exists " + f->name + ".\\, " + latex_i(f->left, 1));
    case IKind::Impl:
      return wrap(2, latex_i(f->left, 3) + " \\supset " + latex_i(f->right, 2));
    case IKind::Disj:
      return wrap(3, latex_i(f->left, 3) + " \\vee " + latex_i(f->right, 4));
    case IKind::ConjPos:
      return wrap(4, latex_i(f->left, 4) + " \\wedge^{+} " + latex_i(f->right, 5));
    case IKind::ConjNeg:
      return wrap(4, latex_i(f->left, 4) + " \\wedge^{-} " + latex_i(f->right, 5));
  }
  return "?";
}

inline std::string latex_c(const CF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case CKind::PosLit:
      return f->name + print_args(f->args);
    case CKind::NegLit:
      return "\\neg " + f->name + print_args(f->args);
    case CKind::True:
      return "\\mathrm{T}";
    case CKind::False:
      return "\\mathrm{F}";
    case CKind::NegTrue:
      return "\\neg\\mathrm{T}";
    case CKind::NegFalse:
      return "\\neg\\mathrm{F}";
    case CKind::Forall:
      return wrap(1, "\\forall " + f->name + ".\\, " + latex_c(f->left, 1));
    case CKind::Exists:
      return wrap(1, "\\exists " + f->name + ".\\, " + latex_c(f->left, 1));
    case CKind::OrPos:
      return wrap(3, latex_c(f->left, 3) + " \\vee^{+} " + latex_c(f->right, 4));
    case CKind::OrNeg:
      return wrap(3, latex_c(f->left, 3) + " \\vee^{-} " + latex_c(f->right, 4));
    case CKind::AndPos:
      return wrap(4, latex_c(f->left, 4) + " \\wedge^{+} " + latex_c(f->right, 5));
    case CKind::AndNeg:
      return wrap(4, latex_c(f->left, 4) + " \\wedge^{-} " + latex_c(f->right, 5));
  }
  return "?";
}

inline std::string latex_l(const LF& f, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + std::move(s) + ")" : std::move(s);
  };
  switch (f->kind) {
    case LKind::Atom:
      return f->name + print_args(f->args);
    case LKind::NegAtom:
      return f->name + print_args(f->args) + "^{\\perp}";
    case LKind::One:
      return "\\mathbf{1}";
    case LKind::Zero:
      return "\\mathbf{0}";
    case LKind::Top:
      return "\\top";
    case LKind::Bot:
      return "\\bot";
    case LKind::Forall:
      return wrap(1, "\\forall " + f->name + ".\\, " + latex_l(f->left, 1));
    case LKind::Exists:
      return wrap(1, "\\exists " + f->name + ".\\, " + latex_l(f->left, 1));
    case LKind::Par:
      return wrap(2, latex_l(f->left, 2) + " \\parr " + latex_l(f->right, 3));
    case LKind::Plus:
      return wrap(2, latex_l(f->left, 2) + " \\oplus " + latex_l(f->right, 3));
    case LKind::Tensor:
      return wrap(3, latex_l(f->left, 3) + " \\otimes " + latex_l(f->right, 4));
    case LKind::With:
      return wrap(3, latex_l(f->left, 3) + " \\mathbin{\\&} " + latex_l(f->right, 4));
    case LKind::Bang:
      return wrap(4, "\\mathop{!}" + latex_l(f->left, 4));
    case LKind::Quest:
      return wrap(4, "\\mathop{?}" + latex_l(f->left, 4));
  }
  return "?";
}

}  // namespace detail

inline std::string latex(const IF& f) { return detail::latex_i(f, 1); }
inline std::string latex(const CF& f) { return detail::latex_c(f, 1); }
inline std::string latex(const LF& f) { return detail::latex_l(f, 1); }

}  // namespace focalis
