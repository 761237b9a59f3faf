#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "focalis/bias.hpp"
#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"
#include "focalis/lformula.hpp"

// Recursive-descent parsers for the ASCII surface syntax.
//
// Identifiers starting with an uppercase letter are term variables and
// must be bound by an enclosing quantifier. Lowercase identifiers are
// atom/function symbols. Identifiers starting with '_' are reserved for
// internal use (the embedding target atom _phi, eigenvariable constants)
// and are rejected unless `internal` parsing is requested, e.g. when
// reloading serialized proofs.

namespace focalis {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// pre-NNF classical formulas as parsed; classical_nnf lowers them
struct CPre;
using CPreP = std::shared_ptr<const CPre>;
struct CPre {
  enum class K { Atom, Not, True, False, AndP, AndN, OrP, OrN, ImpP, ImpN, Exists, Forall };
  K kind = K::Atom;
  std::string name;
  std::vector<Term> args;
  CPreP left, right;

  static CPreP mk(K k, std::string n, std::vector<Term> as, CPreP l, CPreP r) {
    auto f = std::make_shared<CPre>();
    f->kind = k;
    f->name = std::move(n);
    f->args = std::move(as);
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
  }
};

// negation normal form: pushes ~ to the literals, expands ->+ and ->-
inline CF classical_nnf(const CPreP& f, bool positive = true) {
  using K = CPre::K;
  switch (f->kind) {
    case K::Atom:
      return positive ? cpos(f->name, f->args) : cneg(f->name, f->args);
    case K::Not:
      return classical_nnf(f->left, !positive);
    case K::True:
      return positive ? ctrue() : cneg_true();
    case K::False:
      return positive ? cfalse() : cneg_false();
    case K::AndP:
      return positive ? cand_pos(classical_nnf(f->left), classical_nnf(f->right))
                      : cor_neg(classical_nnf(f->left, false), classical_nnf(f->right, false));
    case K::AndN:
      return positive ? cand_neg(classical_nnf(f->left), classical_nnf(f->right))
                      : cor_pos(classical_nnf(f->left, false), classical_nnf(f->right, false));
    case K::OrP:
      return positive ? cor_pos(classical_nnf(f->left), classical_nnf(f->right))
                      : cand_neg(classical_nnf(f->left, false), classical_nnf(f->right, false));
    case K::OrN:
      return positive ? cor_neg(classical_nnf(f->left), classical_nnf(f->right))
                      : cand_pos(classical_nnf(f->left, false), classical_nnf(f->right, false));
    case K::ImpP:  // A ->+ B == ~A |+ B
      return positive ? cor_pos(classical_nnf(f->left, false), classical_nnf(f->right))
                      : cand_neg(classical_nnf(f->left), classical_nnf(f->right, false));
    case K::ImpN:  // A ->- B == ~A |- B
      return positive ? cor_neg(classical_nnf(f->left, false), classical_nnf(f->right))
                      : cand_pos(classical_nnf(f->left), classical_nnf(f->right, false));
    case K::Exists:
      return positive ? cexists(f->name, classical_nnf(f->left))
                      : cforall(f->name, classical_nnf(f->left, false));
    case K::Forall:
      return positive ? cforall(f->name, classical_nnf(f->left))
                      : cexists(f->name, classical_nnf(f->left, false));
  }
  throw ParseError("malformed pre-NNF node", 0);
}

namespace detail {

enum class Tok {
  Ident, Num,
  LParen, RParen, LBrack, RBrack, LBrace, RBrace, Lt, Gt,
  Comma, Dot, Semi, Colon, Caret, Tilde, Bang, Quest, Star,
  Amp, AmpPlus, AmpMinus, Bar, BarPlus, BarMinus, Turnstile /* |- */,
  Arrow, ArrowPlus, ArrowMinus, PlusParen /* (+) */,
  Eq, Plus, Minus, HashT, HashF,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto peek = [&](size_t k) { return i + k < s.size() ? s[i + k] : '\0'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t at = i;
    auto push = [&](Tok t, size_t len) {
      out.push_back({t, s.substr(at, len), at});
      i += len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '(':
        if (peek(1) == '+' && peek(2) == ')') push(Tok::PlusParen, 3);
        else push(Tok::LParen, 1);
        break;
      case ')': push(Tok::RParen, 1); break;
      case '[': push(Tok::LBrack, 1); break;
      case ']': push(Tok::RBrack, 1); break;
      case '{': push(Tok::LBrace, 1); break;
      case '}': push(Tok::RBrace, 1); break;
      case '<': push(Tok::Lt, 1); break;
      case '>': push(Tok::Gt, 1); break;
      case ',': push(Tok::Comma, 1); break;
      case '.': push(Tok::Dot, 1); break;
      case ';': push(Tok::Semi, 1); break;
      case ':': push(Tok::Colon, 1); break;
      case '^': push(Tok::Caret, 1); break;
      case '~': push(Tok::Tilde, 1); break;
      case '!': push(Tok::Bang, 1); break;
      case '?': push(Tok::Quest, 1); break;
      case '*': push(Tok::Star, 1); break;
      case '=': push(Tok::Eq, 1); break;
      case '+': push(Tok::Plus, 1); break;
      case '&':
        if (peek(1) == '+') push(Tok::AmpPlus, 2);
        else if (peek(1) == '-') push(Tok::AmpMinus, 2);
        else push(Tok::Amp, 1);
        break;
      case '|':
        if (peek(1) == '+') push(Tok::BarPlus, 2);
        else if (peek(1) == '-' && peek(2) != '>') push(Tok::Turnstile, 2);
        else push(Tok::Bar, 1);
        break;
      case '-':
        if (peek(1) == '>') {
          if (peek(2) == '+') push(Tok::ArrowPlus, 3);
          else if (peek(2) == '-') push(Tok::ArrowMinus, 3);
          else push(Tok::Arrow, 2);
        } else {
          push(Tok::Minus, 1);
        }
        break;
      case '#':
        if (peek(1) == 't') push(Tok::HashT, 2);
        else if (peek(1) == 'f') push(Tok::HashF, 2);
        else throw ParseError("expected #t or #f", i);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Note on '|': the classical or-neg connective is written "|-"; the same
// two characters also serve as the sequent turnstile. The lexer cannot
// tell them apart, so it always emits Turnstile and the classical parser
// accepts Turnstile where an or-neg is expected ("|->" stays an or-neg
// followed by '>', which never parses, so polarized arrows are safe).

struct Cursor {
  std::vector<Token> toks;
  size_t at = 0;
  bool internal = false;
  std::vector<std::string> bound;

  const Token& cur() const { return toks[at]; }
  Tok kind() const { return toks[at].kind; }
  const Token& eat(Tok t, const char* what) {
    if (toks[at].kind != t) throw ParseError(std::string("expected ") + what, toks[at].pos);
    return toks[at++];
  }
  bool accept(Tok t) {
    if (toks[at].kind == t) {
      ++at;
      return true;
    }
    return false;
  }
  bool at_ident(const char* kw) const {
    return toks[at].kind == Tok::Ident && toks[at].text == kw;
  }
  bool accept_ident(const char* kw) {
    if (at_ident(kw)) {
      ++at;
      return true;
    }
    return false;
  }
  bool is_bound(const std::string& n) const {
    for (const auto& b : bound)
      if (b == n) return true;
    return false;
  }
  void check_name(const std::string& n, size_t pos) const {
    if (!internal && !n.empty() && n[0] == '_')
      throw ParseError("reserved identifier '" + n + "'", pos);
  }
};

inline Term p_term(Cursor& c) {
  if (c.kind() == Tok::Num) {
    return Term::app(c.toks[c.at++].text);
  }
  const Token& t = c.eat(Tok::Ident, "term");
  c.check_name(t.text, t.pos);
  if (std::isupper(static_cast<unsigned char>(t.text[0]))) {
    if (!c.is_bound(t.text)) throw ParseError("unbound variable '" + t.text + "'", t.pos);
    return Term::var(t.text);
  }
  std::vector<Term> args;
  if (c.accept(Tok::LParen)) {
    args.push_back(p_term(c));
    while (c.accept(Tok::Comma)) args.push_back(p_term(c));
    c.eat(Tok::RParen, ")");
  }
  return Term::app(t.text, std::move(args));
}

inline bool is_keyword(const std::string& s) {
  return s == "true" || s == "false" || s == "forall" || s == "exists" ||
         s == "par" || s == "top" || s == "bot";
}

inline std::pair<std::string, std::vector<Term>> p_atom(Cursor& c) {
  const Token& t = c.eat(Tok::Ident, "atom");
  c.check_name(t.text, t.pos);
  if (std::isupper(static_cast<unsigned char>(t.text[0])))
    throw ParseError("atom names start lowercase: '" + t.text + "'", t.pos);
  if (is_keyword(t.text))
    throw ParseError("reserved keyword '" + t.text + "' cannot be an atom", t.pos);
  std::vector<Term> args;
  if (c.accept(Tok::LParen)) {
    args.push_back(p_term(c));
    while (c.accept(Tok::Comma)) args.push_back(p_term(c));
    c.eat(Tok::RParen, ")");
  }
  return {t.text, std::move(args)};
}

inline std::string p_quant_var(Cursor& c) {
  const Token& t = c.eat(Tok::Ident, "quantified variable");
  if (!std::isupper(static_cast<unsigned char>(t.text[0])))
    throw ParseError("quantified variables start uppercase: '" + t.text + "'", t.pos);
  return t.text;
}

// ---- intuitionistic formulas ----

IF p_iformula(Cursor& c);

inline IF p_iatomic(Cursor& c) {
  if (c.accept(Tok::LParen)) {
    IF f = p_iformula(c);
    c.eat(Tok::RParen, ")");
    return f;
  }
  if (c.accept_ident("true")) return itrue();
  if (c.accept_ident("false")) return ifalse();
  auto [name, args] = p_atom(c);
  return iatom(name, std::move(args));
}

inline IF p_iunary(Cursor& c) {
  if (c.accept(Tok::Tilde)) return inot(p_iunary(c));
  return p_iatomic(c);
}

inline IF p_iconj(Cursor& c) {
  IF f = p_iunary(c);
  for (;;) {
    if (c.accept(Tok::AmpPlus)) f = iand_pos(f, p_iunary(c));
    else if (c.accept(Tok::AmpMinus)) f = iand_neg(f, p_iunary(c));
    else if (c.accept(Tok::Amp)) f = iand_neg(f, p_iunary(c));  // plain & reads as &-
    else return f;
  }
}

inline IF p_idisj(Cursor& c) {
  IF f = p_iconj(c);
  while (c.accept(Tok::Bar)) f = ior(f, p_iconj(c));
  return f;
}

inline IF p_iformula(Cursor& c) {
  if (c.at_ident("forall") || c.at_ident("exists")) {
    bool fa = c.accept_ident("forall");
    if (!fa) c.accept_ident("exists");
    std::string v = p_quant_var(c);
    c.eat(Tok::Dot, ".");
    c.bound.push_back(v);
    IF body = p_iformula(c);
    c.bound.pop_back();
    return fa ? iforall(v, body) : iexists(v, body);
  }
  IF f = p_idisj(c);
  if (c.accept(Tok::Arrow)) return iimpl(f, p_iformula(c));
  return f;
}

// ---- classical formulas (pre-NNF) ----

CPreP p_cformula(Cursor& c);

inline CPreP p_catomic(Cursor& c) {
  using K = CPre::K;
  if (c.accept(Tok::LParen)) {
    CPreP f = p_cformula(c);
    c.eat(Tok::RParen, ")");
    return f;
  }
  if (c.accept(Tok::HashT)) return CPre::mk(K::True, "", {}, nullptr, nullptr);
  if (c.accept(Tok::HashF)) return CPre::mk(K::False, "", {}, nullptr, nullptr);
  auto [name, args] = p_atom(c);
  return CPre::mk(K::Atom, name, std::move(args), nullptr, nullptr);
}

inline CPreP p_cunary(Cursor& c) {
  if (c.accept(Tok::Tilde))
    return CPre::mk(CPre::K::Not, "", {}, p_cunary(c), nullptr);
  return p_catomic(c);
}

inline CPreP p_cconj(Cursor& c) {
  using K = CPre::K;
  CPreP f = p_cunary(c);
  for (;;) {
    if (c.accept(Tok::AmpPlus)) f = CPre::mk(K::AndP, "", {}, f, p_cunary(c));
    else if (c.accept(Tok::AmpMinus)) f = CPre::mk(K::AndN, "", {}, f, p_cunary(c));
    else return f;
  }
}

inline CPreP p_cdisj(Cursor& c) {
  using K = CPre::K;
  CPreP f = p_cconj(c);
  for (;;) {
    if (c.accept(Tok::BarPlus)) f = CPre::mk(K::OrP, "", {}, f, p_cconj(c));
    else if (c.accept(Tok::Turnstile)) f = CPre::mk(K::OrN, "", {}, f, p_cconj(c));
    else return f;
  }
}

inline CPreP p_cformula(Cursor& c) {
  using K = CPre::K;
  if (c.at_ident("forall") || c.at_ident("exists")) {
    bool fa = c.accept_ident("forall");
    if (!fa) c.accept_ident("exists");
    std::string v = p_quant_var(c);
    c.eat(Tok::Dot, ".");
    c.bound.push_back(v);
    CPreP body = p_cformula(c);
    c.bound.pop_back();
    return CPre::mk(fa ? K::Forall : K::Exists, v, {}, body, nullptr);
  }
  CPreP f = p_cdisj(c);
  if (c.accept(Tok::ArrowPlus)) return CPre::mk(K::ImpP, "", {}, f, p_cformula(c));
  if (c.accept(Tok::ArrowMinus)) return CPre::mk(K::ImpN, "", {}, f, p_cformula(c));
  return f;
}

// ---- linear formulas ----

LF p_lformula(Cursor& c);

inline LF p_latomic(Cursor& c) {
  if (c.accept(Tok::LParen)) {
    LF f = p_lformula(c);
    c.eat(Tok::RParen, ")");
    return f;
  }
  if (c.kind() == Tok::Num) {
    const Token& t = c.toks[c.at++];
    if (t.text == "1") return lone();
    if (t.text == "0") return lzero();
    throw ParseError("expected a linear formula", t.pos);
  }
  if (c.accept_ident("top")) return ltop();
  if (c.accept_ident("bot")) return lbot();
  auto [name, args] = p_atom(c);
  if (c.accept(Tok::Caret)) return lneg_atom(name, std::move(args));
  return latom(name, std::move(args));
}

inline LF p_lunary(Cursor& c) {
  if (c.accept(Tok::Bang)) return lbang(p_lunary(c));
  if (c.accept(Tok::Quest)) return lquest(p_lunary(c));
  return p_latomic(c);
}

inline LF p_ltensor(Cursor& c) {
  LF f = p_lunary(c);
  for (;;) {
    if (c.accept(Tok::Star)) f = ltensor(f, p_lunary(c));
    else if (c.accept(Tok::Amp)) f = lwith(f, p_lunary(c));
    else return f;
  }
}

inline LF p_lpar(Cursor& c) {
  LF f = p_ltensor(c);
  for (;;) {
    if (c.accept_ident("par")) f = lpar(f, p_ltensor(c));
    else if (c.accept(Tok::PlusParen)) f = lplus(f, p_ltensor(c));
    else return f;
  }
}

inline LF p_lformula(Cursor& c) {
  if (c.at_ident("forall") || c.at_ident("exists")) {
    bool fa = c.accept_ident("forall");
    if (!fa) c.accept_ident("exists");
    std::string v = p_quant_var(c);
    c.eat(Tok::Dot, ".");
    c.bound.push_back(v);
    LF body = p_lformula(c);
    c.bound.pop_back();
    return fa ? lforall(v, body) : lexists(v, body);
  }
  return p_lpar(c);
}

inline Cursor make_cursor(const std::string& s, bool internal) {
  Cursor c;
  c.toks = lex(s);
  c.internal = internal;
  return c;
}

}  // namespace detail

inline IF parse_iformula(const std::string& s, bool internal = false) {
  auto c = detail::make_cursor(s, internal);
  IF f = detail::p_iformula(c);
  c.eat(detail::Tok::End, "end of input");
  return f;
}

inline CF parse_cformula(const std::string& s, bool internal = false) {
  auto c = detail::make_cursor(s, internal);
  CPreP f = detail::p_cformula(c);
  c.eat(detail::Tok::End, "end of input");
  return classical_nnf(f);
}

inline LF parse_lformula(const std::string& s, bool internal = false) {
  auto c = detail::make_cursor(s, internal);
  LF f = detail::p_lformula(c);
  c.eat(detail::Tok::End, "end of input");
  return f;
}

inline Term parse_term(const std::string& s, bool internal = false) {
  auto c = detail::make_cursor(s, internal);
  Term t = detail::p_term(c);
  c.eat(detail::Tok::End, "end of input");
  return t;
}

inline std::vector<IF> parse_iformula_list(const std::string& s, bool internal = false) {
  std::vector<IF> out;
  auto c = detail::make_cursor(s, internal);
  if (c.kind() == detail::Tok::End) return out;
  out.push_back(detail::p_iformula(c));
  while (c.accept(detail::Tok::Comma)) out.push_back(detail::p_iformula(c));
  c.eat(detail::Tok::End, "end of input");
  return out;
}

inline std::vector<CF> parse_cformula_list(const std::string& s, bool internal = false) {
  std::vector<CF> out;
  auto c = detail::make_cursor(s, internal);
  if (c.kind() == detail::Tok::End) return out;
  out.push_back(classical_nnf(detail::p_cformula(c)));
  while (c.accept(detail::Tok::Comma)) out.push_back(classical_nnf(detail::p_cformula(c)));
  c.eat(detail::Tok::End, "end of input");
  return out;
}

inline std::vector<Term> parse_term_list(const std::string& s, bool internal = false) {
  std::vector<Term> out;
  auto c = detail::make_cursor(s, internal);
  if (c.kind() == detail::Tok::End) return out;
  out.push_back(detail::p_term(c));
  while (c.accept(detail::Tok::Comma)) out.push_back(detail::p_term(c));
  c.eat(detail::Tok::End, "end of input");
  return out;
}

// "a=+,b=-" style overrides on top of a default polarity
inline BiasMap parse_bias(const std::string& s, Polarity dflt = Polarity::Pos) {
  BiasMap bias;
  bias.dflt = dflt;
  auto c = detail::make_cursor(s, false);
  if (c.kind() == detail::Tok::End) return bias;
  for (;;) {
    const auto& t = c.eat(detail::Tok::Ident, "atom name");
    c.eat(detail::Tok::Eq, "=");
    Polarity p;
    if (c.accept(detail::Tok::Plus)) p = Polarity::Pos;
    else if (c.accept(detail::Tok::Minus)) p = Polarity::Neg;
    else throw ParseError("expected + or -", c.cur().pos);
    bias.overrides[t.text] = p;
    if (!c.accept(detail::Tok::Comma)) break;
  }
  c.eat(detail::Tok::End, "end of input");
  return bias;
}

}  // namespace focalis
