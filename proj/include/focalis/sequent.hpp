#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"
#include "focalis/lformula.hpp"
#include "focalis/parse.hpp"
#include "focalis/print.hpp"

// Sequents for the four calculi, their pinned text forms, and parsers
// that invert them. Zones written [.] are multisets (order is kept for
// display and search determinism but ignored by comparisons); the
// trailing zone of an asynchronous linear sequent is an ordered list.
//
//   LJF   [G], Th --> R      unfocused (", Th" omitted when empty;
//                             R may be boxed: --> [R])
//         [G] -{F}-> [R]     left focus
//         [G] -R-> F         right focus
//   LKF   |- [Th], G         unfocused (", G" omitted when empty)
//         |- [Th] <F>        focused
//   LLF   |- [Psi] [D] ^ L   asynchronous (L comma-separated, may be empty)
//         |- [Psi] [D] v F   synchronous
//   LJ    G |- R

namespace focalis {

namespace detail {

template <typename F>
std::string join_formulas(const std::vector<F>& fs) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += print(fs[i]);
  }
  return s;
}

// multiset comparison: sort copies under the structural order
template <typename F, typename Less>
std::vector<F> sorted_zone(std::vector<F> v, Less less) {
  std::sort(v.begin(), v.end(), less);
  return v;
}

template <typename F, typename Less, typename Eq>
bool multiset_equal(const std::vector<F>& a, const std::vector<F>& b, Less less,
                    Eq eq) {
  if (a.size() != b.size()) return false;
  auto sa = sorted_zone(a, less);
  auto sb = sorted_zone(b, less);
  for (size_t i = 0; i < a.size(); ++i)
    if (!eq(sa[i], sb[i])) return false;
  return true;
}

// removes one occurrence of each element of b from a; false if missing
template <typename F, typename Eq>
bool multiset_subtract(std::vector<F>& a, const std::vector<F>& b, Eq eq) {
  for (const F& f : b) {
    auto it = std::find_if(a.begin(), a.end(),
                           [&](const F& g) { return eq(f, g); });
    if (it == a.end()) return false;
    a.erase(it);
  }
  return true;
}

template <typename F, typename Eq>
bool zone_contains(const std::vector<F>& zone, const F& f, Eq eq) {
  return std::any_of(zone.begin(), zone.end(),
                     [&](const F& g) { return eq(f, g); });
}

}  // namespace detail

// ---- LJF ----

enum class LjfForm { Async, LeftFocus, RightFocus };

struct LjfSequent {
  LjfForm form = LjfForm::Async;
  std::vector<IF> gamma;  // persistent zone [G]
  std::vector<IF> theta;  // staging zone (Async only)
  IF rhs;                 // Async: goal; LeftFocus: the boxed goal
  bool boxed = false;     // Async: goal written [R]
  IF focus;               // LeftFocus / RightFocus

  bool is_border() const {
    return form == LjfForm::Async && theta.empty() && boxed;
  }
};

inline LjfSequent ljf_async(std::vector<IF> gamma, std::vector<IF> theta,
                            IF rhs, bool boxed = false) {
  LjfSequent s;
  s.gamma = std::move(gamma);
  s.theta = std::move(theta);
  s.rhs = std::move(rhs);
  s.boxed = boxed;
  return s;
}

inline LjfSequent ljf_border(std::vector<IF> gamma, IF rhs) {
  return ljf_async(std::move(gamma), {}, std::move(rhs), true);
}

inline LjfSequent ljf_left_focus(std::vector<IF> gamma, IF focus, IF rhs) {
  LjfSequent s;
  s.form = LjfForm::LeftFocus;
  s.gamma = std::move(gamma);
  s.focus = std::move(focus);
  s.rhs = std::move(rhs);
  return s;
}

inline LjfSequent ljf_right_focus(std::vector<IF> gamma, IF focus) {
  LjfSequent s;
  s.form = LjfForm::RightFocus;
  s.gamma = std::move(gamma);
  s.focus = std::move(focus);
  return s;
}

inline bool ljf_equal(const LjfSequent& a, const LjfSequent& b) {
  if (a.form != b.form) return false;
  if (!detail::multiset_equal(a.gamma, b.gamma, ILess{}, iequal)) return false;
  switch (a.form) {
    case LjfForm::Async:
      return a.boxed == b.boxed && iequal(a.rhs, b.rhs) &&
             detail::multiset_equal(a.theta, b.theta, ILess{}, iequal);
    case LjfForm::LeftFocus:
      return iequal(a.focus, b.focus) && iequal(a.rhs, b.rhs);
    case LjfForm::RightFocus:
      return iequal(a.focus, b.focus);
  }
  return false;
}

inline std::string print_sequent(const LjfSequent& s) {
  std::string g = "[" + detail::join_formulas(s.gamma) + "]";
  switch (s.form) {
    case LjfForm::Async: {
      std::string out = g;
      if (!s.theta.empty()) out += ", " + detail::join_formulas(s.theta);
      out += " --> ";
      out += s.boxed ? "[" + print(s.rhs) + "]" : print(s.rhs);
      return out;
    }
    case LjfForm::LeftFocus:
      return g + " -{" + print(s.focus) + "}-> [" + print(s.rhs) + "]";
    case LjfForm::RightFocus:
      return g + " -R-> " + print(s.focus);
  }
  return "?";
}

// ---- LKF ----

struct LkfSequent {
  bool focused = false;
  std::vector<CF> theta;  // stored zone [Th]
  std::vector<CF> gamma;  // workbench (unfocused only)
  CF focus;               // focused only
};

inline LkfSequent lkf_async(std::vector<CF> theta, std::vector<CF> gamma) {
  LkfSequent s;
  s.theta = std::move(theta);
  s.gamma = std::move(gamma);
  return s;
}

inline LkfSequent lkf_focus(std::vector<CF> theta, CF focus) {
  LkfSequent s;
  s.focused = true;
  s.theta = std::move(theta);
  s.focus = std::move(focus);
  return s;
}

inline bool lkf_equal(const LkfSequent& a, const LkfSequent& b) {
  if (a.focused != b.focused) return false;
  if (!detail::multiset_equal(a.theta, b.theta, CLess{}, cequal)) return false;
  if (a.focused) return cequal(a.focus, b.focus);
  return detail::multiset_equal(a.gamma, b.gamma, CLess{}, cequal);
}

inline std::string print_sequent(const LkfSequent& s) {
  std::string out = "|- [" + detail::join_formulas(s.theta) + "]";
  if (s.focused) return out + " <" + print(s.focus) + ">";
  if (!s.gamma.empty()) out += ", " + detail::join_formulas(s.gamma);
  return out;
}

// ---- LLF ----

struct LlfSequent {
  bool focused = false;
  std::vector<LF> psi;    // unbounded zone
  std::vector<LF> delta;  // bounded zone
  std::vector<LF> list;   // ordered asynchronous list (unfocused only)
  LF focus;               // focused only
};

inline LlfSequent llf_async(std::vector<LF> psi, std::vector<LF> delta,
                            std::vector<LF> list) {
  LlfSequent s;
  s.psi = std::move(psi);
  s.delta = std::move(delta);
  s.list = std::move(list);
  return s;
}

inline LlfSequent llf_focus(std::vector<LF> psi, std::vector<LF> delta,
                            LF focus) {
  LlfSequent s;
  s.focused = true;
  s.psi = std::move(psi);
  s.delta = std::move(delta);
  s.focus = std::move(focus);
  return s;
}

inline bool llf_equal(const LlfSequent& a, const LlfSequent& b) {
  if (a.focused != b.focused) return false;
  if (!detail::multiset_equal(a.psi, b.psi, LLess{}, lequal)) return false;
  if (!detail::multiset_equal(a.delta, b.delta, LLess{}, lequal)) return false;
  if (a.focused) return lequal(a.focus, b.focus);
  if (a.list.size() != b.list.size()) return false;  // the list is ordered
  for (size_t i = 0; i < a.list.size(); ++i)
    if (!lequal(a.list[i], b.list[i])) return false;
  return true;
}

inline std::string print_sequent(const LlfSequent& s) {
  std::string out = "|- [" + detail::join_formulas(s.psi) + "] [" +
                    detail::join_formulas(s.delta) + "]";
  if (s.focused) return out + " v " + print(s.focus);
  out += " ^";
  if (!s.list.empty()) out += " " + detail::join_formulas(s.list);
  return out;
}

// ---- LJ ----

struct LjSequent {
  std::vector<IF> gamma;
  IF rhs;
};

inline LjSequent lj_sequent(std::vector<IF> gamma, IF rhs) {
  return LjSequent{std::move(gamma), std::move(rhs)};
}

inline bool lj_equal(const LjSequent& a, const LjSequent& b) {
  return iequal(a.rhs, b.rhs) &&
         detail::multiset_equal(a.gamma, b.gamma, ILess{}, iequal);
}

inline std::string print_sequent(const LjSequent& s) {
  std::string out = detail::join_formulas(s.gamma);
  if (!out.empty()) out += " ";
  return out + "|- " + print(s.rhs);
}

// ---- parsing ----

namespace detail {

inline std::vector<IF> p_izone_list(Cursor& c, Tok stop) {
  std::vector<IF> out;
  if (c.kind() == stop) return out;
  out.push_back(p_iformula(c));
  while (c.accept(Tok::Comma)) out.push_back(p_iformula(c));
  return out;
}

inline std::vector<CF> p_czone_list(Cursor& c, Tok stop) {
  std::vector<CF> out;
  if (c.kind() == stop) return out;
  out.push_back(classical_nnf(p_cformula(c)));
  while (c.accept(Tok::Comma)) out.push_back(classical_nnf(p_cformula(c)));
  return out;
}

inline std::vector<LF> p_lzone_list(Cursor& c, Tok stop) {
  std::vector<LF> out;
  if (c.kind() == stop) return out;
  out.push_back(p_lformula(c));
  while (c.accept(Tok::Comma)) out.push_back(p_lformula(c));
  return out;
}

inline LjfSequent p_ljf_sequent(Cursor& c) {
  c.eat(Tok::LBrack, "'['");
  std::vector<IF> gamma = p_izone_list(c, Tok::RBrack);
  c.eat(Tok::RBrack, "']'");
  if (c.accept(Tok::Comma)) {
    std::vector<IF> theta;
    theta.push_back(p_iformula(c));
    while (c.accept(Tok::Comma)) theta.push_back(p_iformula(c));
    c.eat(Tok::Minus, "'-->'");
    c.eat(Tok::Arrow, "'-->'");
    if (c.accept(Tok::LBrack)) {
      IF rhs = p_iformula(c);
      c.eat(Tok::RBrack, "']'");
      return ljf_async(std::move(gamma), std::move(theta), rhs, true);
    }
    return ljf_async(std::move(gamma), std::move(theta), p_iformula(c), false);
  }
  c.eat(Tok::Minus, "'-'");
  if (c.accept(Tok::LBrace)) {  // [G] -{F}-> [R]
    IF focus = p_iformula(c);
    c.eat(Tok::RBrace, "'}'");
    c.eat(Tok::Arrow, "'->'");
    c.eat(Tok::LBrack, "'['");
    IF rhs = p_iformula(c);
    c.eat(Tok::RBrack, "']'");
    return ljf_left_focus(std::move(gamma), focus, rhs);
  }
  if (c.kind() == Tok::Ident && c.cur().text == "R") {  // [G] -R-> F
    c.eat(Tok::Ident, "'R'");
    c.eat(Tok::Arrow, "'->'");
    return ljf_right_focus(std::move(gamma), p_iformula(c));
  }
  c.eat(Tok::Arrow, "'-->'");
  if (c.accept(Tok::LBrack)) {
    IF rhs = p_iformula(c);
    c.eat(Tok::RBrack, "']'");
    return ljf_async(std::move(gamma), {}, rhs, true);
  }
  return ljf_async(std::move(gamma), {}, p_iformula(c), false);
}

inline LkfSequent p_lkf_sequent(Cursor& c) {
  c.eat(Tok::Turnstile, "'|-'");
  c.eat(Tok::LBrack, "'['");
  std::vector<CF> theta = p_czone_list(c, Tok::RBrack);
  c.eat(Tok::RBrack, "']'");
  if (c.accept(Tok::Lt)) {
    CF focus = classical_nnf(p_cformula(c));
    c.eat(Tok::Gt, "'>'");
    return lkf_focus(std::move(theta), focus);
  }
  std::vector<CF> gamma;
  if (c.accept(Tok::Comma)) {
    gamma.push_back(classical_nnf(p_cformula(c)));
    while (c.accept(Tok::Comma)) gamma.push_back(classical_nnf(p_cformula(c)));
  }
  return lkf_async(std::move(theta), std::move(gamma));
}

inline LlfSequent p_llf_sequent(Cursor& c) {
  c.eat(Tok::Turnstile, "'|-'");
  c.eat(Tok::LBrack, "'['");
  std::vector<LF> psi = p_lzone_list(c, Tok::RBrack);
  c.eat(Tok::RBrack, "']'");
  c.eat(Tok::LBrack, "'['");
  std::vector<LF> delta = p_lzone_list(c, Tok::RBrack);
  c.eat(Tok::RBrack, "']'");
  if (c.accept(Tok::Caret)) {
    std::vector<LF> list;
    if (c.kind() != Tok::End) {
      list.push_back(p_lformula(c));
      while (c.accept(Tok::Comma)) list.push_back(p_lformula(c));
    }
    return llf_async(std::move(psi), std::move(delta), std::move(list));
  }
  if (c.kind() == Tok::Ident && c.cur().text == "v") {
    c.eat(Tok::Ident, "'v'");
    return llf_focus(std::move(psi), std::move(delta), p_lformula(c));
  }
  throw ParseError("expected '^' or 'v' after the bounded zone", c.cur().pos);
}

inline LjSequent p_lj_sequent(Cursor& c) {
  std::vector<IF> gamma;
  if (c.kind() != Tok::Turnstile) {
    gamma.push_back(p_iformula(c));
    while (c.accept(Tok::Comma)) gamma.push_back(p_iformula(c));
  }
  c.eat(Tok::Turnstile, "'|-'");
  return lj_sequent(std::move(gamma), p_iformula(c));
}

}  // namespace detail

inline LjfSequent parse_ljf_sequent(const std::string& s, bool internal = false) {
  detail::Cursor c = detail::make_cursor(s, internal);
  LjfSequent out = detail::p_ljf_sequent(c);
  c.eat(detail::Tok::End, "end of input");
  return out;
}

inline LkfSequent parse_lkf_sequent(const std::string& s, bool internal = false) {
  detail::Cursor c = detail::make_cursor(s, internal);
  LkfSequent out = detail::p_lkf_sequent(c);
  c.eat(detail::Tok::End, "end of input");
  return out;
}

inline LlfSequent parse_llf_sequent(const std::string& s, bool internal = false) {
  detail::Cursor c = detail::make_cursor(s, internal);
  LlfSequent out = detail::p_llf_sequent(c);
  c.eat(detail::Tok::End, "end of input");
  return out;
}

inline LjSequent parse_lj_sequent(const std::string& s, bool internal = false) {
  detail::Cursor c = detail::make_cursor(s, internal);
  LjSequent out = detail::p_lj_sequent(c);
  c.eat(detail::Tok::End, "end of input");
  return out;
}

}  // namespace focalis
