#pragma once

#include <string>
#include <vector>

#include "focalis/polarity.hpp"
#include "focalis/proof.hpp"
#include "focalis/sequent.hpp"

// Checker for focused intuitionistic proofs. Each node is validated
// against its rule: the expected premises are recomputed from the
// conclusion (plus the Inst payload and, where a rule picks a principal
// formula out of a zone, the choice recovered from the actual premise)
// and compared as multisets. The five cut rules are admissible and only
// accepted when explicitly enabled.

namespace focalis {

struct CheckOptions {
  bool allow_cut = false;
};

struct CheckResult {
  bool ok = true;
  std::string error;

  static CheckResult good() { return {}; }
  static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }
  explicit operator bool() const { return ok; }
};

namespace detail {

class LjfChecker {
 public:
  LjfChecker(const BiasMap& bias, CheckOptions opt) : bias_(bias), opt_(opt) {}

  CheckResult check(const ProofTree& p) const {
    CheckResult r = check_node(p);
    if (!r.ok) return r;
    for (const ProofTree& q : p.premises) {
      r = check(q);
      if (!r.ok) return r;
    }
    return CheckResult::good();
  }

 private:
  BiasMap bias_;
  CheckOptions opt_;

  bool storable(const IF& f) const {  // may enter [G]
    return is_iatom(f) || ipolarity(f, bias_) == Polarity::Neg;
  }
  bool boxable(const IF& f) const {  // may be written [R]
    return is_iatom(f) || ipolarity(f, bias_) == Polarity::Pos;
  }
  bool pos(const IF& f) const { return ipolarity(f, bias_) == Polarity::Pos; }
  bool neg(const IF& f) const { return ipolarity(f, bias_) == Polarity::Neg; }

  static CheckResult bad(const std::string& rule, const LjfSequent& s,
                         const std::string& why) {
    return CheckResult::fail("rule " + rule + ": " + why + "  at  " +
                             print_sequent(s));
  }

  static bool occurs_in_sequent(const LjfSequent& s, const std::string& sym) {
    for (const IF& f : s.gamma)
      if (occurs_symbol(f, sym)) return true;
    for (const IF& f : s.theta)
      if (occurs_symbol(f, sym)) return true;
    if (s.rhs && occurs_symbol(s.rhs, sym)) return true;
    if (s.focus && occurs_symbol(s.focus, sym)) return true;
    return false;
  }

  // gamma(a) + gamma(b) == gamma(c) as multisets
  static bool zones_split(const std::vector<IF>& a, const std::vector<IF>& b,
                          const std::vector<IF>& c) {
    std::vector<IF> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    return multiset_equal(merged, c, ILess{}, iequal);
  }

  CheckResult check_node(const ProofTree& p) const {
    const LjfSequent* cp = std::get_if<LjfSequent>(&p.conclusion);
    if (!cp) return CheckResult::fail("rule " + p.rule + ": not an LJF sequent");
    const LjfSequent& c = *cp;
    const std::string& r = p.rule;

    auto arity = [&](size_t n) -> bool { return p.premises.size() == n; };
    auto prem = [&](size_t i) -> const LjfSequent* {
      return std::get_if<LjfSequent>(&p.premises[i].conclusion);
    };

    // ---- initial and unit axioms ----
    if (r == "Ir") {
      if (!arity(0)) return bad(r, c, "axiom takes no premises");
      if (c.form != LjfForm::RightFocus || !is_iatom(c.focus) || !pos(c.focus))
        return bad(r, c, "needs right focus on a positive atom");
      if (!zone_contains(c.gamma, c.focus, iequal))
        return bad(r, c, "focused atom not among the hypotheses");
      return CheckResult::good();
    }
    if (r == "Il") {
      if (!arity(0)) return bad(r, c, "axiom takes no premises");
      if (c.form != LjfForm::LeftFocus || !is_iatom(c.focus) || !neg(c.focus))
        return bad(r, c, "needs left focus on a negative atom");
      if (!iequal(c.focus, c.rhs))
        return bad(r, c, "focused atom differs from the goal");
      return CheckResult::good();
    }
    if (r == "trueR") {
      if (!arity(0)) return bad(r, c, "axiom takes no premises");
      if (c.form != LjfForm::RightFocus || c.focus->kind != IKind::True)
        return bad(r, c, "needs right focus on true");
      return CheckResult::good();
    }
    if (r == "falseL") {
      if (!arity(0)) return bad(r, c, "axiom takes no premises");
      if (c.form != LjfForm::Async ||
          !zone_contains(c.theta, ifalse(), iequal))
        return bad(r, c, "needs false in the staging zone");
      return CheckResult::good();
    }

    // ---- structural rules ----
    if (r == "[]l") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::Async || q->form != LjfForm::Async)
        return bad(r, c, "needs unfocused conclusion and premise");
      // the stored formula is whatever entered the premise's [G]
      std::vector<IF> added = q->gamma;
      if (!multiset_subtract(added, c.gamma, iequal) || added.size() != 1)
        return bad(r, c, "premise must extend [G] by exactly one formula");
      const IF& stored = added[0];
      if (!storable(stored))
        return bad(r, c, "only negative formulas and atoms can be stored");
      LjfSequent want = c;
      want.gamma = q->gamma;
      std::vector<IF> th = c.theta;
      if (!multiset_subtract(th, {stored}, iequal))
        return bad(r, c, "stored formula missing from the staging zone");
      want.theta = th;
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "[]r") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::Async || c.boxed)
        return bad(r, c, "conclusion goal must not be boxed yet");
      if (!boxable(c.rhs))
        return bad(r, c, "only positive formulas and atoms can be boxed");
      LjfSequent want = c;
      want.boxed = true;
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "Lf") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || !c.is_border()) return bad(r, c, "conclusion must be a border");
      if (q->form != LjfForm::LeftFocus)
        return bad(r, c, "premise must be left-focused");
      if (!neg(q->focus)) return bad(r, c, "left focus must be negative");
      if (!zone_contains(c.gamma, q->focus, iequal))
        return bad(r, c, "focused formula not among the hypotheses");
      LjfSequent want = ljf_left_focus(c.gamma, q->focus, c.rhs);
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "Rf") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || !c.is_border()) return bad(r, c, "conclusion must be a border");
      if (!pos(c.rhs)) return bad(r, c, "goal must be positive to focus right");
      LjfSequent want = ljf_right_focus(c.gamma, c.rhs);
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "Rl") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::LeftFocus)
        return bad(r, c, "conclusion must be left-focused");
      if (!pos(c.focus)) return bad(r, c, "released formula must be positive");
      LjfSequent want = ljf_async(c.gamma, {c.focus}, c.rhs, true);
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "Rr") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::RightFocus)
        return bad(r, c, "conclusion must be right-focused");
      if (!neg(c.focus)) return bad(r, c, "released formula must be negative");
      LjfSequent want = ljf_async(c.gamma, {}, c.focus, false);
      if (!ljf_equal(want, *q)) return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }

    // ---- staging-zone rules: principal formula recovered by matching ----
    if (r == "trueL" || r == "&+L" || r == "|L" || r == "existsL") {
      if (c.form != LjfForm::Async)
        return bad(r, c, "conclusion must be unfocused");
      size_t want_arity = r == "|L" ? 2 : 1;
      if (!arity(want_arity)) return bad(r, c, "wrong number of premises");
      for (size_t i = 0; i < want_arity; ++i)
        if (!prem(i) || prem(i)->form != LjfForm::Async)
          return bad(r, c, "premises must be unfocused");
      for (size_t pi = 0; pi < c.theta.size(); ++pi) {
        const IF& f = c.theta[pi];
        std::vector<IF> rest = c.theta;
        rest.erase(rest.begin() + static_cast<long>(pi));
        if (r == "trueL" && f->kind == IKind::True) {
          LjfSequent want = ljf_async(c.gamma, rest, c.rhs, c.boxed);
          if (ljf_equal(want, *prem(0))) return CheckResult::good();
        } else if (r == "&+L" && f->kind == IKind::ConjPos) {
          std::vector<IF> th = rest;
          th.push_back(f->left);
          th.push_back(f->right);
          LjfSequent want = ljf_async(c.gamma, th, c.rhs, c.boxed);
          if (ljf_equal(want, *prem(0))) return CheckResult::good();
        } else if (r == "|L" && f->kind == IKind::Disj) {
          std::vector<IF> ta = rest, tb = rest;
          ta.push_back(f->left);
          tb.push_back(f->right);
          if (ljf_equal(ljf_async(c.gamma, ta, c.rhs, c.boxed), *prem(0)) &&
              ljf_equal(ljf_async(c.gamma, tb, c.rhs, c.boxed), *prem(1)))
            return CheckResult::good();
        } else if (r == "existsL" && f->kind == IKind::Exists) {
          if (p.inst.kind != Inst::Kind::TermArg)
            return bad(r, c, "needs an eigenvariable in inst");
          const Term& e = p.inst.term;
          if (e.kind != Term::Kind::App || !e.args.empty())
            return bad(r, c, "eigenvariable must be a fresh constant");
          if (occurs_in_sequent(c, e.name))
            return bad(r, c, "eigenvariable occurs in the conclusion");
          std::vector<IF> th = rest;
          th.push_back(subst(f->left, f->name, e));
          LjfSequent want = ljf_async(c.gamma, th, c.rhs, c.boxed);
          if (ljf_equal(want, *prem(0))) return CheckResult::good();
        }
      }
      return bad(r, c, "no staging-zone formula yields the given premises");
    }

    // ---- right asynchronous rules ----
    if (r == "&-R") {
      if (!arity(2)) return bad(r, c, "takes two premises");
      const LjfSequent *a = prem(0), *b = prem(1);
      if (!a || !b || c.form != LjfForm::Async || c.boxed ||
          c.rhs->kind != IKind::ConjNeg)
        return bad(r, c, "conclusion goal must be a negative conjunction");
      if (!ljf_equal(ljf_async(c.gamma, c.theta, c.rhs->left, false), *a) ||
          !ljf_equal(ljf_async(c.gamma, c.theta, c.rhs->right, false), *b))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "->R") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::Async || c.boxed ||
          c.rhs->kind != IKind::Impl)
        return bad(r, c, "conclusion goal must be an implication");
      std::vector<IF> th = c.theta;
      th.push_back(c.rhs->left);
      if (!ljf_equal(ljf_async(c.gamma, th, c.rhs->right, false), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "forallR") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::Async || c.boxed ||
          c.rhs->kind != IKind::Forall)
        return bad(r, c, "conclusion goal must be universally quantified");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(r, c, "needs an eigenvariable in inst");
      const Term& e = p.inst.term;
      if (e.kind != Term::Kind::App || !e.args.empty())
        return bad(r, c, "eigenvariable must be a fresh constant");
      if (occurs_in_sequent(c, e.name))
        return bad(r, c, "eigenvariable occurs in the conclusion");
      IF body = subst(c.rhs->left, c.rhs->name, e);
      if (!ljf_equal(ljf_async(c.gamma, c.theta, body, false), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }

    // ---- left-focused rules ----
    if (r == "&-L") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::LeftFocus ||
          c.focus->kind != IKind::ConjNeg)
        return bad(r, c, "needs left focus on a negative conjunction");
      if (p.inst.kind != Inst::Kind::Branch ||
          (p.inst.branch != 1 && p.inst.branch != 2))
        return bad(r, c, "needs a conjunct selector in inst");
      IF sel = p.inst.branch == 1 ? c.focus->left : c.focus->right;
      if (!ljf_equal(ljf_left_focus(c.gamma, sel, c.rhs), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "->L") {
      if (!arity(2)) return bad(r, c, "takes two premises");
      const LjfSequent *a = prem(0), *b = prem(1);
      if (!a || !b || c.form != LjfForm::LeftFocus ||
          c.focus->kind != IKind::Impl)
        return bad(r, c, "needs left focus on an implication");
      if (!ljf_equal(ljf_right_focus(c.gamma, c.focus->left), *a) ||
          !ljf_equal(ljf_left_focus(c.gamma, c.focus->right, c.rhs), *b))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "forallL") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::LeftFocus ||
          c.focus->kind != IKind::Forall)
        return bad(r, c, "needs left focus on a universal");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(r, c, "needs a witness term in inst");
      IF body = subst(c.focus->left, c.focus->name, p.inst.term);
      if (!ljf_equal(ljf_left_focus(c.gamma, body, c.rhs), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }

    // ---- right-focused rules ----
    if (r == "&+R") {
      if (!arity(2)) return bad(r, c, "takes two premises");
      const LjfSequent *a = prem(0), *b = prem(1);
      if (!a || !b || c.form != LjfForm::RightFocus ||
          c.focus->kind != IKind::ConjPos)
        return bad(r, c, "needs right focus on a positive conjunction");
      if (!ljf_equal(ljf_right_focus(c.gamma, c.focus->left), *a) ||
          !ljf_equal(ljf_right_focus(c.gamma, c.focus->right), *b))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "|R") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::RightFocus || c.focus->kind != IKind::Disj)
        return bad(r, c, "needs right focus on a disjunction");
      if (p.inst.kind != Inst::Kind::Branch ||
          (p.inst.branch != 1 && p.inst.branch != 2))
        return bad(r, c, "needs a disjunct selector in inst");
      IF sel = p.inst.branch == 1 ? c.focus->left : c.focus->right;
      if (!ljf_equal(ljf_right_focus(c.gamma, sel), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }
    if (r == "existsR") {
      if (!arity(1)) return bad(r, c, "takes one premise");
      const LjfSequent* q = prem(0);
      if (!q || c.form != LjfForm::RightFocus ||
          c.focus->kind != IKind::Exists)
        return bad(r, c, "needs right focus on an existential");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(r, c, "needs a witness term in inst");
      IF body = subst(c.focus->left, c.focus->name, p.inst.term);
      if (!ljf_equal(ljf_right_focus(c.gamma, body), *q))
        return bad(r, c, "premise mismatch");
      return CheckResult::good();
    }

    // ---- cut rules (admissible; only with allow_cut) ----
    if (r == "cut+" || r == "cut-" || r == "cut1<-" || r == "cut2<-" ||
        r == "cut->") {
      if (!opt_.allow_cut)
        return bad(r, c, "cut rules are disabled (enable with allow_cut)");
      if (!arity(2)) return bad(r, c, "takes two premises");
      const LjfSequent *a = prem(0), *b = prem(1);
      if (!a || !b) return bad(r, c, "premises must be LJF sequents");

      if (r == "cut+") {
        // [G],Th --> P   [G'],Th',P --> R'   =>   [GG'],ThTh' --> R'
        if (c.form != LjfForm::Async || a->form != LjfForm::Async ||
            b->form != LjfForm::Async || a->boxed)
          return bad(r, c, "needs unfocused premises and conclusion");
        const IF& cut = a->rhs;
        if (!pos(cut)) return bad(r, c, "cut formula must be positive");
        if (b->boxed != c.boxed || !iequal(b->rhs, c.rhs))
          return bad(r, c, "goal mismatch");
        std::vector<IF> bth = b->theta;
        if (!multiset_subtract(bth, {cut}, iequal))
          return bad(r, c, "cut formula missing from second premise");
        std::vector<IF> th = a->theta;
        th.insert(th.end(), bth.begin(), bth.end());
        if (!multiset_equal(th, c.theta, ILess{}, iequal) ||
            !zones_split(a->gamma, b->gamma, c.gamma))
          return bad(r, c, "zones do not split");
        return CheckResult::good();
      }
      if (r == "cut-") {
        // [G],Th --> C   [C,G'],Th' --> R'   =>   [GG'],ThTh' --> R'
        if (c.form != LjfForm::Async || a->form != LjfForm::Async ||
            b->form != LjfForm::Async || a->boxed)
          return bad(r, c, "needs unfocused premises and conclusion");
        const IF& cut = a->rhs;
        if (!storable(cut)) return bad(r, c, "cut formula must be storable");
        if (b->boxed != c.boxed || !iequal(b->rhs, c.rhs))
          return bad(r, c, "goal mismatch");
        std::vector<IF> bg = b->gamma;
        if (!multiset_subtract(bg, {cut}, iequal))
          return bad(r, c, "cut formula missing from second premise");
        std::vector<IF> th = a->theta;
        th.insert(th.end(), b->theta.begin(), b->theta.end());
        if (!multiset_equal(th, c.theta, ILess{}, iequal) ||
            !zones_split(a->gamma, bg, c.gamma))
          return bad(r, c, "zones do not split");
        return CheckResult::good();
      }
      if (r == "cut1<-") {
        // [G] -{B}-> [P]   [G'],P --> [R]   =>   [GG'] -{B}-> [R]
        if (c.form != LjfForm::LeftFocus || a->form != LjfForm::LeftFocus ||
            b->form != LjfForm::Async || !b->boxed)
          return bad(r, c, "premise forms do not fit");
        if (!iequal(a->focus, c.focus) || !iequal(b->rhs, c.rhs))
          return bad(r, c, "focus or goal mismatch");
        if (b->theta.size() != 1 || !iequal(b->theta[0], a->rhs))
          return bad(r, c, "second premise must stage exactly the cut formula");
        if (!zones_split(a->gamma, b->gamma, c.gamma))
          return bad(r, c, "zones do not split");
        return CheckResult::good();
      }
      if (r == "cut2<-") {
        // [G] --> N   [N,G'] -{B}-> [R]   =>   [GG'] -{B}-> [R]
        if (c.form != LjfForm::LeftFocus || a->form != LjfForm::Async ||
            a->boxed || !a->theta.empty() || b->form != LjfForm::LeftFocus)
          return bad(r, c, "premise forms do not fit");
        const IF& cut = a->rhs;
        if (!neg(cut)) return bad(r, c, "cut formula must be negative");
        if (!iequal(b->focus, c.focus) || !iequal(b->rhs, c.rhs))
          return bad(r, c, "focus or goal mismatch");
        std::vector<IF> bg = b->gamma;
        if (!multiset_subtract(bg, {cut}, iequal))
          return bad(r, c, "cut formula missing from second premise");
        if (!zones_split(a->gamma, bg, c.gamma))
          return bad(r, c, "zones do not split");
        return CheckResult::good();
      }
      // cut->:  [G] =>C   [C,G'] => R   =>   [GG'] => R
      if (c.form != LjfForm::RightFocus || a->form != LjfForm::RightFocus ||
          b->form != LjfForm::RightFocus)
        return bad(r, c, "premise forms do not fit");
      const IF& cut = a->focus;
      if (!storable(cut)) return bad(r, c, "cut formula must be storable");
      if (!iequal(b->focus, c.focus)) return bad(r, c, "goal mismatch");
      std::vector<IF> bg = b->gamma;
      if (!multiset_subtract(bg, {cut}, iequal))
        return bad(r, c, "cut formula missing from second premise");
      if (!zones_split(a->gamma, bg, c.gamma))
        return bad(r, c, "zones do not split");
      return CheckResult::good();
    }

    return bad(r, c, "unknown rule");
  }
};

}  // namespace detail

inline CheckResult check_ljf(const ProofTree& p, const BiasMap& bias,
                             CheckOptions opt = {}) {
  return detail::LjfChecker(bias, opt).check(p);
}

}  // namespace focalis
