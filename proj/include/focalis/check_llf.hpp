#pragma once

#include <string>
#include <vector>

#include "focalis/check_ljf.hpp"  // CheckResult
#include "focalis/lformula.hpp"
#include "focalis/proof.hpp"
#include "focalis/sequent.hpp"

// Rule-by-rule checker for triadic linear-logic proofs
// |- [Psi] [Delta] ^ L (invertible phase over the ordered list) and
// |- [Psi] [Delta] v F (focused phase). The list is processed at its
// head; storing moves non-invertible heads into the bounded zone, and
// decides pick a focus from either zone. Atom bias decides which
// literals may stay under focus: a positive literal closes against its
// dual (init), a negative literal is released.

namespace focalis {

inline bool llf_literal_positive(const LF& f, const BiasMap& bias) {
  if (f->kind == LKind::Atom) return bias.of(f->name) == Polarity::Pos;
  if (f->kind == LKind::NegAtom) return bias.of(f->name) == Polarity::Neg;
  return false;
}

inline bool llf_literal_negative(const LF& f, const BiasMap& bias) {
  return is_lliteral(f) && !llf_literal_positive(f, bias);
}

namespace detail {

class LlfChecker {
 public:
  explicit LlfChecker(const BiasMap& bias) : bias_(bias) {}

  CheckResult check(const ProofTree& p) {
    if (calculus_of(p) != Calculus::Llf)
      return CheckResult::fail("not a triadic linear sequent");
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

  static const LlfSequent& as_llf(const ProofTree& p) {
    return std::get<LlfSequent>(p.conclusion);
  }

  static CheckResult bad(const ProofTree& p, const std::string& why) {
    return CheckResult::fail("rule " + p.rule + ": " + why + " at '" +
                             print_sequent(p.conclusion) + "'");
  }

  static bool occurs_in_sequent(const LlfSequent& s, const std::string& sym) {
    for (const LF& f : s.psi)
      if (occurs_symbol(f, sym)) return true;
    for (const LF& f : s.delta)
      if (occurs_symbol(f, sym)) return true;
    for (const LF& f : s.list)
      if (occurs_symbol(f, sym)) return true;
    if (s.focus && occurs_symbol(s.focus, sym)) return true;
    return false;
  }

  static bool same_psi(const LlfSequent& a, const LlfSequent& b) {
    return multiset_equal(a.psi, b.psi, LLess{}, lequal);
  }
  static bool same_delta(const LlfSequent& a, const LlfSequent& b) {
    return multiset_equal(a.delta, b.delta, LLess{}, lequal);
  }
  static bool list_is(const LlfSequent& q, const std::vector<LF>& want) {
    if (q.list.size() != want.size()) return false;
    for (size_t i = 0; i < want.size(); ++i)
      if (!lequal(q.list[i], want[i])) return false;
    return true;
  }

  // tail of the conclusion list with fresh heads pushed in front
  static std::vector<LF> rebuilt(const LlfSequent& c,
                                 const std::vector<LF>& heads) {
    std::vector<LF> out = heads;
    out.insert(out.end(), c.list.begin() + 1, c.list.end());
    return out;
  }

  CheckResult check_node(const ProofTree& p) {
    const LlfSequent& c = as_llf(p);
    const std::string& r = p.rule;
    auto prem = [&](size_t i) -> const LlfSequent& {
      return as_llf(p.premises[i]);
    };
    auto arity = [&](size_t n) -> bool { return p.premises.size() == n; };

    // ---- invertible phase: rules on the list head ----
    if (r == "bot" || r == "par" || r == "?" || r == "top" || r == "&" ||
        r == "forall" || r == "store") {
      if (c.focused) return bad(p, "requires the invertible phase");
      if (c.list.empty()) return bad(p, "list must not be empty");
      const LF& f = c.list[0];

      if (r == "bot") {
        if (!arity(1)) return bad(p, "takes one premise");
        if (f->kind != LKind::Bot) return bad(p, "head must be bottom");
        const LlfSequent& q = prem(0);
        if (q.focused || !same_psi(c, q) || !same_delta(c, q) ||
            !list_is(q, rebuilt(c, {})))
          return bad(p, "premise must drop the head");
        return CheckResult::good();
      }
      if (r == "par") {
        if (!arity(1)) return bad(p, "takes one premise");
        if (f->kind != LKind::Par) return bad(p, "head must be a par");
        const LlfSequent& q = prem(0);
        if (q.focused || !same_psi(c, q) || !same_delta(c, q) ||
            !list_is(q, rebuilt(c, {f->left, f->right})))
          return bad(p, "premise must hold both components in order");
        return CheckResult::good();
      }
      if (r == "?") {
        if (!arity(1)) return bad(p, "takes one premise");
        if (f->kind != LKind::Quest)
          return bad(p, "head must be a question mark");
        const LlfSequent& q = prem(0);
        std::vector<LF> want_psi = c.psi;
        want_psi.push_back(f->left);
        if (q.focused ||
            !multiset_equal(q.psi, want_psi, LLess{}, lequal) ||
            !same_delta(c, q) || !list_is(q, rebuilt(c, {})))
          return bad(p, "premise must move the body to the unbounded zone");
        return CheckResult::good();
      }
      if (r == "top") {
        if (!arity(0)) return bad(p, "axiom takes no premises");
        if (f->kind != LKind::Top) return bad(p, "head must be top");
        return CheckResult::good();
      }
      if (r == "&") {
        if (!arity(2)) return bad(p, "takes two premises");
        if (f->kind != LKind::With) return bad(p, "head must be a with");
        const LlfSequent& a = prem(0);
        const LlfSequent& b = prem(1);
        if (a.focused || b.focused || !same_psi(c, a) || !same_psi(c, b) ||
            !same_delta(c, a) || !same_delta(c, b) ||
            !list_is(a, rebuilt(c, {f->left})) ||
            !list_is(b, rebuilt(c, {f->right})))
          return bad(p, "premises must hold the two components in order");
        return CheckResult::good();
      }
      if (r == "forall") {
        if (!arity(1)) return bad(p, "takes one premise");
        if (f->kind != LKind::Forall)
          return bad(p, "head must be a universal");
        if (p.inst.kind != Inst::Kind::TermArg)
          return bad(p, "needs an eigenvariable record");
        const Term& e = p.inst.term;
        if (e.kind != Term::Kind::App || !e.args.empty())
          return bad(p, "eigenvariable must be a nullary constant");
        if (occurs_in_sequent(c, e.name))
          return bad(p, "eigenvariable occurs in the conclusion");
        const LlfSequent& q = prem(0);
        if (q.focused || !same_psi(c, q) || !same_delta(c, q) ||
            !list_is(q, rebuilt(c, {subst(f->left, f->name, e)})))
          return bad(p, "premise must open the universal");
        return CheckResult::good();
      }
      // store
      if (!arity(1)) return bad(p, "takes one premise");
      if (is_asynchronous(f))
        return bad(p, "invertible heads may not be stored");
      const LlfSequent& q = prem(0);
      std::vector<LF> want_delta = c.delta;
      want_delta.push_back(f);
      if (q.focused || !same_psi(c, q) ||
          !multiset_equal(q.delta, want_delta, LLess{}, lequal) ||
          !list_is(q, rebuilt(c, {})))
        return bad(p, "premise must move the head to the bounded zone");
      return CheckResult::good();
    }

    // ---- decides ----
    if (r == "decide1" || r == "decide2") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (c.focused || !c.list.empty())
        return bad(p, "requires an empty list in the invertible phase");
      const LlfSequent& q = prem(0);
      if (!q.focused) return bad(p, "premise must be focused");
      if (llf_literal_negative(q.focus, bias_))
        return bad(p, "may not decide on a negative literal");
      if (r == "decide1") {
        std::vector<LF> want = c.delta;
        if (!multiset_subtract(want, {q.focus}, lequal))
          return bad(p, "focus must come from the bounded zone");
        if (!same_psi(c, q) ||
            !multiset_equal(q.delta, want, LLess{}, lequal))
          return bad(p, "premise must remove the focus from the bounded zone");
      } else {
        if (!zone_contains(c.psi, q.focus, lequal))
          return bad(p, "focus must come from the unbounded zone");
        if (!same_psi(c, q) || !same_delta(c, q))
          return bad(p, "zones must be kept");
      }
      return CheckResult::good();
    }

    // ---- focused phase ----
    if (!c.focused) return bad(p, "unknown rule");
    const LF& f = c.focus;

    if (r == "one") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (f->kind != LKind::One) return bad(p, "focus must be one");
      if (!c.delta.empty()) return bad(p, "bounded zone must be empty");
      return CheckResult::good();
    }
    if (r == "init1") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!llf_literal_positive(f, bias_))
        return bad(p, "focus must be a positive literal");
      if (c.delta.size() != 1 || !lequal(c.delta[0], lneg(f)))
        return bad(p, "bounded zone must hold exactly the dual literal");
      return CheckResult::good();
    }
    if (r == "init2") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!llf_literal_positive(f, bias_))
        return bad(p, "focus must be a positive literal");
      if (!c.delta.empty()) return bad(p, "bounded zone must be empty");
      if (!zone_contains(c.psi, lneg(f), lequal))
        return bad(p, "unbounded zone lacks the dual literal");
      return CheckResult::good();
    }
    if (r == "tensor") {
      if (!arity(2)) return bad(p, "takes two premises");
      if (f->kind != LKind::Tensor) return bad(p, "focus must be a tensor");
      const LlfSequent& a = prem(0);
      const LlfSequent& b = prem(1);
      if (!a.focused || !b.focused || !same_psi(c, a) || !same_psi(c, b))
        return bad(p, "premises must stay focused with the same context");
      if (!lequal(a.focus, f->left) || !lequal(b.focus, f->right))
        return bad(p, "premise foci must be the two components in order");
      std::vector<LF> joined = a.delta;
      joined.insert(joined.end(), b.delta.begin(), b.delta.end());
      if (!multiset_equal(joined, c.delta, LLess{}, lequal))
        return bad(p, "premises must split the bounded zone exactly");
      return CheckResult::good();
    }
    if (r == "bang") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (f->kind != LKind::Bang) return bad(p, "focus must be banged");
      if (!c.delta.empty()) return bad(p, "bounded zone must be empty");
      const LlfSequent& q = prem(0);
      if (q.focused || !same_psi(c, q) || !q.delta.empty() ||
          !list_is(q, {f->left}))
        return bad(p, "premise must open the body in the invertible phase");
      return CheckResult::good();
    }
    if (r == "plus") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (f->kind != LKind::Plus) return bad(p, "focus must be a plus");
      if (p.inst.kind != Inst::Kind::Branch ||
          (p.inst.branch != 1 && p.inst.branch != 2))
        return bad(p, "needs a branch record");
      LF sel = p.inst.branch == 1 ? f->left : f->right;
      const LlfSequent& q = prem(0);
      if (!q.focused || !same_psi(c, q) || !same_delta(c, q) ||
          !lequal(q.focus, sel))
        return bad(p, "premise focus must be the selected component");
      return CheckResult::good();
    }
    if (r == "exists") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (f->kind != LKind::Exists)
        return bad(p, "focus must be an existential");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(p, "needs a witness record");
      const LlfSequent& q = prem(0);
      if (!q.focused || !same_psi(c, q) || !same_delta(c, q) ||
          !lequal(q.focus, subst(f->left, f->name, p.inst.term)))
        return bad(p, "premise focus must be the instantiated body");
      return CheckResult::good();
    }
    if (r == "release") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (!(is_asynchronous(f) || llf_literal_negative(f, bias_)))
        return bad(p, "focus must be invertible or a negative literal");
      const LlfSequent& q = prem(0);
      if (q.focused || !same_psi(c, q) || !same_delta(c, q) ||
          !list_is(q, {f}))
        return bad(p, "premise must move the focus to the list");
      return CheckResult::good();
    }

    return bad(p, "unknown rule");
  }
};

}  // namespace detail

inline CheckResult check_llf(const ProofTree& p, const BiasMap& bias) {
  return detail::LlfChecker(bias).check(p);
}

inline CheckResult check_llf(const ProofTree& p) {
  return check_llf(p, BiasMap{});
}

}  // namespace focalis
