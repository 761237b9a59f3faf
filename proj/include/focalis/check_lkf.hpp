#pragma once

#include <string>
#include <vector>

#include "focalis/check_ljf.hpp"  // CheckResult / CheckOptions
#include "focalis/polarity.hpp"
#include "focalis/proof.hpp"
#include "focalis/sequent.hpp"

// Rule-by-rule checker for classical focused proofs (one-sided
// sequents |- [Theta], Gamma and |- [Theta] <F>). Every node is
// verified against its stated rule: zones are compared as multisets,
// principal formulas are recovered from the premises, branch and
// witness choices come from the node's instantiation record, and
// eigenvariables must be fresh nullary constants.

namespace focalis {

namespace detail {

class LkfChecker {
 public:
  explicit LkfChecker(const BiasMap& bias) : bias_(bias) {}

  CheckResult check(const ProofTree& p) {
    if (calculus_of(p) != Calculus::Lkf)
      return CheckResult::fail("not a classical focused sequent");
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

  bool pos(const CF& f) const { return cpolarity(f, bias_) == Polarity::Pos; }
  static bool is_literal(const CF& f) {
    return f->kind == CKind::PosLit || f->kind == CKind::NegLit;
  }

  static const LkfSequent& as_lkf(const ProofTree& p) {
    return std::get<LkfSequent>(p.conclusion);
  }

  static CheckResult bad(const ProofTree& p, const std::string& why) {
    return CheckResult::fail("rule " + p.rule + ": " + why + " at '" +
                             print_sequent(p.conclusion) + "'");
  }

  static bool occurs_in_sequent(const LkfSequent& s, const std::string& sym) {
    for (const CF& f : s.theta)
      if (occurs_symbol(f, sym)) return true;
    for (const CF& f : s.gamma)
      if (occurs_symbol(f, sym)) return true;
    if (s.focus && occurs_symbol(s.focus, sym)) return true;
    return false;
  }

  // premise zones for an unfocused rule that rewrites the workbench
  static bool gamma_step(const LkfSequent& c, const LkfSequent& q,
                         const CF& principal, const std::vector<CF>& repl) {
    if (q.focused || c.focused) return false;
    if (!multiset_equal(q.theta, c.theta, CLess{}, cequal)) return false;
    std::vector<CF> want = c.gamma;
    if (!multiset_subtract(want, {principal}, cequal)) return false;
    want.insert(want.end(), repl.begin(), repl.end());
    return multiset_equal(q.gamma, want, CLess{}, cequal);
  }

  CheckResult check_node(const ProofTree& p) {
    const LkfSequent& c = as_lkf(p);
    const std::string& r = p.rule;
    auto prem = [&](size_t i) -> const LkfSequent& {
      return as_lkf(p.premises[i]);
    };
    auto arity = [&](size_t n) -> bool { return p.premises.size() == n; };

    // ---- axioms ----
    if (r == "ID+" || r == "ID-") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!c.focused) return bad(p, "requires a focused sequent");
      if (!is_literal(c.focus)) return bad(p, "focus must be a literal");
      if (r == "ID+" && c.focus->kind != CKind::PosLit)
        return bad(p, "focus must be an atom");
      if (r == "ID-" && c.focus->kind != CKind::NegLit)
        return bad(p, "focus must be a negated atom");
      if (!pos(c.focus)) return bad(p, "focus must be positive");
      if (!zone_contains(c.theta, cdual(c.focus), cequal))
        return bad(p, "stored zone lacks the dual literal");
      return CheckResult::good();
    }
    if (r == "indeed") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!c.focused || c.focus->kind != CKind::True)
        return bad(p, "focus must be the positive truth constant");
      return CheckResult::good();
    }
    if (r == "absurd") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (c.focused) return bad(p, "requires an unfocused sequent");
      if (!zone_contains(c.gamma, cneg_false(), cequal))
        return bad(p, "workbench lacks the negated absurdity");
      return CheckResult::good();
    }

    // ---- structural rules ----
    if (r == "[]") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LkfSequent& q = prem(0);
      if (c.focused || q.focused) return bad(p, "requires unfocused sequents");
      std::vector<CF> added = q.theta;
      if (!multiset_subtract(added, c.theta, cequal) || added.size() != 1)
        return bad(p, "premise must extend the stored zone by one formula");
      CF stored = added[0];
      if (!(pos(stored) || (is_literal(stored) && !pos(stored))))
        return bad(p, "stored formula must be positive or a negative literal");
      std::vector<CF> g = c.gamma;
      if (!multiset_subtract(g, {stored}, cequal) ||
          !multiset_equal(g, q.gamma, CLess{}, cequal))
        return bad(p, "workbench must lose exactly the stored formula");
      return CheckResult::good();
    }
    if (r == "Focus") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LkfSequent& q = prem(0);
      if (c.focused || !q.focused)
        return bad(p, "conclusion unfocused, premise focused");
      if (!c.gamma.empty()) return bad(p, "workbench must be empty");
      if (!pos(q.focus)) return bad(p, "focus must be positive");
      if (!zone_contains(c.theta, q.focus, cequal))
        return bad(p, "focus must be stored");
      if (!multiset_equal(q.theta, c.theta, CLess{}, cequal))
        return bad(p, "stored zone must be kept");
      return CheckResult::good();
    }
    if (r == "Release") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LkfSequent& q = prem(0);
      if (!c.focused || q.focused)
        return bad(p, "conclusion focused, premise unfocused");
      if (pos(c.focus)) return bad(p, "focus must be negative");
      if (!multiset_equal(q.theta, c.theta, CLess{}, cequal))
        return bad(p, "stored zone must be kept");
      if (q.gamma.size() != 1 || !cequal(q.gamma[0], c.focus))
        return bad(p, "premise workbench must hold exactly the focus");
      return CheckResult::good();
    }

    // ---- unfocused logical rules ----
    if (r == "trivial") {
      if (!arity(1)) return bad(p, "takes one premise");
      for (const CF& f : c.gamma)
        if (f->kind == CKind::NegTrue && gamma_step(c, prem(0), f, {}))
          return CheckResult::good();
      return bad(p, "premise must drop one negated truth constant");
    }
    if (r == "&-") {
      if (!arity(2)) return bad(p, "takes two premises");
      for (const CF& f : c.gamma) {
        if (f->kind != CKind::AndNeg) continue;
        if (gamma_step(c, prem(0), f, {f->left}) &&
            gamma_step(c, prem(1), f, {f->right}))
          return CheckResult::good();
      }
      return bad(p, "premises do not decompose a negative conjunction");
    }
    if (r == "|-") {
      if (!arity(1)) return bad(p, "takes one premise");
      for (const CF& f : c.gamma) {
        if (f->kind != CKind::OrNeg) continue;
        if (gamma_step(c, prem(0), f, {f->left, f->right}))
          return CheckResult::good();
      }
      return bad(p, "premise does not decompose a negative disjunction");
    }
    if (r == "forall") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(p, "needs an eigenvariable record");
      const Term& e = p.inst.term;
      if (e.kind != Term::Kind::App || !e.args.empty())
        return bad(p, "eigenvariable must be a nullary constant");
      if (occurs_in_sequent(c, e.name))
        return bad(p, "eigenvariable occurs in the conclusion");
      for (const CF& f : c.gamma) {
        if (f->kind != CKind::Forall) continue;
        if (gamma_step(c, prem(0), f, {subst(f->left, f->name, e)}))
          return CheckResult::good();
      }
      return bad(p, "premise does not open a universal");
    }

    // ---- focused logical rules ----
    if (r == "&+") {
      if (!arity(2)) return bad(p, "takes two premises");
      const LkfSequent& a = prem(0);
      const LkfSequent& b = prem(1);
      if (!c.focused || !a.focused || !b.focused)
        return bad(p, "requires focused sequents");
      if (c.focus->kind != CKind::AndPos)
        return bad(p, "focus must be a positive conjunction");
      if (!multiset_equal(a.theta, c.theta, CLess{}, cequal) ||
          !multiset_equal(b.theta, c.theta, CLess{}, cequal))
        return bad(p, "stored zones must match");
      if (!cequal(a.focus, c.focus->left) || !cequal(b.focus, c.focus->right))
        return bad(p, "premise foci must be the two conjuncts in order");
      return CheckResult::good();
    }
    if (r == "|+") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LkfSequent& q = prem(0);
      if (!c.focused || !q.focused) return bad(p, "requires focused sequents");
      if (c.focus->kind != CKind::OrPos)
        return bad(p, "focus must be a positive disjunction");
      if (p.inst.kind != Inst::Kind::Branch)
        return bad(p, "needs a branch record");
      CF sel = p.inst.branch == 1 ? c.focus->left : c.focus->right;
      if (p.inst.branch != 1 && p.inst.branch != 2)
        return bad(p, "branch must select the first or second disjunct");
      if (!multiset_equal(q.theta, c.theta, CLess{}, cequal))
        return bad(p, "stored zone must be kept");
      if (!cequal(q.focus, sel))
        return bad(p, "premise focus must be the selected disjunct");
      return CheckResult::good();
    }
    if (r == "exists") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LkfSequent& q = prem(0);
      if (!c.focused || !q.focused) return bad(p, "requires focused sequents");
      if (c.focus->kind != CKind::Exists)
        return bad(p, "focus must be an existential");
      if (p.inst.kind != Inst::Kind::TermArg)
        return bad(p, "needs a witness record");
      if (!multiset_equal(q.theta, c.theta, CLess{}, cequal))
        return bad(p, "stored zone must be kept");
      if (!cequal(q.focus, subst(c.focus->left, c.focus->name, p.inst.term)))
        return bad(p, "premise focus must be the instantiated body");
      return CheckResult::good();
    }

    return bad(p, "unknown rule");
  }
};

}  // namespace detail

inline CheckResult check_lkf(const ProofTree& p, const BiasMap& bias) {
  return detail::LkfChecker(bias).check(p);
}

inline CheckResult check_lkf(const ProofTree& p) {
  return check_lkf(p, BiasMap{});
}

}  // namespace focalis
