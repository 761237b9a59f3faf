#pragma once

#include <functional>
#include <string>
#include <vector>

#include "focalis/check_ljf.hpp"  // CheckResult
#include "focalis/iformula.hpp"
#include "focalis/proof.hpp"
#include "focalis/sequent.hpp"

// A small two-sided sequent calculus over the propositional
// connectives, with consumption-style left rules and an explicit
// contraction rule. Conjunction is read without an annotation: both
// parsed forms behave identically here. The checker validates proof
// trees node by node; the enumerator lists every proof within a
// proof-node bound, which is the input side of the translation to
// triadic linear-logic proofs.

namespace focalis {

namespace detail {

inline bool lj_is_conj(const IF& f) {
  return f->kind == IKind::ConjPos || f->kind == IKind::ConjNeg;
}

class LjChecker {
 public:
  CheckResult check(const ProofTree& p) {
    if (calculus_of(p) != Calculus::Lj)
      return CheckResult::fail("not a two-sided sequent");
    CheckResult r = check_node(p);
    if (!r.ok) return r;
    for (const ProofTree& q : p.premises) {
      r = check(q);
      if (!r.ok) return r;
    }
    return CheckResult::good();
  }

 private:
  static const LjSequent& as_lj(const ProofTree& p) {
    return std::get<LjSequent>(p.conclusion);
  }

  static CheckResult bad(const ProofTree& p, const std::string& why) {
    return CheckResult::fail("rule " + p.rule + ": " + why + " at '" +
                             print_sequent(p.conclusion) + "'");
  }

  // premise = conclusion with the principal formula replaced
  static bool left_step(const LjSequent& c, const LjSequent& q,
                        const IF& principal, const std::vector<IF>& repl,
                        const IF& want_rhs) {
    std::vector<IF> want = c.gamma;
    if (!multiset_subtract(want, {principal}, iequal)) return false;
    want.insert(want.end(), repl.begin(), repl.end());
    return multiset_equal(q.gamma, want, ILess{}, iequal) &&
           iequal(q.rhs, want_rhs);
  }

  CheckResult check_node(const ProofTree& p) {
    const LjSequent& c = as_lj(p);
    const std::string& r = p.rule;
    auto prem = [&](size_t i) -> const LjSequent& {
      return as_lj(p.premises[i]);
    };
    auto arity = [&](size_t n) -> bool { return p.premises.size() == n; };

    if (r == "Ax") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!is_iatom(c.rhs)) return bad(p, "goal must be atomic");
      if (!zone_contains(c.gamma, c.rhs, iequal))
        return bad(p, "goal must occur on the left");
      return CheckResult::good();
    }
    if (r == "falseL") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (!zone_contains(c.gamma, ifalse(), iequal))
        return bad(p, "left side lacks falsity");
      return CheckResult::good();
    }
    if (r == "trueR") {
      if (!arity(0)) return bad(p, "axiom takes no premises");
      if (c.rhs->kind != IKind::True) return bad(p, "goal must be truth");
      return CheckResult::good();
    }
    if (r == "&L") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (p.inst.kind != Inst::Kind::Branch ||
          (p.inst.branch != 1 && p.inst.branch != 2))
        return bad(p, "needs a branch record");
      for (const IF& f : c.gamma) {
        if (!lj_is_conj(f)) continue;
        IF sel = p.inst.branch == 1 ? f->left : f->right;
        if (left_step(c, prem(0), f, {sel}, c.rhs)) return CheckResult::good();
      }
      return bad(p, "premise does not project a conjunction");
    }
    if (r == "|L") {
      if (!arity(2)) return bad(p, "takes two premises");
      for (const IF& f : c.gamma) {
        if (f->kind != IKind::Disj) continue;
        if (left_step(c, prem(0), f, {f->left}, c.rhs) &&
            left_step(c, prem(1), f, {f->right}, c.rhs))
          return CheckResult::good();
      }
      return bad(p, "premises do not split a disjunction");
    }
    if (r == "->L") {
      if (!arity(2)) return bad(p, "takes two premises");
      for (const IF& f : c.gamma) {
        if (f->kind != IKind::Impl) continue;
        if (left_step(c, prem(0), f, {}, f->left) &&
            left_step(c, prem(1), f, {f->right}, c.rhs))
          return CheckResult::good();
      }
      return bad(p, "premises do not use an implication");
    }
    if (r == "&R") {
      if (!arity(2)) return bad(p, "takes two premises");
      if (!lj_is_conj(c.rhs)) return bad(p, "goal must be a conjunction");
      const LjSequent& a = prem(0);
      const LjSequent& b = prem(1);
      if (!multiset_equal(a.gamma, c.gamma, ILess{}, iequal) ||
          !multiset_equal(b.gamma, c.gamma, ILess{}, iequal) ||
          !iequal(a.rhs, c.rhs->left) || !iequal(b.rhs, c.rhs->right))
        return bad(p, "premises must prove the two conjuncts in order");
      return CheckResult::good();
    }
    if (r == "|R") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (c.rhs->kind != IKind::Disj)
        return bad(p, "goal must be a disjunction");
      if (p.inst.kind != Inst::Kind::Branch ||
          (p.inst.branch != 1 && p.inst.branch != 2))
        return bad(p, "needs a branch record");
      IF sel = p.inst.branch == 1 ? c.rhs->left : c.rhs->right;
      const LjSequent& q = prem(0);
      if (!multiset_equal(q.gamma, c.gamma, ILess{}, iequal) ||
          !iequal(q.rhs, sel))
        return bad(p, "premise must prove the selected disjunct");
      return CheckResult::good();
    }
    if (r == "->R") {
      if (!arity(1)) return bad(p, "takes one premise");
      if (c.rhs->kind != IKind::Impl)
        return bad(p, "goal must be an implication");
      const LjSequent& q = prem(0);
      std::vector<IF> want = c.gamma;
      want.push_back(c.rhs->left);
      if (!multiset_equal(q.gamma, want, ILess{}, iequal) ||
          !iequal(q.rhs, c.rhs->right))
        return bad(p, "premise must assume the antecedent");
      return CheckResult::good();
    }
    if (r == "contract") {
      if (!arity(1)) return bad(p, "takes one premise");
      const LjSequent& q = prem(0);
      if (!iequal(q.rhs, c.rhs)) return bad(p, "goal must be kept");
      std::vector<IF> extra = q.gamma;
      if (!multiset_subtract(extra, c.gamma, iequal) || extra.size() != 1)
        return bad(p, "premise must duplicate exactly one formula");
      if (!zone_contains(c.gamma, extra[0], iequal))
        return bad(p, "duplicated formula must already occur");
      return CheckResult::good();
    }
    return bad(p, "unknown rule");
  }
};

}  // namespace detail

inline CheckResult check_lj(const ProofTree& p) {
  return detail::LjChecker().check(p);
}

// All proofs of gamma |- rhs with at most max_nodes inference nodes.
// Contraction is excluded by default so the result sits inside the
// domain of the linear-logic proof translation.
inline std::vector<ProofTree> enumerate_lj(const std::vector<IF>& gamma,
                                           const IF& rhs, int max_nodes,
                                           bool with_contraction = false) {
  std::vector<ProofTree> out;
  if (max_nodes <= 0) return out;
  LjSequent seq = lj_sequent(gamma, rhs);

  auto sub = [&](std::vector<IF> g, size_t i) {
    g.erase(g.begin() + static_cast<long>(i));
    return g;
  };
  auto with = [](std::vector<IF> g, const IF& f) {
    g.push_back(f);
    return g;
  };
  auto emit1 = [&](const char* rule, Inst inst,
                   const std::vector<ProofTree>& subs) {
    for (const ProofTree& q : subs)
      out.push_back(ProofTree{rule, seq, inst, {q}});
  };
  auto emit2 = [&](const char* rule, const std::vector<ProofTree>& as,
                   std::function<std::vector<ProofTree>(int)> bs_for) {
    for (const ProofTree& a : as) {
      int left = max_nodes - 1 - static_cast<int>(proof_nodes(a));
      for (const ProofTree& b : bs_for(left))
        out.push_back(ProofTree{rule, seq, Inst::none(), {a, b}});
    }
  };

  // axioms
  if (is_iatom(rhs) && detail::zone_contains(gamma, rhs, iequal))
    out.push_back(ProofTree{"Ax", seq, Inst::none(), {}});
  if (detail::zone_contains(gamma, ifalse(), iequal))
    out.push_back(ProofTree{"falseL", seq, Inst::none(), {}});
  if (rhs->kind == IKind::True)
    out.push_back(ProofTree{"trueR", seq, Inst::none(), {}});

  // right rules
  if (detail::lj_is_conj(rhs)) {
    emit2("&R", enumerate_lj(gamma, rhs->left, max_nodes - 1, with_contraction),
          [&](int left) {
            return enumerate_lj(gamma, rhs->right, left, with_contraction);
          });
  }
  if (rhs->kind == IKind::Disj) {
    emit1("|R", Inst::of_branch(1),
          enumerate_lj(gamma, rhs->left, max_nodes - 1, with_contraction));
    emit1("|R", Inst::of_branch(2),
          enumerate_lj(gamma, rhs->right, max_nodes - 1, with_contraction));
  }
  if (rhs->kind == IKind::Impl) {
    emit1("->R", Inst::none(),
          enumerate_lj(with(gamma, rhs->left), rhs->right, max_nodes - 1,
                       with_contraction));
  }

  // left rules, one position at a time (duplicate formulas at distinct
  // positions give identical premises, so positions are deduplicated)
  std::vector<IF> seen;
  for (size_t i = 0; i < gamma.size(); ++i) {
    const IF& f = gamma[i];
    if (detail::zone_contains(seen, f, iequal)) continue;
    seen.push_back(f);
    std::vector<IF> rest = sub(gamma, i);
    if (detail::lj_is_conj(f)) {
      emit1("&L", Inst::of_branch(1),
            enumerate_lj(with(rest, f->left), rhs, max_nodes - 1,
                         with_contraction));
      emit1("&L", Inst::of_branch(2),
            enumerate_lj(with(rest, f->right), rhs, max_nodes - 1,
                         with_contraction));
    }
    if (f->kind == IKind::Disj) {
      emit2("|L",
            enumerate_lj(with(rest, f->left), rhs, max_nodes - 1,
                         with_contraction),
            [&](int left) {
              return enumerate_lj(with(rest, f->right), rhs, left,
                                  with_contraction);
            });
    }
    if (f->kind == IKind::Impl) {
      emit2("->L",
            enumerate_lj(rest, f->left, max_nodes - 1, with_contraction),
            [&](int left) {
              return enumerate_lj(with(rest, f->right), rhs, left,
                                  with_contraction);
            });
    }
    if (with_contraction) {
      emit1("contract", Inst::none(),
            enumerate_lj(with(gamma, f), rhs, max_nodes - 1, true));
    }
  }
  return out;
}

}  // namespace focalis
