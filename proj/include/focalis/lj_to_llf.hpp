#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "focalis/linear.hpp"
#include "focalis/lj.hpp"
#include "focalis/proof.hpp"
#include "focalis/sequent.hpp"

// Translation of two-sided sequent proofs into triadic linear-logic
// proofs along the goal/hypothesis translation pair: a sequent
// Gamma |- R becomes |- [duals of left images] [right image] ^ with
// every atom positive, and each inference expands into a fixed cluster
// of triadic rules (a decide, the synchronous steps for the image
// connectives, then the invertible steps back to the next border).
//
// The left zone on the linear side is persistent, while the input
// calculus consumes its principal formulas, so premise contexts on the
// linear side may carry extra stored formulas; they are never needed.
// Explicit contraction has no cluster of its own (its image would be
// invisible) and is rejected. One genuine corner is lossy: the left
// implication rule on A -> false translates to a tensor whose right
// component is top, which closes immediately, so the second input
// premise leaves no trace in the output.

namespace focalis {

struct MapError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

class LjToLlf {
 public:
  ProofTree map_root(const ProofTree& lj) {
    const LjSequent& s = std::get<LjSequent>(lj.conclusion);
    std::vector<LF> psi;
    for (const IF& h : s.gamma) psi.push_back(lneg(zeroone_left(h)));
    LF goal = zeroone_right(s.rhs);
    LlfSequent start = llf_async(psi, {}, {goal});
    // initial store of the goal image, then the first cluster
    ProofTree body = map_node(lj, psi, goal);
    return ProofTree{"store", start, Inst::none(), {std::move(body)}};
  }

 private:
  static const LjSequent& as_lj(const ProofTree& p) {
    return std::get<LjSequent>(p.conclusion);
  }

  [[noreturn]] static void reject(const ProofTree& p, const std::string& why) {
    throw MapError("unsupported rule: " + p.rule + " (" + why + ")");
  }

  // find the principal left formula for a consumption rule by matching
  // the first premise's context
  IF principal_of(const ProofTree& p, IKind k1, IKind k2) const {
    const LjSequent& c = as_lj(p);
    for (const IF& f : c.gamma) {
      if (f->kind != k1 && f->kind != k2) continue;
      std::vector<IF> rest = c.gamma;
      if (!multiset_subtract(rest, {f}, iequal)) continue;
      // verify against the stated premises
      bool ok = true;
      for (const ProofTree& q : p.premises) {
        std::vector<IF> qg = as_lj(q).gamma;
        std::vector<IF> probe = qg;
        if (!multiset_subtract(probe, rest, iequal)) {
          ok = false;
          break;
        }
      }
      if (ok) return f;
    }
    throw MapError("unsupported rule: " + p.rule +
                   " (no principal formula matches the premises)");
  }

  // border: |- [psi] [R] ^   with R the image of the node's goal
  ProofTree map_node(const ProofTree& p, const std::vector<LF>& psi,
                     const LF& rimg) {
    const LjSequent& c = as_lj(p);
    LlfSequent border = llf_async(psi, {rimg}, {});
    const std::string& r = p.rule;

    if (r == "Ax") {
      LlfSequent foc = llf_focus(psi, {}, rimg);
      ProofTree init{"init2", foc, Inst::none(), {}};
      return ProofTree{"decide1", border, Inst::none(), {std::move(init)}};
    }
    if (r == "trueR") {
      LlfSequent foc = llf_focus(psi, {}, rimg);  // rimg is 1
      ProofTree one{"one", foc, Inst::none(), {}};
      return ProofTree{"decide1", border, Inst::none(), {std::move(one)}};
    }
    if (r == "falseL") {
      LF f = ltop();  // dual of the image of falsity
      if (!zone_contains(psi, f, lequal))
        throw MapError("unsupported rule: falseL (no stored falsity image)");
      LlfSequent foc = llf_focus(psi, {rimg}, f);
      LlfSequent opened = llf_async(psi, {rimg}, {f});
      ProofTree top{"top", opened, Inst::none(), {}};
      ProofTree rel{"release", foc, Inst::none(), {std::move(top)}};
      return ProofTree{"decide2", border, Inst::none(), {std::move(rel)}};
    }

    if (r == "&L") {
      IF cf = principal_of(p, IKind::ConjPos, IKind::ConjNeg);
      int i = p.inst.branch;
      LF image = lneg(zeroone_left(cf));  // ?A' (+) ?B'
      LF picked = i == 1 ? image->left : image->right;  // ?A_i'
      LlfSequent foc = llf_focus(psi, {rimg}, image);
      LlfSequent focSel = llf_focus(psi, {rimg}, picked);
      LlfSequent opened = llf_async(psi, {rimg}, {picked});
      std::vector<LF> psi2 = psi;
      psi2.push_back(picked->left);
      ProofTree sub = map_node(p.premises[0], psi2, rimg);
      ProofTree quest{"?", opened, Inst::none(), {std::move(sub)}};
      ProofTree rel{"release", focSel, Inst::none(), {std::move(quest)}};
      ProofTree plus{"plus", foc, Inst::of_branch(i), {std::move(rel)}};
      return ProofTree{"decide2", border, Inst::none(), {std::move(plus)}};
    }
    if (r == "|L") {
      IF cf = principal_of(p, IKind::Disj, IKind::Disj);
      LF image = lneg(zeroone_left(cf));  // ?A' & ?B'
      LlfSequent foc = llf_focus(psi, {rimg}, image);
      LlfSequent opened = llf_async(psi, {rimg}, {image});
      ProofTree sides[2];
      for (int i = 0; i < 2; ++i) {
        LF part = i == 0 ? image->left : image->right;  // ?A_i'
        std::vector<LF> psi2 = psi;
        psi2.push_back(part->left);
        ProofTree sub = map_node(p.premises[static_cast<size_t>(i)], psi2,
                                 rimg);
        LlfSequent partSeq = llf_async(psi, {rimg}, {part});
        sides[i] = ProofTree{"?", partSeq, Inst::none(), {std::move(sub)}};
      }
      ProofTree with{"&", opened, Inst::none(),
                     {std::move(sides[0]), std::move(sides[1])}};
      ProofTree rel{"release", foc, Inst::none(), {std::move(with)}};
      return ProofTree{"decide2", border, Inst::none(), {std::move(rel)}};
    }
    if (r == "->L") {
      IF cf = principal_of(p, IKind::Impl, IKind::Impl);
      LF image = lneg(zeroone_left(cf));
      LlfSequent foc = llf_focus(psi, {rimg}, image);
      if (cf->right->kind == IKind::False) {
        // image is !A' (*) top: the right component absorbs everything
        LF lefti = image->left;  // !A'
        LlfSequent focL = llf_focus(psi, {}, lefti);
        LlfSequent listA = llf_async(psi, {}, {lefti->left});
        ProofTree subA = map_node(p.premises[0], psi, lefti->left);
        ProofTree store{"store", listA, Inst::none(), {std::move(subA)}};
        ProofTree bang{"bang", focL, Inst::none(), {std::move(store)}};
        LlfSequent focR = llf_focus(psi, {rimg}, image->right);  // top
        LlfSequent openedR = llf_async(psi, {rimg}, {image->right});
        ProofTree top{"top", openedR, Inst::none(), {}};
        ProofTree rel{"release", focR, Inst::none(), {std::move(top)}};
        ProofTree ten{"tensor", foc, Inst::none(),
                      {std::move(bang), std::move(rel)}};
        return ProofTree{"decide2", border, Inst::none(), {std::move(ten)}};
      }
      // image is !A' (*) ?B'
      LF lefti = image->left;    // !A'
      LF righti = image->right;  // ?B'
      LlfSequent focL = llf_focus(psi, {}, lefti);
      LlfSequent listA = llf_async(psi, {}, {lefti->left});
      ProofTree subA = map_node(p.premises[0], psi, lefti->left);
      ProofTree store{"store", listA, Inst::none(), {std::move(subA)}};
      ProofTree bang{"bang", focL, Inst::none(), {std::move(store)}};

      LlfSequent focR = llf_focus(psi, {rimg}, righti);
      LlfSequent openedR = llf_async(psi, {rimg}, {righti});
      std::vector<LF> psi2 = psi;
      psi2.push_back(righti->left);
      ProofTree subB = map_node(p.premises[1], psi2, rimg);
      ProofTree quest{"?", openedR, Inst::none(), {std::move(subB)}};
      ProofTree rel{"release", focR, Inst::none(), {std::move(quest)}};
      ProofTree ten{"tensor", foc, Inst::none(),
                    {std::move(bang), std::move(rel)}};
      return ProofTree{"decide2", border, Inst::none(), {std::move(ten)}};
    }

    if (r == "&R") {
      LF image = rimg;  // !(A' & B')
      LlfSequent foc = llf_focus(psi, {}, image);
      LlfSequent opened = llf_async(psi, {}, {image->left});
      LF wa = image->left->left;   // A'
      LF wb = image->left->right;  // B'
      ProofTree sides[2];
      const LF* parts[2] = {&wa, &wb};
      for (int i = 0; i < 2; ++i) {
        LlfSequent listSeq = llf_async(psi, {}, {*parts[i]});
        ProofTree sub =
            map_node(p.premises[static_cast<size_t>(i)], psi, *parts[i]);
        sides[i] = ProofTree{"store", listSeq, Inst::none(), {std::move(sub)}};
      }
      ProofTree with{"&", opened, Inst::none(),
                     {std::move(sides[0]), std::move(sides[1])}};
      ProofTree bang{"bang", foc, Inst::none(), {std::move(with)}};
      return ProofTree{"decide1", border, Inst::none(), {std::move(bang)}};
    }
    if (r == "|R") {
      int i = p.inst.branch;
      LF image = rimg;  // !A' (+) !B'
      LF picked = i == 1 ? image->left : image->right;  // !A_i'
      LlfSequent foc = llf_focus(psi, {}, image);
      LlfSequent focSel = llf_focus(psi, {}, picked);
      LlfSequent listSeq = llf_async(psi, {}, {picked->left});
      ProofTree sub = map_node(p.premises[0], psi, picked->left);
      ProofTree store{"store", listSeq, Inst::none(), {std::move(sub)}};
      ProofTree bang{"bang", focSel, Inst::none(), {std::move(store)}};
      ProofTree plus{"plus", foc, Inst::of_branch(i), {std::move(bang)}};
      return ProofTree{"decide1", border, Inst::none(), {std::move(plus)}};
    }
    if (r == "->R") {
      const LjSequent& cseq = as_lj(p);
      LF image = rimg;       // !(?A' par B')  or  !(0 par ?A') for negation
      LF body = image->left;  // the par
      LlfSequent foc = llf_focus(psi, {}, image);
      LlfSequent opened = llf_async(psi, {}, {body});
      if (cseq.rhs->right->kind == IKind::False) {
        // negation image: !(0 par ?A')
        LF zero = body->left;    // 0
        LF quest = body->right;  // ?A'
        LlfSequent afterPar = llf_async(psi, {}, {zero, quest});
        LlfSequent afterStore = llf_async(psi, {zero}, {quest});
        std::vector<LF> psi2 = psi;
        psi2.push_back(quest->left);
        ProofTree sub = map_node(p.premises[0], psi2, zero);
        ProofTree qn{"?", afterStore, Inst::none(), {std::move(sub)}};
        ProofTree st{"store", afterPar, Inst::none(), {std::move(qn)}};
        ProofTree par{"par", opened, Inst::none(), {std::move(st)}};
        ProofTree bang{"bang", foc, Inst::none(), {std::move(par)}};
        return ProofTree{"decide1", border, Inst::none(), {std::move(bang)}};
      }
      LF quest = body->left;  // ?A'
      LF rb = body->right;    // B'
      LlfSequent afterPar = llf_async(psi, {}, {quest, rb});
      std::vector<LF> psi2 = psi;
      psi2.push_back(quest->left);
      LlfSequent afterQuest = llf_async(psi2, {}, {rb});
      ProofTree sub = map_node(p.premises[0], psi2, rb);
      ProofTree st{"store", afterQuest, Inst::none(), {std::move(sub)}};
      ProofTree qn{"?", afterPar, Inst::none(), {std::move(st)}};
      ProofTree par{"par", opened, Inst::none(), {std::move(qn)}};
      ProofTree bang{"bang", foc, Inst::none(), {std::move(par)}};
      return ProofTree{"decide1", border, Inst::none(), {std::move(bang)}};
    }

    reject(p, "no triadic cluster for this rule");
  }
};

}  // namespace detail

// Translate a checked proof of the two-sided calculus into a triadic
// linear-logic proof (all atoms positive). Throws MapError on rules
// outside the propositional consumption fragment (e.g. contraction).
inline ProofTree lj_to_llf(const ProofTree& lj) {
  return detail::LjToLlf().map_root(lj);
}

}  // namespace focalis
