#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "focalis/check_llf.hpp"  // llf_literal_positive / _negative
#include "focalis/lformula.hpp"
#include "focalis/print.hpp"
#include "focalis/proof.hpp"
#include "focalis/search_ljf.hpp"  // SearchConfig / SearchStats / results
#include "focalis/sequent.hpp"

// Bounded proof enumeration for the triadic linear sequents
// |- [Psi] [Delta] ^ L and |- [Psi] [Delta] v F. The bounded zone and
// the list shrink along every branch, so the only source of unbounded
// search is deciding on the unbounded zone; the per-branch decide
// budget cuts that off and the result reports whether any branch was
// cut. Tensor foci enumerate every distinct split of the bounded zone,
// which keeps this a tool for small sequents by design.

namespace focalis {

namespace detail {

class LlfEnum {
 public:
  LlfEnum(const BiasMap& bias, const SearchConfig& cfg)
      : bias_(bias), cfg_(cfg) {}

  SearchStats stats;
  bool cut = false;  // some branch ran out of decide budget

  std::vector<ProofTree> async_step(const std::vector<LF>& psi,
                                    const std::vector<LF>& delta,
                                    const std::vector<LF>& list, int budget) {
    stats.nodes_expanded++;
    LlfSequent seq = llf_async(psi, delta, list);
    std::vector<ProofTree> out;

    if (!list.empty()) {
      const LF& f = list.front();
      std::vector<LF> rest(list.begin() + 1, list.end());
      switch (f->kind) {
        case LKind::Bot:
          wrap1(out, "bot", seq, Inst::none(),
                async_step(psi, delta, rest, budget));
          return out;
        case LKind::Par: {
          std::vector<LF> opened = {f->left, f->right};
          opened.insert(opened.end(), rest.begin(), rest.end());
          wrap1(out, "par", seq, Inst::none(),
                async_step(psi, delta, opened, budget));
          return out;
        }
        case LKind::Quest: {
          std::vector<LF> grown = psi;
          grown.push_back(f->left);
          wrap1(out, "?", seq, Inst::none(),
                async_step(grown, delta, rest, budget));
          return out;
        }
        case LKind::Top:
          out.push_back(ProofTree{"top", seq, Inst::none(), {}});
          return out;
        case LKind::With: {
          std::vector<LF> la = {f->left};
          la.insert(la.end(), rest.begin(), rest.end());
          std::vector<LF> lb = {f->right};
          lb.insert(lb.end(), rest.begin(), rest.end());
          std::vector<ProofTree> as = async_step(psi, delta, la, budget);
          if (as.empty()) {
            stats.backtracks++;
            return out;
          }
          std::vector<ProofTree> bs = async_step(psi, delta, lb, budget);
          if (bs.empty()) {
            stats.backtracks++;
            return out;
          }
          for (const ProofTree& a : as)
            for (const ProofTree& b : bs)
              out.push_back(ProofTree{"&", seq, Inst::none(), {a, b}});
          return out;
        }
        case LKind::Forall: {
          Term e = fresh_eigen();
          std::vector<LF> opened = {subst(f->left, f->name, e)};
          opened.insert(opened.end(), rest.begin(), rest.end());
          wrap1(out, "forall", seq, Inst::of_term(e),
                async_step(psi, delta, opened, budget));
          return out;
        }
        default: {  // synchronous formula or literal: store it
          std::vector<LF> grown = delta;
          grown.push_back(f);
          wrap1(out, "store", seq, Inst::none(),
                async_step(psi, grown, rest, budget));
          return out;
        }
      }
    }

    // ---- decide phase ----
    struct Cand {
      bool from_delta;
      LF focus;
    };
    std::vector<Cand> cands;
    std::vector<LF> seen;
    for (const LF& f : delta) {
      if (llf_literal_negative(f, bias_)) continue;
      if (zone_contains(seen, f, lequal)) continue;
      seen.push_back(f);
      cands.push_back({true, f});
    }
    seen.clear();
    for (const LF& f : psi) {
      if (llf_literal_negative(f, bias_)) continue;
      if (zone_contains(seen, f, lequal)) continue;
      seen.push_back(f);
      cands.push_back({false, f});
    }
    if (cands.empty()) return out;
    if (budget <= 0) {
      cut = true;
      stats.budget_cutoffs++;
      return out;
    }
    if (cfg_.reverse_choices) std::reverse(cands.begin(), cands.end());

    for (const Cand& cand : cands) {
      stats.decides++;
      std::vector<LF> left = delta;
      if (cand.from_delta) multiset_subtract(left, {cand.focus}, lequal);
      std::vector<ProofTree> subs = sync_step(psi, left, cand.focus, budget - 1);
      if (subs.empty()) stats.backtracks++;
      wrap1(out, cand.from_delta ? "decide1" : "decide2", seq, Inst::none(),
            std::move(subs));
    }
    return out;
  }

  std::vector<ProofTree> sync_step(const std::vector<LF>& psi,
                                   const std::vector<LF>& delta, const LF& f,
                                   int budget) {
    stats.nodes_expanded++;
    LlfSequent seq = llf_focus(psi, delta, f);
    std::vector<ProofTree> out;

    switch (f->kind) {
      case LKind::One:
        if (delta.empty())
          out.push_back(ProofTree{"one", seq, Inst::none(), {}});
        return out;
      case LKind::Atom:
      case LKind::NegAtom: {
        if (llf_literal_positive(f, bias_)) {
          LF dual = lneg(f);
          if (delta.size() == 1 && lequal(delta[0], dual))
            out.push_back(ProofTree{"init1", seq, Inst::none(), {}});
          else if (delta.empty() && zone_contains(psi, dual, lequal))
            out.push_back(ProofTree{"init2", seq, Inst::none(), {}});
          return out;
        }
        // negative literal: release
        wrap1(out, "release", seq, Inst::none(),
              async_step(psi, delta, {f}, budget));
        return out;
      }
      case LKind::Tensor: {
        // enumerate every distinct multiset split of the bounded zone
        std::set<std::string> seen_splits;
        size_t n = delta.size();
        for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
          std::vector<LF> da, db;
          for (size_t i = 0; i < n; ++i)
            (mask >> i & 1 ? da : db).push_back(delta[i]);
          std::string sig = split_signature(da);
          if (!seen_splits.insert(sig).second) continue;
          std::vector<ProofTree> as = sync_step(psi, da, f->left, budget);
          if (as.empty()) {
            stats.backtracks++;
            continue;
          }
          std::vector<ProofTree> bs = sync_step(psi, db, f->right, budget);
          if (bs.empty()) {
            stats.backtracks++;
            continue;
          }
          for (const ProofTree& a : as)
            for (const ProofTree& b : bs)
              out.push_back(ProofTree{"tensor", seq, Inst::none(), {a, b}});
        }
        return out;
      }
      case LKind::Bang:
        if (!delta.empty()) return out;
        wrap1(out, "bang", seq, Inst::none(),
              async_step(psi, delta, {f->left}, budget));
        return out;
      case LKind::Plus: {
        for (int i : {1, 2}) {
          int b = cfg_.reverse_choices ? 3 - i : i;
          LF sel = b == 1 ? f->left : f->right;
          std::vector<ProofTree> subs = sync_step(psi, delta, sel, budget);
          if (subs.empty()) stats.backtracks++;
          wrap1(out, "plus", seq, Inst::of_branch(b), std::move(subs));
        }
        return out;
      }
      case LKind::Exists: {
        for (const Term& t : cfg_.domain) {
          std::vector<ProofTree> subs =
              sync_step(psi, delta, subst(f->left, f->name, t), budget);
          if (subs.empty()) stats.backtracks++;
          wrap1(out, "exists", seq, Inst::of_term(t), std::move(subs));
        }
        return out;
      }
      case LKind::Zero:
        return out;  // no rule for a zero focus
      default:  // asynchronous focus: release
        wrap1(out, "release", seq, Inst::none(),
              async_step(psi, delta, {f}, budget));
        return out;
    }
  }

 private:
  BiasMap bias_;
  SearchConfig cfg_;
  int eigen_n_ = 0;

  Term fresh_eigen() { return Term::app("_e" + std::to_string(++eigen_n_)); }

  static std::string split_signature(const std::vector<LF>& part) {
    std::vector<std::string> names;
    names.reserve(part.size());
    for (const LF& f : part) names.push_back(print(f));
    std::sort(names.begin(), names.end());
    std::string sig;
    for (const std::string& s : names) {
      sig += s;
      sig += ';';
    }
    return sig;
  }

  static void wrap1(std::vector<ProofTree>& out, const char* rule,
                    const LlfSequent& seq, Inst inst,
                    std::vector<ProofTree> subs) {
    for (ProofTree& s : subs)
      out.push_back(ProofTree{rule, seq, inst, {std::move(s)}});
  }
};

}  // namespace detail

inline EnumerationResult enumerate_llf(const std::vector<LF>& psi,
                                       const std::vector<LF>& delta,
                                       const std::vector<LF>& list,
                                       const BiasMap& bias,
                                       SearchConfig cfg = {}) {
  detail::LlfEnum e(bias, cfg);
  EnumerationResult res;
  res.proofs = e.async_step(psi, delta, list, cfg.max_decides);
  if (res.proofs.size() > cfg.enumerate_limit)
    res.proofs.resize(cfg.enumerate_limit);
  res.stats = e.stats;
  res.stats.depth_used = cfg.max_decides;
  res.exhaustive = !e.cut;
  return res;
}

inline SearchResult prove_llf(const std::vector<LF>& psi,
                              const std::vector<LF>& delta,
                              const std::vector<LF>& list, const BiasMap& bias,
                              SearchConfig cfg = {}) {
  detail::LlfEnum e(bias, cfg);
  std::vector<ProofTree> proofs = e.async_step(psi, delta, list, cfg.max_decides);
  SearchResult res;
  res.stats = e.stats;
  res.stats.depth_used = cfg.max_decides;
  if (!proofs.empty()) {
    res.outcome = SearchOutcome::Proved;
    res.proof = std::move(proofs.front());
  } else {
    res.outcome = e.cut ? SearchOutcome::ResourceLimit
                        : SearchOutcome::Unprovable;
  }
  return res;
}

}  // namespace focalis
