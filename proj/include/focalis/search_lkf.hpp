#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "focalis/polarity.hpp"
#include "focalis/proof.hpp"
#include "focalis/search_ljf.hpp"  // SearchConfig / SearchStats / results
#include "focalis/sequent.hpp"

// Focused proof search for classical logic (one-sided sequents).
//
// The inversion phase decomposes the workbench front to back: negative
// connectives split, positive formulas and negative literals are
// stored. When the workbench drains, the engine decides on a stored
// positive formula; decide steps are budgeted per branch and driven by
// the same iterative-deepening loop as the intuitionistic engine.
// Branch keys pair the stored-zone support with the chosen focus.

namespace focalis {

namespace detail {

class LkfSearch {
 public:
  LkfSearch(const BiasMap& bias, const SearchConfig& cfg)
      : bias_(bias), cfg_(cfg) {}

  SearchStats stats;

  struct State {
    std::vector<CF> theta;  // stored zone
    std::deque<CF> gamma;   // workbench
  };

  using Yield = std::function<bool(ProofTree&&)>;

  void run(const State& start, int budget, const Yield& y) {
    iter_cutoffs_ = 0;
    stopped_ = false;
    path_keys_.clear();
    // budget-limited failures are only valid within one deepening
    // iteration: a stale entry would register a cutoff against a branch
    // the next iteration could finish, so no iteration would ever come
    // out clean and failure would never become definitive
    budget_fail_.clear();
    async_step(start, budget, y);
  }

  unsigned long long iter_cutoffs() const { return iter_cutoffs_; }
  bool stopped() const { return stopped_; }

 private:
  BiasMap bias_;
  SearchConfig cfg_;
  bool stopped_ = false;
  unsigned long long iter_cutoffs_ = 0;
  int eigen_n_ = 0;
  std::vector<std::string> path_keys_;
  std::set<std::string> definitive_fail_;
  std::map<std::string, int> budget_fail_;
  int loop_floor_ = std::numeric_limits<int>::max();

  using Yd = const Yield&;

  bool pos(const CF& f) const { return cpolarity(f, bias_) == Polarity::Pos; }
  bool is_literal(const CF& f) const {
    return f->kind == CKind::PosLit || f->kind == CKind::NegLit;
  }

  bool send(Yd y, ProofTree&& p) {
    if (stopped_) return false;
    if (!y(std::move(p))) stopped_ = true;
    return !stopped_;
  }

  static LkfSequent to_sequent(const State& s) {
    return lkf_async(s.theta, {s.gamma.begin(), s.gamma.end()});
  }

  Term fresh_eigen() { return Term::app("_e" + std::to_string(++eigen_n_)); }

  std::string decide_key(const std::vector<CF>& theta, const CF& focus) const {
    std::set<std::string> support;
    for (const CF& f : theta) support.insert(print(f));
    std::string key;
    for (const std::string& s : support) {
      key += s;
      key += ';';
    }
    key += '|';
    key += print(focus);
    return key;
  }

  template <typename T>
  std::vector<T> ordered(std::vector<T> v) const {
    if (cfg_.reverse_choices) std::reverse(v.begin(), v.end());
    return v;
  }

  // Generic two-premise composition. The second premise does not depend
  // on which first-premise proof was found, so it is searched exactly
  // once: one proof of the first premise is located and the stack is
  // unwound before the sibling runs — pairing in place would keep every
  // branch of the partial proof alive on the call stack at once, and
  // that grows exponentially in the decide budget on branchy formulas.
  // The sibling's proofs are streamed against that first proof (a prove
  // run that stops at its first proof never enumerates further) and
  // cached; only if the consumer then still wants more pairs is the
  // first premise re-enumerated, replaying the cache for each later
  // proof.
  template <typename FirstFn, typename SecondFn, typename MakeNode>
  bool both(FirstFn&& first, SecondFn&& second, MakeNode&& make, Yd y) {
    std::optional<ProofTree> pa1;
    first([&](ProofTree&& p) -> bool {
      pa1.emplace(std::move(p));
      return false;
    });
    if (!pa1) return false;  // emission-free run: premise 1 unprovable
    stopped_ = false;        // the stop above was ours, not the consumer's

    bool got = false;
    std::vector<ProofTree> cache;
    second([&](ProofTree&& pb) -> bool {
      got = true;
      bool more = send(y, make(*pa1, pb));
      cache.push_back(std::move(pb));
      return more;
    });
    if (stopped_) return got;
    if (cache.empty()) return false;  // sibling unprovable

    size_t seen = 0;
    first([&](ProofTree&& pa) -> bool {
      if (seen++ == 0) return true;  // already paired above
      for (const ProofTree& pb : cache)
        if (!send(y, make(pa, pb))) return false;
      return true;
    });
    return got;
  }

  // ---- inversion phase ----
  bool async_step(const State& s, int budget, Yd y) {
    if (stopped_) return false;
    stats.nodes_expanded++;
    LkfSequent seq = to_sequent(s);

    auto wrap1 = [&](const char* rule, Inst inst, const State& prem) {
      return async_step(prem, budget, [&, rule, inst](ProofTree&& sub) {
        return send(y, ProofTree{rule, seq, inst, {std::move(sub)}});
      });
    };

    if (!s.gamma.empty()) {
      CF f = s.gamma.front();
      State rest = s;
      rest.gamma.pop_front();
      switch (f->kind) {
        case CKind::NegFalse: {  // negation of the absurd: an axiom
          send(y, ProofTree{"absurd", seq, Inst::none(), {}});
          return true;
        }
        case CKind::NegTrue:
          return wrap1("trivial", Inst::none(), rest);
        case CKind::AndNeg: {
          State a = rest, b = rest;
          a.gamma.push_front(f->left);
          b.gamma.push_front(f->right);
          return both(
              [&](Yd k) { return async_step(a, budget, k); },
              [&](Yd k) { return async_step(b, budget, k); },
              [&](const ProofTree& pa, const ProofTree& pb) {
                return ProofTree{"&-", seq, Inst::none(), {pa, pb}};
              },
              y);
        }
        case CKind::OrNeg: {
          State t = rest;
          t.gamma.push_front(f->right);
          t.gamma.push_front(f->left);
          return wrap1("|-", Inst::none(), t);
        }
        case CKind::Forall: {
          Term e = fresh_eigen();
          State t = rest;
          t.gamma.push_front(subst(f->left, f->name, e));
          return wrap1("forall", Inst::of_term(e), t);
        }
        default: {  // positive formula or negative literal: store it
          State t = rest;
          t.theta.push_back(f);
          return wrap1("[]", Inst::none(), t);
        }
      }
    }
    return decide(s, budget, y);
  }

  // ---- decide phase: workbench empty ----
  bool decide(const State& s, int budget, Yd y) {
    if (stopped_) return false;

    LkfSequent seq = to_sequent(s);
    std::vector<CF> cands;
    for (const CF& f : s.theta) {
      if (!pos(f)) continue;
      if (zone_contains(cands, f, cequal)) continue;
      cands.push_back(f);
    }
    cands = ordered(std::move(cands));

    bool any = false;
    int my_index = static_cast<int>(path_keys_.size());
    int saved_floor = loop_floor_;
    loop_floor_ = std::numeric_limits<int>::max();

    for (const CF& f : cands) {
      if (stopped_) break;
      std::string key = decide_key(s.theta, f);
      if (definitive_fail_.count(key)) continue;
      // the loop check comes before the budget memo: a decide repeated on
      // its own path is discarded whatever the budget, and counting it as
      // a cutoff would keep every deepening iteration inconclusive
      if (cfg_.loop_check) {
        bool looped = false;
        for (size_t i = 0; i < path_keys_.size(); ++i) {
          if (path_keys_[i] == key) {
            loop_floor_ = std::min(loop_floor_, static_cast<int>(i));
            looped = true;
            break;
          }
        }
        if (looped) continue;
      }
      auto bf = budget_fail_.find(key);
      if (bf != budget_fail_.end() && bf->second >= budget) {
        iter_cutoffs_++;
        stats.budget_cutoffs++;
        continue;
      }
      if (budget <= 0) {
        iter_cutoffs_++;
        stats.budget_cutoffs++;
        continue;
      }

      stats.decides++;
      path_keys_.push_back(key);
      unsigned long long cand_cut_before = iter_cutoffs_;
      int cand_floor_saved = loop_floor_;
      loop_floor_ = std::numeric_limits<int>::max();

      bool got = sync_step(s.theta, f, budget - 1, [&](ProofTree&& sub) {
        return send(y, ProofTree{"Focus", seq, Inst::none(), {std::move(sub)}});
      });

      path_keys_.pop_back();
      int cand_floor = loop_floor_;
      if (!got && !stopped_ && cand_floor >= my_index) {
        if (iter_cutoffs_ == cand_cut_before)
          definitive_fail_.insert(key);
        else {
          int& slot = budget_fail_[key];
          slot = std::max(slot, budget);
        }
      }
      loop_floor_ =
          std::min(cand_floor_saved, cand_floor >= my_index
                                         ? std::numeric_limits<int>::max()
                                         : cand_floor);
      any = any || got;
      if (!got) stats.backtracks++;
    }

    loop_floor_ = std::min(saved_floor, loop_floor_);
    return any;
  }

  // ---- focused phase |- [Theta] <F> ----
  bool sync_step(const std::vector<CF>& theta, const CF& f, int budget, Yd y) {
    if (stopped_) return false;
    stats.nodes_expanded++;
    LkfSequent seq = lkf_focus(theta, f);

    if (is_literal(f)) {
      if (pos(f)) {
        if (!zone_contains(theta, cdual(f), cequal)) return false;
        const char* rule = f->kind == CKind::PosLit ? "ID+" : "ID-";
        send(y, ProofTree{rule, seq, Inst::none(), {}});
        return true;
      }
      // negative literal under focus: release and store
      State t{theta, {f}};
      return async_step(t, budget, [&](ProofTree&& sub) {
        return send(y,
                    ProofTree{"Release", seq, Inst::none(), {std::move(sub)}});
      });
    }
    switch (f->kind) {
      case CKind::True: {
        send(y, ProofTree{"indeed", seq, Inst::none(), {}});
        return true;
      }
      case CKind::False:
        return false;  // no rule for a false focus
      case CKind::AndPos:
        return both(
            [&](Yd k) { return sync_step(theta, f->left, budget, k); },
            [&](Yd k) { return sync_step(theta, f->right, budget, k); },
            [&](const ProofTree& pa, const ProofTree& pb) {
              return ProofTree{"&+", seq, Inst::none(), {pa, pb}};
            },
            y);
      case CKind::OrPos: {
        bool got = false;
        for (int i : ordered(std::vector<int>{1, 2})) {
          if (stopped_) break;
          CF sel = i == 1 ? f->left : f->right;
          bool g = sync_step(theta, sel, budget, [&](ProofTree&& a) {
            return send(
                y, ProofTree{"|+", seq, Inst::of_branch(i), {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      case CKind::Exists: {
        bool got = false;
        for (const Term& t : ordered(cfg_.domain)) {
          if (stopped_) break;
          CF body = subst(f->left, f->name, t);
          bool g = sync_step(theta, body, budget, [&](ProofTree&& a) {
            return send(y, ProofTree{"exists", seq, Inst::of_term(t),
                                     {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      default: {  // negative formula: release
        State t{theta, {f}};
        return async_step(t, budget, [&](ProofTree&& sub) {
          return send(
              y, ProofTree{"Release", seq, Inst::none(), {std::move(sub)}});
        });
      }
    }
  }
};

}  // namespace detail

inline SearchResult prove_lkf(const std::vector<CF>& goals,
                              const BiasMap& bias, SearchConfig cfg = {}) {
  detail::LkfSearch engine(bias, cfg);
  detail::LkfSearch::State start{{}, {goals.begin(), goals.end()}};
  SearchResult res;
  for (int d = 0; d <= cfg.max_decides; ++d) {
    bool found = false;
    ProofTree proof;
    detail::LkfSearch::Yield take = [&](ProofTree&& p) {
      found = true;
      proof = std::move(p);
      return false;
    };
    engine.run(start, d, take);
    res.stats = engine.stats;
    res.stats.depth_used = d;
    if (found) {
      res.outcome = SearchOutcome::Proved;
      res.proof = std::move(proof);
      return res;
    }
    if (engine.iter_cutoffs() == 0) {
      res.outcome = SearchOutcome::Unprovable;
      return res;
    }
  }
  res.outcome = SearchOutcome::ResourceLimit;
  return res;
}

inline SearchResult prove_lkf(const CF& goal, const BiasMap& bias,
                              SearchConfig cfg = {}) {
  return prove_lkf(std::vector<CF>{goal}, bias, cfg);
}

inline EnumerationResult enumerate_lkf(const std::vector<CF>& goals,
                                       const BiasMap& bias,
                                       SearchConfig cfg = {}) {
  cfg.loop_check = false;
  detail::LkfSearch engine(bias, cfg);
  detail::LkfSearch::State start{{}, {goals.begin(), goals.end()}};
  EnumerationResult res;
  detail::LkfSearch::Yield take = [&](ProofTree&& p) {
    res.proofs.push_back(std::move(p));
    return res.proofs.size() < cfg.enumerate_limit;
  };
  engine.run(start, cfg.max_decides, take);
  res.stats = engine.stats;
  res.stats.depth_used = cfg.max_decides;
  res.exhaustive = engine.iter_cutoffs() == 0 && !engine.stopped();
  return res;
}

}  // namespace focalis
