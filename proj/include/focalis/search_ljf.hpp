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
#include "focalis/sequent.hpp"

// Focused proof search for intuitionistic logic.
//
// The engine alternates an inversion phase (goal decomposed first, then
// the staging zone front to back, then the goal is boxed) with decide
// phases at border sequents. The decide budget is counted per branch
// and driven by iterative deepening; an iteration that fails without a
// single budget cutoff is a definitive refusal. Border repetition along
// the current branch is pruned by support-set keys (saturating
// hypotheses re-store the same formula, so multiset keys would never
// repeat), and failed borders are memoized when the failure did not
// lean on loop prunes against sequents above them.
//
// prove_ljf runs with the loop check on by default; enumerate_ljf
// always runs with it off, because distinct proofs may legitimately
// revisit a border (focus/release cycles), and counts within the decide
// bound must be exact.

namespace focalis {

struct SearchConfig {
  int max_decides = 64;          // per-branch decide budget
  bool loop_check = true;        // prune repeated borders on a branch
  bool reverse_choices = false;  // flip decide/disjunct/witness order
  std::vector<Term> domain;      // instantiation terms for exists-R/forall-L
  size_t enumerate_limit = std::numeric_limits<size_t>::max();
};

struct SearchStats {
  unsigned long long decides = 0;         // decide steps explored
  unsigned long long nodes_expanded = 0;  // rule applications explored
  unsigned long long backtracks = 0;      // failed alternatives
  unsigned long long budget_cutoffs = 0;  // branches stopped by the budget
  int depth_used = 0;                     // deepening level of the answer
};

enum class SearchOutcome { Proved, Unprovable, ResourceLimit };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Unprovable;
  std::optional<ProofTree> proof;
  SearchStats stats;
};

struct EnumerationResult {
  std::vector<ProofTree> proofs;
  bool exhaustive = false;  // no budget cutoff, no emit-limit stop
  SearchStats stats;
};

namespace detail {

class LjfSearch {
 public:
  LjfSearch(const BiasMap& bias, const SearchConfig& cfg)
      : bias_(bias), cfg_(cfg) {}

  SearchStats stats;

  struct State {
    std::vector<IF> gamma;
    std::deque<IF> theta;
    IF rhs;
    bool boxed = false;
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
  std::set<std::string> definitive_fail_;   // unprovable at any budget
  std::map<std::string, int> budget_fail_;  // key -> max budget that failed
  // smallest path index matched by a loop prune in the currently
  // returning subtree; INT_MAX when none
  int loop_floor_ = std::numeric_limits<int>::max();

  using Yd = const Yield&;

  bool pos(const IF& f) const { return ipolarity(f, bias_) == Polarity::Pos; }
  bool neg(const IF& f) const { return ipolarity(f, bias_) == Polarity::Neg; }

  // forward an emission and keep the global stop flag honest
  bool send(Yd y, ProofTree&& p) {
    if (stopped_) return false;
    if (!y(std::move(p))) stopped_ = true;
    return !stopped_;
  }

  static LjfSequent to_sequent(const State& s) {
    return ljf_async(s.gamma, {s.theta.begin(), s.theta.end()}, s.rhs, s.boxed);
  }

  Term fresh_eigen() { return Term::app("_e" + std::to_string(++eigen_n_)); }

  std::string border_key(const std::vector<IF>& gamma, const IF& rhs) const {
    std::set<std::string> support;
    for (const IF& f : gamma) support.insert(print(f));
    std::string key;
    for (const std::string& s : support) {
      key += s;
      key += ';';
    }
    key += '|';
    key += print(rhs);
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
  // returns whether at least one proof was emitted for this subgoal
  bool async_step(const State& s, int budget, Yd y) {
    if (stopped_) return false;
    stats.nodes_expanded++;
    LjfSequent seq = to_sequent(s);

    auto wrap1 = [&](const char* rule, Inst inst, const State& prem) {
      return async_step(prem, budget, [&, rule, inst](ProofTree&& sub) {
        return send(y, ProofTree{rule, seq, inst, {std::move(sub)}});
      });
    };

    // goal first, until it can be boxed
    if (!s.boxed) {
      if (s.rhs->kind == IKind::Impl) {
        State t = s;
        t.theta.push_back(s.rhs->left);
        t.rhs = s.rhs->right;
        return wrap1("->R", Inst::none(), t);
      }
      if (s.rhs->kind == IKind::ConjNeg) {
        State a = s, b = s;
        a.rhs = s.rhs->left;
        b.rhs = s.rhs->right;
        return both(
            [&](Yd k) { return async_step(a, budget, k); },
            [&](Yd k) { return async_step(b, budget, k); },
            [&](const ProofTree& pa, const ProofTree& pb) {
              return ProofTree{"&-R", seq, Inst::none(), {pa, pb}};
            },
            y);
      }
      if (s.rhs->kind == IKind::Forall) {
        Term e = fresh_eigen();
        State t = s;
        t.rhs = subst(s.rhs->left, s.rhs->name, e);
        return wrap1("forallR", Inst::of_term(e), t);
      }
    }

    // staging zone, front to back
    if (!s.theta.empty()) {
      IF f = s.theta.front();
      State rest = s;
      rest.theta.pop_front();
      switch (f->kind) {
        case IKind::False: {
          send(y, ProofTree{"falseL", seq, Inst::none(), {}});
          return true;
        }
        case IKind::True:
          return wrap1("trueL", Inst::none(), rest);
        case IKind::ConjPos: {
          State t = rest;
          t.theta.push_front(f->right);
          t.theta.push_front(f->left);
          return wrap1("&+L", Inst::none(), t);
        }
        case IKind::Disj: {
          State a = rest, b = rest;
          a.theta.push_front(f->left);
          b.theta.push_front(f->right);
          return both(
              [&](Yd k) { return async_step(a, budget, k); },
              [&](Yd k) { return async_step(b, budget, k); },
              [&](const ProofTree& pa, const ProofTree& pb) {
                return ProofTree{"|L", seq, Inst::none(), {pa, pb}};
              },
              y);
        }
        case IKind::Exists: {
          Term e = fresh_eigen();
          State t = rest;
          t.theta.push_front(subst(f->left, f->name, e));
          return wrap1("existsL", Inst::of_term(e), t);
        }
        default: {  // atom or negative formula: store it
          State t = rest;
          t.gamma.push_back(f);
          return wrap1("[]l", Inst::none(), t);
        }
      }
    }

    // box the goal, then decide
    if (!s.boxed) {
      State t = s;
      t.boxed = true;
      return wrap1("[]r", Inst::none(), t);
    }
    return border(s, budget, y);
  }

  // ---- decide phase at a border [G] --> [R] ----
  bool border(const State& s, int budget, Yd y) {
    if (stopped_) return false;
    std::string key = border_key(s.gamma, s.rhs);

    if (definitive_fail_.count(key)) return false;
    // the loop check comes before the budget memo: a border repeated on
    // its own path is discarded whatever the budget, and counting it as
    // a cutoff would keep every deepening iteration inconclusive
    if (cfg_.loop_check) {
      for (size_t i = 0; i < path_keys_.size(); ++i) {
        if (path_keys_[i] == key) {
          loop_floor_ = std::min(loop_floor_, static_cast<int>(i));
          return false;
        }
      }
    }
    auto bf = budget_fail_.find(key);
    if (bf != budget_fail_.end() && bf->second >= budget) {
      iter_cutoffs_++;
      stats.budget_cutoffs++;
      return false;
    }
    if (budget <= 0) {
      iter_cutoffs_++;
      stats.budget_cutoffs++;
      return false;
    }

    int my_index = static_cast<int>(path_keys_.size());
    path_keys_.push_back(key);
    int saved_floor = loop_floor_;
    loop_floor_ = std::numeric_limits<int>::max();
    unsigned long long cut_before = iter_cutoffs_;

    LjfSequent seq = to_sequent(s);
    struct Candidate {
      bool right;
      IF focus;  // Lf only
    };
    std::vector<Candidate> cands;
    if (pos(s.rhs)) cands.push_back({true, nullptr});
    std::vector<IF> seen;
    for (const IF& f : s.gamma) {
      if (!neg(f)) continue;
      if (zone_contains(seen, f, iequal)) continue;
      seen.push_back(f);
      cands.push_back({false, f});
    }
    cands = ordered(std::move(cands));

    bool any = false;
    for (const Candidate& cand : cands) {
      if (stopped_) break;
      stats.decides++;
      bool got;
      if (cand.right) {
        got = right_focus(s.gamma, s.rhs, budget - 1, [&](ProofTree&& sub) {
          return send(y, ProofTree{"Rf", seq, Inst::none(), {std::move(sub)}});
        });
      } else {
        got = left_focus(s.gamma, cand.focus, s.rhs, budget - 1,
                         [&](ProofTree&& sub) {
                           return send(y, ProofTree{"Lf", seq, Inst::none(),
                                                    {std::move(sub)}});
                         });
      }
      any = any || got;
      if (!got) stats.backtracks++;
    }

    path_keys_.pop_back();
    int mine = loop_floor_;
    if (!any && !stopped_ && mine >= my_index) {
      if (iter_cutoffs_ == cut_before)
        definitive_fail_.insert(key);
      else {
        int& slot = budget_fail_[key];
        slot = std::max(slot, budget);
      }
    }
    loop_floor_ = std::min(
        saved_floor, mine >= my_index ? std::numeric_limits<int>::max() : mine);
    return any;
  }

  // ---- right focus [G] => F ----
  bool right_focus(const std::vector<IF>& gamma, const IF& f, int budget,
                   Yd y) {
    if (stopped_) return false;
    stats.nodes_expanded++;
    LjfSequent seq = ljf_right_focus(gamma, f);

    if (is_iatom(f)) {
      if (pos(f)) {
        if (!zone_contains(gamma, f, iequal)) return false;
        send(y, ProofTree{"Ir", seq, Inst::none(), {}});
        return true;
      }
      State t{gamma, {}, f, false};  // release a negative-atom goal
      return async_step(t, budget, [&](ProofTree&& sub) {
        return send(y, ProofTree{"Rr", seq, Inst::none(), {std::move(sub)}});
      });
    }
    switch (f->kind) {
      case IKind::True:
        send(y, ProofTree{"trueR", seq, Inst::none(), {}});
        return true;
      case IKind::False:
        return false;  // no right rule for a false focus
      case IKind::ConjPos:
        return both(
            [&](Yd k) { return right_focus(gamma, f->left, budget, k); },
            [&](Yd k) { return right_focus(gamma, f->right, budget, k); },
            [&](const ProofTree& pa, const ProofTree& pb) {
              return ProofTree{"&+R", seq, Inst::none(), {pa, pb}};
            },
            y);
      case IKind::Disj: {
        bool got = false;
        for (int i : ordered(std::vector<int>{1, 2})) {
          if (stopped_) break;
          IF sel = i == 1 ? f->left : f->right;
          bool g = right_focus(gamma, sel, budget, [&](ProofTree&& a) {
            return send(
                y, ProofTree{"|R", seq, Inst::of_branch(i), {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      case IKind::Exists: {
        bool got = false;
        for (const Term& t : ordered(cfg_.domain)) {
          if (stopped_) break;
          IF body = subst(f->left, f->name, t);
          bool g = right_focus(gamma, body, budget, [&](ProofTree&& a) {
            return send(y, ProofTree{"existsR", seq, Inst::of_term(t),
                                     {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      default: {  // negative formula: release right
        State t{gamma, {}, f, false};
        return async_step(t, budget, [&](ProofTree&& sub) {
          return send(y, ProofTree{"Rr", seq, Inst::none(), {std::move(sub)}});
        });
      }
    }
  }

  // ---- left focus [G] -{F}-> [R] ----
  bool left_focus(const std::vector<IF>& gamma, const IF& f, const IF& rhs,
                  int budget, Yd y) {
    if (stopped_) return false;
    stats.nodes_expanded++;
    LjfSequent seq = ljf_left_focus(gamma, f, rhs);

    if (is_iatom(f) && neg(f)) {
      if (!iequal(f, rhs)) return false;
      send(y, ProofTree{"Il", seq, Inst::none(), {}});
      return true;
    }
    if (pos(f)) {  // release left
      State t{gamma, {f}, rhs, true};
      return async_step(t, budget, [&](ProofTree&& sub) {
        return send(y, ProofTree{"Rl", seq, Inst::none(), {std::move(sub)}});
      });
    }
    switch (f->kind) {
      case IKind::ConjNeg: {
        bool got = false;
        for (int i : ordered(std::vector<int>{1, 2})) {
          if (stopped_) break;
          IF sel = i == 1 ? f->left : f->right;
          bool g = left_focus(gamma, sel, rhs, budget, [&](ProofTree&& a) {
            return send(
                y, ProofTree{"&-L", seq, Inst::of_branch(i), {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      case IKind::Impl:
        // goal-directed: run the continuation premise first, but store
        // premises in rule order (=> A, then -{B}-> [R])
        return both(
            [&](Yd k) { return left_focus(gamma, f->right, rhs, budget, k); },
            [&](Yd k) { return right_focus(gamma, f->left, budget, k); },
            [&](const ProofTree& pb, const ProofTree& pa) {
              return ProofTree{"->L", seq, Inst::none(), {pa, pb}};
            },
            y);
      case IKind::Forall: {
        bool got = false;
        for (const Term& t : ordered(cfg_.domain)) {
          if (stopped_) break;
          IF body = subst(f->left, f->name, t);
          bool g = left_focus(gamma, body, rhs, budget, [&](ProofTree&& a) {
            return send(y, ProofTree{"forallL", seq, Inst::of_term(t),
                                     {std::move(a)}});
          });
          got = got || g;
          if (!g) stats.backtracks++;
        }
        return got;
      }
      default:
        return false;
    }
  }
};

}  // namespace detail

// prove from an arbitrary inversion-phase sequent
inline SearchResult prove_ljf_state(const std::vector<IF>& gamma,
                                    const std::vector<IF>& theta,
                                    const IF& goal, bool boxed,
                                    const BiasMap& bias,
                                    SearchConfig cfg = {}) {
  detail::LjfSearch engine(bias, cfg);
  detail::LjfSearch::State start{
      gamma, {theta.begin(), theta.end()}, goal, boxed};
  SearchResult res;
  for (int d = 0; d <= cfg.max_decides; ++d) {
    bool found = false;
    ProofTree proof;
    detail::LjfSearch::Yield take = [&](ProofTree&& p) {
      found = true;
      proof = std::move(p);
      return false;  // stop at the first proof
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

inline SearchResult prove_ljf(const std::vector<IF>& hyps, const IF& goal,
                              const BiasMap& bias, SearchConfig cfg = {}) {
  return prove_ljf_state({}, hyps, goal, false, bias, cfg);
}

inline EnumerationResult enumerate_ljf(const std::vector<IF>& hyps,
                                       const IF& goal, const BiasMap& bias,
                                       SearchConfig cfg = {}) {
  cfg.loop_check = false;  // counts must be exact within the decide bound
  detail::LjfSearch engine(bias, cfg);
  detail::LjfSearch::State start{{}, {hyps.begin(), hyps.end()}, goal, false};
  EnumerationResult res;
  detail::LjfSearch::Yield take = [&](ProofTree&& p) {
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
