// Checkers and bounded enumerators for the triadic linear calculus and
// the two-sided sequent calculus: enumerated proofs must check, known
// proof counts must be exact, and broken derivations must be rejected.

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "focalis/check_llf.hpp"
#include "focalis/lj.hpp"
#include "focalis/parse.hpp"
#include "focalis/print.hpp"
#include "focalis/proof.hpp"
#include "focalis/search_llf.hpp"

using namespace focalis;

namespace {

std::vector<LF> lfs(const std::vector<std::string>& texts) {
  std::vector<LF> out;
  for (const std::string& s : texts) out.push_back(parse_lformula(s));
  return out;
}

std::vector<IF> ifs(const std::vector<std::string>& texts) {
  std::vector<IF> out;
  for (const std::string& s : texts) out.push_back(parse_iformula(s));
  return out;
}

size_t count_rule(const ProofTree& p, const std::string& rule) {
  size_t n = p.rule == rule ? 1 : 0;
  for (const ProofTree& q : p.premises) n += count_rule(q, rule);
  return n;
}

// apply fn to every node of a copy, returning the mutated copies
void for_each_node(ProofTree& p, const std::function<void(ProofTree&)>& fn) {
  fn(p);
  for (ProofTree& q : p.premises) for_each_node(q, fn);
}

}  // namespace

// ---- triadic enumeration ----

TEST(EnumerateLlf, MultiplicativeIdentityHasOneProof) {
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r = enumerate_llf({}, {}, lfs({"a^ par a"}), pos);
  ASSERT_TRUE(r.exhaustive);
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_TRUE(check_llf(r.proofs[0], pos).ok);
  EXPECT_EQ(count_rule(r.proofs[0], "par"), 1u);
  EXPECT_EQ(count_rule(r.proofs[0], "init1"), 1u);
}

TEST(EnumerateLlf, AdditivePairHasOneProofPerSide) {
  // (a^ & b^) alongside (a (+) b): each with-branch admits exactly the
  // matching plus-branch, so the cross product stays a single proof
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r =
      enumerate_llf({}, {}, lfs({"a^ & b^", "a (+) b"}), pos);
  ASSERT_TRUE(r.exhaustive);
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_TRUE(check_llf(r.proofs[0], pos).ok);
  EXPECT_EQ(count_rule(r.proofs[0], "&"), 1u);
  EXPECT_EQ(count_rule(r.proofs[0], "plus"), 2u);
}

TEST(EnumerateLlf, ChainingImageHasExactlyOneProof) {
  // the linear rendering of a, a -> b, b -> c |- c as one-sided
  // clauses: with every atom positive, focusing is forced into the
  // forward chain and the proof is unique
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r =
      enumerate_llf({}, {}, lfs({"a^", "a * b^", "b * c^", "c"}), pos);
  ASSERT_TRUE(r.exhaustive);
  ASSERT_EQ(r.proofs.size(), 1u);
  const ProofTree& p = r.proofs[0];
  EXPECT_TRUE(check_llf(p, pos).ok);
  EXPECT_EQ(count_rule(p, "decide1"), 3u);
  EXPECT_EQ(count_rule(p, "tensor"), 2u);
  EXPECT_EQ(count_rule(p, "init1"), 3u);
}

TEST(EnumerateLlf, BiasFlipsTheChainingProofShape) {
  // with every atom negative the duals become the decidable literals
  // and the chain runs through releases instead; the proof is still
  // unique but uses different clusters
  BiasMap neg = BiasMap::all(Polarity::Neg);
  EnumerationResult r =
      enumerate_llf({}, {}, lfs({"a^", "a * b^", "b * c^", "c"}), neg);
  ASSERT_TRUE(r.exhaustive);
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_TRUE(check_llf(r.proofs[0], neg).ok);
  EXPECT_GE(count_rule(r.proofs[0], "release"), 1u);
}

TEST(EnumerateLlf, UnboundedZoneNeedsTheBudget) {
  // deciding on an unbounded clause that refills the bounded zone can
  // repeat forever; the budget cuts the unprovable case off as
  // non-exhaustive
  BiasMap pos = BiasMap::all(Polarity::Pos);
  SearchConfig cfg;
  cfg.max_decides = 4;
  EnumerationResult r =
      enumerate_llf(lfs({"a^ par a"}), {}, lfs({"b"}), pos, cfg);
  EXPECT_TRUE(r.proofs.empty());
  EXPECT_FALSE(r.exhaustive);

  // the provable variant closes long before the budget
  EnumerationResult ok =
      enumerate_llf(lfs({"a"}), {}, lfs({"a^ par bot"}), pos, cfg);
  ASSERT_FALSE(ok.proofs.empty());
  EXPECT_TRUE(check_llf(ok.proofs[0], pos).ok);
  EXPECT_EQ(count_rule(ok.proofs[0], "decide2"), 1u);
}

TEST(EnumerateLlf, TopAbsorbsAnyBoundedZone) {
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r = enumerate_llf({}, lfs({"b^", "1"}), lfs({"top"}), pos);
  ASSERT_TRUE(r.exhaustive);
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_EQ(r.proofs[0].rule, "top");
}

// ---- triadic checker rejections ----

TEST(CheckLlf, RejectsTamperedDerivations) {
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r =
      enumerate_llf({}, {}, lfs({"a^ & b^", "a (+) b"}), pos);
  ASSERT_EQ(r.proofs.size(), 1u);

  // flipping any branch selector must break the proof
  ProofTree flipped = r.proofs[0];
  for_each_node(flipped, [](ProofTree& n) {
    if (n.inst.kind == Inst::Kind::Branch)
      n.inst = Inst::of_branch(3 - n.inst.branch);
  });
  EXPECT_FALSE(check_llf(flipped, pos).ok);

  // renaming a decide1 into decide2 breaks the zone bookkeeping
  ProofTree renamed = r.proofs[0];
  for_each_node(renamed, [](ProofTree& n) {
    if (n.rule == "decide1") n.rule = "decide2";
  });
  EXPECT_FALSE(check_llf(renamed, pos).ok);

  // the same proof under the opposite bias decides on negative literals
  EXPECT_FALSE(check_llf(r.proofs[0], BiasMap::all(Polarity::Neg)).ok);
}

TEST(CheckLlf, RejectsBadZoneSplits) {
  BiasMap pos = BiasMap::all(Polarity::Pos);
  // a correct tensor proof of |- [] [a^, b^] v a * b
  EnumerationResult r = enumerate_llf({}, {}, lfs({"a^", "b^", "a * b"}), pos);
  ASSERT_EQ(r.proofs.size(), 1u);
  ProofTree bad = r.proofs[0];
  bool grew = false;
  for_each_node(bad, [&](ProofTree& n) {
    if (grew || n.rule != "tensor") return;
    // duplicate the full bounded zone into the first premise
    LlfSequent& prem = std::get<LlfSequent>(n.premises[0].conclusion);
    prem.delta = std::get<LlfSequent>(n.conclusion).delta;
    grew = true;
  });
  ASSERT_TRUE(grew);
  EXPECT_FALSE(check_llf(bad, pos).ok);
}

TEST(CheckLlf, RejectsForeignCalculusAndUnknownRules) {
  BiasMap pos = BiasMap::all(Polarity::Pos);
  EnumerationResult r = enumerate_llf({}, {}, lfs({"1"}), pos);
  ASSERT_EQ(r.proofs.size(), 1u);
  ProofTree odd = r.proofs[0];
  odd.rule = "mix";
  EXPECT_FALSE(check_llf(odd, pos).ok);

  ProofTree foreign{"Ax", lj_sequent(ifs({"a"}), parse_iformula("a")),
                    Inst::none(), {}};
  EXPECT_FALSE(check_llf(foreign, pos).ok);
}

// ---- two-sided calculus ----

TEST(EnumerateLj, TinySequentsHaveExpectedCounts) {
  struct Case {
    std::vector<std::string> gamma;
    std::string rhs;
    size_t count;
  };
  const std::vector<Case> cases = {
      {{"a & b"}, "a", 1},       // project, then close
      {{"a"}, "a | b", 1},       // inject left
      {{"a", "a -> b"}, "b", 1}, // one modus ponens
      {{"a | b"}, "b | a", 1},   // split, then inject each side
  };
  for (const Case& c : cases) {
    std::vector<ProofTree> ps = enumerate_lj(ifs(c.gamma), parse_iformula(c.rhs), 6);
    EXPECT_EQ(ps.size(), c.count)
        << print_sequent(lj_sequent(ifs(c.gamma), parse_iformula(c.rhs)));
    for (const ProofTree& p : ps) {
      CheckResult r = check_lj(p);
      EXPECT_TRUE(r.ok) << r.error;
      EXPECT_EQ(count_rule(p, "contract"), 0u);
    }
  }
}

TEST(EnumerateLj, DuplicatedHypothesesGiveSeveralProofs) {
  // a & b, b & a |- a: either conjunction yields the goal, and spare
  // projections of the other hypothesis pad the count within the bound
  std::vector<IF> gamma = ifs({"a & b", "b & a"});
  std::vector<ProofTree> ps = enumerate_lj(gamma, parse_iformula("a"), 6);
  ASSERT_GT(ps.size(), 1u);
  std::set<std::string> rendered;
  for (const ProofTree& p : ps) {
    EXPECT_TRUE(check_lj(p).ok);
    EXPECT_LE(proof_nodes(p), 6u);
    rendered.insert(render_text(p));
  }
  EXPECT_EQ(rendered.size(), ps.size());  // the enumeration never repeats
}

TEST(EnumerateLj, NodeBoundIsRespected) {
  std::vector<ProofTree> none =
      enumerate_lj(ifs({"a", "a -> b"}), parse_iformula("b"), 2);
  EXPECT_TRUE(none.empty());  // modus ponens needs three nodes
  std::vector<ProofTree> some =
      enumerate_lj(ifs({"a", "a -> b"}), parse_iformula("b"), 3);
  EXPECT_EQ(some.size(), 1u);
}

TEST(EnumerateLj, ContractionIsOptIn) {
  // branching rules share the context, so a hypothesis only has to be
  // duplicated when one path needs both projections of a consumed
  // conjunction: a & (a -> b) |- b
  std::vector<IF> gamma = ifs({"a & (a -> b)"});
  IF goal = parse_iformula("b");
  EXPECT_TRUE(enumerate_lj(gamma, goal, 8).empty());
  std::vector<ProofTree> ps = enumerate_lj(gamma, goal, 8, true);
  ASSERT_FALSE(ps.empty());
  bool used = false;
  for (const ProofTree& p : ps) {
    EXPECT_TRUE(check_lj(p).ok);
    used = used || count_rule(p, "contract") > 0;
  }
  EXPECT_TRUE(used);
}

TEST(CheckLj, RejectsTamperedDerivations) {
  std::vector<ProofTree> ps =
      enumerate_lj(ifs({"a | b"}), parse_iformula("b | a"), 6);
  ASSERT_EQ(ps.size(), 1u);

  ProofTree flipped = ps[0];
  for_each_node(flipped, [](ProofTree& n) {
    if (n.inst.kind == Inst::Kind::Branch)
      n.inst = Inst::of_branch(3 - n.inst.branch);
  });
  EXPECT_FALSE(check_lj(flipped).ok);

  // an axiom with a compound goal
  ProofTree ax{"Ax", lj_sequent(ifs({"a & b"}), parse_iformula("a & b")),
               Inst::none(), {}};
  EXPECT_FALSE(check_lj(ax).ok);

  // ->R whose premise forgets the antecedent
  ProofTree inner{"Ax", lj_sequent({}, parse_iformula("a")), Inst::none(), {}};
  ProofTree arr{"->R", lj_sequent({}, parse_iformula("a -> a")), Inst::none(),
                {inner}};
  EXPECT_FALSE(check_lj(arr).ok);
}

// ---- systematic mutation rejection across both calculi ----

TEST(Mutation, BranchFlipsNeverCheck) {
  size_t mutants = 0;
  auto try_mutants = [&](const ProofTree& p,
                         const std::function<bool(const ProofTree&)>& ok) {
    // flip one branch selector at a time
    size_t sites = 0;
    ProofTree probe = p;
    for_each_node(probe, [&](ProofTree& n) {
      if (n.inst.kind == Inst::Kind::Branch) sites++;
    });
    for (size_t site = 0; site < sites; ++site) {
      ProofTree m = p;
      size_t at = 0;
      for_each_node(m, [&](ProofTree& n) {
        if (n.inst.kind != Inst::Kind::Branch) return;
        if (at++ == site) n.inst = Inst::of_branch(3 - n.inst.branch);
      });
      EXPECT_FALSE(ok(m));
      mutants++;
    }
  };

  BiasMap pos = BiasMap::all(Polarity::Pos);
  const std::vector<std::vector<std::string>> llf_lists = {
      {"a^ & b^", "a (+) b"},
      {"a^", "a * b^", "b * c^", "c"},
      {"(a^ & b^) par (a (+) b)"},
  };
  for (const auto& l : llf_lists) {
    for (const ProofTree& p : enumerate_llf({}, {}, lfs(l), pos).proofs)
      try_mutants(p, [&](const ProofTree& m) { return check_llf(m, pos).ok; });
  }

  const std::vector<std::pair<std::vector<std::string>, std::string>> ljs = {
      {{"a & b"}, "a"},
      {{"a"}, "a | b"},
      {{"a | b"}, "b | a"},
      {{"a & b", "b & a"}, "a"},
  };
  for (const auto& [gamma, rhs] : ljs) {
    for (const ProofTree& p : enumerate_lj(ifs(gamma), parse_iformula(rhs), 6))
      try_mutants(p, [](const ProofTree& m) { return check_lj(m).ok; });
  }
  EXPECT_GT(mutants, 20u);
}
