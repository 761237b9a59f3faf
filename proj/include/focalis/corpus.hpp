#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "focalis/bias.hpp"
#include "focalis/cformula.hpp"
#include "focalis/iformula.hpp"

// Deterministic formula corpora for cross-checking the search engines
// against independent oracles: an exhaustive propositional pool over a
// small alphabet, seeded random pools (intuitionistic and polarized
// classical), and the named bias presets used by the acceptance suite.

namespace focalis {

// every formula over the given atoms with at most max_conn binary
// connectives (atoms, truth and falsity are the leaves)
inline std::vector<IF> exhaustive_formulas(
    const std::vector<std::string>& atoms, int max_conn) {
  std::vector<std::vector<IF>> by_size(static_cast<size_t>(max_conn) + 1);
  for (const std::string& a : atoms) by_size[0].push_back(iatom(a));
  by_size[0].push_back(itrue());
  by_size[0].push_back(ifalse());
  for (int n = 1; n <= max_conn; ++n) {
    auto& bucket = by_size[static_cast<size_t>(n)];
    for (int k = 0; k < n; ++k) {
      for (const IF& l : by_size[static_cast<size_t>(k)]) {
        for (const IF& r : by_size[static_cast<size_t>(n - 1 - k)]) {
          bucket.push_back(iand_pos(l, r));
          bucket.push_back(iand_neg(l, r));
          bucket.push_back(ior(l, r));
          bucket.push_back(iimpl(l, r));
        }
      }
    }
  }
  std::vector<IF> out;
  for (const auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

inline IF random_iformula(std::mt19937_64& rng,
                          const std::vector<std::string>& atoms, int conn) {
  if (conn <= 0) {
    std::uniform_int_distribution<size_t> d(0, atoms.size() + 1);
    size_t k = d(rng);
    if (k < atoms.size()) return iatom(atoms[k]);
    return k == atoms.size() ? itrue() : ifalse();
  }
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<int> split(0, conn - 1);
  int l = split(rng);
  int r = conn - 1 - l;
  IF a = random_iformula(rng, atoms, l);
  IF b = random_iformula(rng, atoms, r);
  switch (op(rng)) {
    case 0: return iand_pos(a, b);
    case 1: return iand_neg(a, b);
    case 2: return ior(a, b);
    default: return iimpl(a, b);
  }
}

inline CF random_cformula(std::mt19937_64& rng,
                          const std::vector<std::string>& atoms, int conn) {
  if (conn <= 0) {
    std::uniform_int_distribution<size_t> d(0, 2 * atoms.size() + 3);
    size_t k = d(rng);
    if (k < atoms.size()) return cpos(atoms[k]);
    if (k < 2 * atoms.size()) return cneg(atoms[k - atoms.size()]);
    switch (k - 2 * atoms.size()) {
      case 0: return ctrue();
      case 1: return cfalse();
      case 2: return cneg_true();
      default: return cneg_false();
    }
  }
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<int> split(0, conn - 1);
  int l = split(rng);
  int r = conn - 1 - l;
  CF a = random_cformula(rng, atoms, l);
  CF b = random_cformula(rng, atoms, r);
  switch (op(rng)) {
    case 0: return cand_pos(a, b);
    case 1: return cand_neg(a, b);
    case 2: return cor_pos(a, b);
    default: return cor_neg(a, b);
  }
}

struct CorpusItem {
  std::vector<IF> hyps;
  IF goal;
};

// seeded pool of sequent problems: zero to two hypotheses per item, the
// connective budget shared between hypotheses and goal
inline std::vector<CorpusItem> random_corpus(
    uint64_t seed, int n, const std::vector<std::string>& atoms,
    int max_conn) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nh(0, 2);
  std::uniform_int_distribution<int> total(1, max_conn);
  std::vector<CorpusItem> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    CorpusItem item;
    int hyps = nh(rng);
    int budget = total(rng);
    for (int h = 0; h < hyps; ++h) {
      std::uniform_int_distribution<int> part(0, budget);
      int use = part(rng);
      budget -= use;
      item.hyps.push_back(random_iformula(rng, atoms, use));
    }
    item.goal = random_iformula(rng, atoms, budget);
    out.push_back(std::move(item));
  }
  return out;
}

inline std::vector<CF> random_classical_corpus(
    uint64_t seed, int n, const std::vector<std::string>& atoms,
    int max_conn) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> total(1, max_conn);
  std::vector<CF> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(random_cformula(rng, atoms, total(rng)));
  return out;
}

// bias presets: all_pos, all_neg, alternating (by atom position),
// random (seeded per atom)
inline BiasMap preset_bias(const std::string& name,
                           const std::vector<std::string>& atoms,
                           uint64_t seed = 0) {
  if (name == "all_pos") return BiasMap::all(Polarity::Pos);
  if (name == "all_neg") return BiasMap::all(Polarity::Neg);
  if (name == "alternating") {
    BiasMap b;
    for (size_t i = 0; i < atoms.size(); ++i)
      b.overrides[atoms[i]] = i % 2 == 0 ? Polarity::Pos : Polarity::Neg;
    return b;
  }
  if (name == "random") {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    BiasMap b;
    for (const std::string& a : atoms)
      b.overrides[a] = (rng() & 1) ? Polarity::Pos : Polarity::Neg;
    return b;
  }
  throw std::invalid_argument("unknown bias preset: " + name);
}

inline const std::vector<std::string>& bias_preset_names() {
  static const std::vector<std::string> names = {"all_pos", "all_neg",
                                                 "alternating", "random"};
  return names;
}

}  // namespace focalis
