#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "focalis/iformula.hpp"
#include "focalis/search_ljf.hpp"

// Chaining benchmark: ground Horn clauses computing Fibonacci values.
// With all atoms positive the engine saturates forward and the proof
// grows linearly in n; with all atoms negative the engine decomposes
// the goal backward and the proof grows like the Fibonacci numbers
// themselves. The CSV output records both proof size and search effort.

namespace focalis {

inline long long fib_value(int n) {
  long long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline IF fib_atom(int k) {
  return iatom("fib", {Term::num(k), Term::num(fib_value(k))});
}

// fib(0,0), fib(1,1) and one ground chaining clause per step up to n
inline std::vector<IF> fib_clauses(int n) {
  std::vector<IF> hyps;
  hyps.push_back(fib_atom(0));
  if (n >= 1) hyps.push_back(fib_atom(1));
  for (int k = 0; k + 2 <= n; ++k)
    hyps.push_back(iimpl(iand_pos(fib_atom(k), fib_atom(k + 1)),
                         fib_atom(k + 2)));
  return hyps;
}

inline IF fib_goal(int n) { return fib_atom(n); }

struct ChainRow {
  int n = 0;
  bool provable = false;
  unsigned long long proof_nodes = 0;
  unsigned long long decides = 0;
  unsigned long long nodes_expanded = 0;
};

inline ChainRow run_chain_case(int n, Polarity bias, int max_decides = 64) {
  SearchConfig cfg;
  cfg.max_decides = max_decides;
  SearchResult res = prove_ljf(fib_clauses(n), fib_goal(n),
                               BiasMap::all(bias), cfg);
  ChainRow row;
  row.n = n;
  row.provable = res.outcome == SearchOutcome::Proved;
  row.proof_nodes = res.proof ? proof_nodes(*res.proof) : 0;
  row.decides = res.stats.decides;
  row.nodes_expanded = res.stats.nodes_expanded;
  return row;
}

inline std::vector<ChainRow> run_chain_bench(int max_n, Polarity bias,
                                             int max_decides = 64,
                                             int min_n = 2) {
  std::vector<ChainRow> rows;
  for (int n = min_n; n <= max_n; ++n)
    rows.push_back(run_chain_case(n, bias, max_decides));
  return rows;
}

inline std::string chain_csv(const std::vector<ChainRow>& rows) {
  std::ostringstream os;
  os << "n,provable,proof_nodes,decides,nodes_expanded\n";
  for (const ChainRow& r : rows)
    os << r.n << ',' << (r.provable ? 1 : 0) << ',' << r.proof_nodes << ','
       << r.decides << ',' << r.nodes_expanded << '\n';
  return os.str();
}

}  // namespace focalis
