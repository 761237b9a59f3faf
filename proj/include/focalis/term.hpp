#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace focalis {

// First-order terms. Variables are uppercase identifiers bound by an
// enclosing quantifier; everything else is a (possibly nullary) function
// symbol. Numerals are nullary function symbols.
struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::App;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term app(std::string n, std::vector<Term> as = {}) {
    return {Kind::App, std::move(n), std::move(as)};
  }
  static Term num(long long v) { return app(std::to_string(v)); }
};

inline int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
  return 0;
}
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// true if the symbol (variable or function) occurs anywhere in t
inline bool occurs(const Term& t, const std::string& symbol) {
  if (t.name == symbol) return true;
  for (const auto& a : t.args)
    if (occurs(a, symbol)) return true;
  return false;
}

inline Term subst(const Term& t, const std::string& var, const Term& by) {
  if (t.kind == Term::Kind::Var && t.name == var) return by;
  Term r = t;
  for (auto& a : r.args) a = subst(a, var, by);
  return r;
}

inline bool is_ground(const Term& t) {
  if (t.kind == Term::Kind::Var) return false;
  for (const auto& a : t.args)
    if (!is_ground(a)) return false;
  return true;
}

// FNV-1a. Deterministic across runs and platforms, unlike std::hash.
inline uint64_t fnv1a(uint64_t h, const void* data, size_t n) {
  auto p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}
inline uint64_t fnv1a(uint64_t h, const std::string& s) {
  h = fnv1a(h, s.data(), s.size());
  return fnv1a(h, "\x1f", 1);  // length/field separator
}
inline uint64_t fnv1a(uint64_t h, uint64_t v) { return fnv1a(h, &v, sizeof v); }

constexpr uint64_t kFnvSeed = 14695981039346656037ull;

inline uint64_t term_hash(const Term& t) {
  uint64_t h = fnv1a(kFnvSeed, uint64_t(t.kind));
  h = fnv1a(h, t.name);
  for (const auto& a : t.args) h = fnv1a(h, term_hash(a));
  return h;
}

}  // namespace focalis
