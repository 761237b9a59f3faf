#pragma once

#include <map>
#include <string>

namespace focalis {

enum class Polarity { Pos, Neg };

inline Polarity flip(Polarity p) {
  return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

// Atom bias assignment: a default polarity plus per-name overrides.
// Bias never changes provability, only the shape of focused proofs.
struct BiasMap {
  Polarity dflt = Polarity::Pos;
  std::map<std::string, Polarity> overrides;

  Polarity of(const std::string& atom) const {
    auto it = overrides.find(atom);
    return it == overrides.end() ? dflt : it->second;
  }

  static BiasMap all(Polarity p) { return BiasMap{p, {}}; }
};

}  // namespace focalis
